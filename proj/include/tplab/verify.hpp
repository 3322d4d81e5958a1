#pragma once

// Cross-oracle harness: every named sequence is bound to the generators that
// can produce it, and crosscheck compares them pairwise.

#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tplab/sequence.hpp"

namespace tplab {

class BfileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FetchError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lines `index value`; `#` comments and blank lines are skipped. Indices
/// must be consecutive from the first one, which becomes the offset.
IntSequence parse_bfile(std::string_view text);
std::string format_bfile(const IntSequence& s);

struct FetchOptions {
  bool online = false;
  /// Content-addressed cache; empty means $TPLAB_CACHE_DIR, or no cache when unset.
  std::filesystem::path cache_dir;
  /// Bundled fixtures; empty means $TPLAB_FIXTURE_DIR, else the source tree copy.
  std::filesystem::path fixture_dir;
};

std::filesystem::path default_fixture_dir();

/// Offline: the cached copy if there is one, else the bundled fixture.
/// Online: downloads oeis.org/<id>/b<digits>.txt and stores it in the cache.
IntSequence fetch_bfile(const std::string& oeis_id, const FetchOptions& opts = {});

/// Stores `text` as objects/<sha256> and points refs/<id> at it; returns the digest.
std::string cache_store(const std::filesystem::path& cache_dir, const std::string& id, const std::string& text);
std::optional<std::string> cache_load(const std::filesystem::path& cache_dir, const std::string& id);
std::string sha256_hex(std::string_view data);

struct Generator {
  std::string name;  // unique within a binding, e.g. "simulate", "digraph"
  Method method = Method::simulate;
  std::size_t bound = 0;  // largest index this generator is asked for
  std::function<IntSequence(std::size_t n)> produce;  // terms up to index n
};

struct SequenceBinding {
  std::string name;
  std::optional<std::string> oeis_id;
  std::vector<Generator> generators;
  /// Divergence in a must-agree binding is a verification failure.
  bool must_agree = true;
  std::string note;

  /// Throws std::invalid_argument when the generator list is empty.
  SequenceBinding(std::string name, std::optional<std::string> oeis_id, std::vector<Generator> generators,
                  bool must_agree = true, std::string note = {});

  /// Generator by name, or by method tag name; nullptr when absent.
  const Generator* find(std::string_view key) const;
  /// Fastest generator: closed form, then recurrence, genfunc, simulation, fixture.
  const Generator& fastest() const;
};

struct PairResult {
  std::string left;
  std::string right;
  std::size_t lo = 0;  // compared indices lo .. hi-1
  std::size_t hi = 0;
  std::optional<std::size_t> first_divergence;
  std::string left_value;  // at the divergence
  std::string right_value;
};

struct VerifyReport {
  std::string name;
  bool must_agree = true;
  std::vector<PairResult> pairs;
  std::vector<std::string> errors;  // generators that threw, with the message

  bool agree() const;
  std::string to_text() const;
};

VerifyReport crosscheck(const SequenceBinding& binding, std::size_t n_max);

/// Every bound sequence, in a fixed order.
const std::vector<SequenceBinding>& bindings();
const SequenceBinding* find_binding(std::string_view name);

/// JSON array with one object per pair: name, pair, first_divergence, checked_range.
std::string reports_json(const std::vector<VerifyReport>& reports);

}  // namespace tplab
