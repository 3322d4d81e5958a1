#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tplab/numkit.hpp"

namespace tplab {

enum class Method { simulate, recurrence, closedform, genfunc, fixture };

std::string_view method_name(Method m);
/// Accepts the tag names plus the CLI alias "formula" for closedform.
Method parse_method(std::string_view name);

/// Finite prefix of a nonnegative integer sequence: terms[j] is the value at
/// index offset + j.
struct IntSequence {
  std::size_t offset = 0;
  std::vector<Nat> terms;
  std::string label;
  Method generator = Method::simulate;

  std::size_t size() const { return terms.size(); }
  bool empty() const { return terms.empty(); }
  /// Index one past the last stored term.
  std::size_t end_index() const { return offset + terms.size(); }
  bool contains(std::size_t index) const { return index >= offset && index < end_index(); }
  /// Value at absolute index; throws std::out_of_range outside the prefix.
  Nat at(std::size_t index) const;

  /// Running totals A(n) = a(offset) + ... + a(n).
  IntSequence partial_sums() const;
  /// First differences a(n) - a(n-1), with the first term kept as is.
  IntSequence differences() const;
  /// Keeps the first `count` terms.
  IntSequence prefix(std::size_t count) const;
};

}  // namespace tplab
