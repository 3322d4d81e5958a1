#pragma once

// Sparse cell automata on Z^d (d <= 4) with cells that are OFF, ON or DEAD.
// Once a cell leaves OFF it never changes again.

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "tplab/sequence.hpp"

namespace tplab {

enum class RuleKind { uw, moore8, moore8_corner1, moore8_corner2, rule942, toothpick_digraph, maltese };

/// How the DEAD-adjacency exception at stages n = 2 (mod 3) of the Maltese
/// automaton is read. `literal`: at such stages only cells that died at
/// stage n - 1 kill a candidate. `recent_dead_exempt`: at such stages cells
/// that died at stage n - 1 are ignored and older DEAD cells still kill.
enum class MalteseReading { literal, recent_dead_exempt };

struct RuleId {
  RuleKind kind = RuleKind::uw;
  unsigned dimension = 2;
  MalteseReading maltese_reading = MalteseReading::literal;

  static RuleId uw(unsigned d) { return {RuleKind::uw, d}; }
  static RuleId moore8() { return {RuleKind::moore8, 2}; }
  static RuleId moore8_corner1() { return {RuleKind::moore8_corner1, 2}; }
  static RuleId moore8_corner2() { return {RuleKind::moore8_corner2, 2}; }
  static RuleId rule942() { return {RuleKind::rule942, 2}; }
  static RuleId toothpick_digraph() { return {RuleKind::toothpick_digraph, 2}; }
  static RuleId maltese(MalteseReading r = MalteseReading::literal) { return {RuleKind::maltese, 2, r}; }
};

std::string rule_name(const RuleId& rule);
/// Names as used on the command line: uw, uw1..uw4, moore8, moore8-corner1,
/// moore8-corner2, rule942, digraph, maltese.
RuleId parse_rule(std::string_view name);

enum class CellState : std::uint8_t { off = 0, on = 1, dead = 2 };

using Cell = std::array<std::int32_t, 4>;

struct CellInfo {
  CellState state = CellState::off;
  std::uint32_t stage = 0;
};

class UnsupportedDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CellGrid {
 public:
  /// Largest |coordinate| representable in the packed key.
  static constexpr std::int32_t kMaxCoordinate = 32766;

  explicit CellGrid(RuleId rule);
  /// Grid holding exactly the given cells, stage set to the largest cell stage.
  static CellGrid from_cells(RuleId rule, const std::vector<std::pair<Cell, CellInfo>>& cells);

  /// Advances the automaton by `stages` synchronous steps. Stage 1 turns on
  /// the seed: the origin, or cell (0,1) for the second Moore corner rule.
  void run(std::size_t stages);

  const RuleId& rule() const { return rule_; }
  unsigned dimension() const { return rule_.dimension; }
  std::size_t stage() const { return activations_.size() - 1; }

  CellInfo info(const Cell& c) const;
  CellState state(const Cell& c) const { return info(c).state; }

  /// Cells turned ON per stage, a(0..=stage), a(0) = 0.
  IntSequence activations() const;
  /// Number of non-OFF cells.
  std::size_t size() const { return cells_.size(); }
  std::size_t on_count() const;

  /// Every non-OFF cell with its stage, sorted by coordinates.
  std::vector<std::pair<Cell, CellInfo>> cells() const;
  /// Stage at which each ON cell turned on, sorted by coordinates.
  std::vector<std::pair<Cell, std::uint32_t>> activation_map() const;

  /// `state stage x y [z [w]]` per non-OFF cell (state 1 = ON, 2 = DEAD),
  /// sorted by (state, stage, coordinates).
  std::string dump() const;

  /// Cells turned ON in the most recent stage.
  const std::vector<Cell>& last_activated() const { return last_on_; }

  static std::uint64_t key(const Cell& c);
  static Cell unkey(std::uint64_t k);

 private:
  struct Decision {
    Cell cell;
    CellState next;
  };

  void seed();
  void step();
  bool masked(const Cell& c) const;
  std::size_t on_neighbors(const Cell& c) const;
  std::vector<Cell> influence(const Cell& c) const;
  void step_maltese(std::uint32_t stage, std::vector<Decision>& out) const;

  RuleId rule_;
  absl::flat_hash_map<std::uint64_t, CellInfo> cells_;
  std::vector<std::size_t> activations_;
  std::vector<Cell> last_on_;
};

/// Per-stage activation counts a(0..=n).
IntSequence run(const RuleId& rule, std::size_t n);
IntSequence run_toothpick_digraph(std::size_t n);
IntSequence run_maltese(std::size_t n, MalteseReading reading = MalteseReading::literal);

/// Builds the Ulam-Warburton structure, swaps every ON cell for a five-cell
/// cross at three times the spacing, labels cells breadth-first from the
/// center starting at 1, and counts the cells carrying each label 0..=n.
IntSequence build_maltese_by_construction(std::size_t n);

/// Cells of the cross structure whose label is at most n, with labels.
CellGrid maltese_construction_grid(std::size_t n);

}  // namespace tplab
