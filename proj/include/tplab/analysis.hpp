#pragma once

// Derived analyses over engine outputs: enclosed regions, the T(n)/n^2
// ratio, tree checks and the quadrant count.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tplab/gridca.hpp"
#include "tplab/numkit.hpp"
#include "tplab/toothpick.hpp"

namespace tplab {

/// Axis-aligned box in doubled lattice units, x0 < x1 and y0 < y1.
struct Rect {
  std::int32_t x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  friend bool operator==(const Rect&, const Rect&) = default;
  friend auto operator<=>(const Rect&, const Rect&) = default;
};

class NonRectangularFace : public std::runtime_error {
 public:
  NonRectangularFace(const std::string& what, Rect box) : std::runtime_error(what), box(box) {}
  Rect box;  // bounding box of the offending face
};

struct RectangleReport {
  std::size_t count = 0;
  std::vector<Rect> regions;  // sorted
};

/// Bounded faces of a plain toothpick or corner structure. Each face is
/// found by flooding the unit cells of the doubled lattice; for the corner
/// structure the negative half-axes act as walls. Throws NonRectangularFace
/// if a face is not a rectangle.
RectangleReport detect_rectangles(const ToothpickStructure& s);

/// Number of bounded faces after each stage 0..=n.
std::vector<std::size_t> rectangle_counts(Variant variant, std::size_t n);

/// Nonnegative fraction in lowest terms.
struct Rational {
  Nat num = 0;
  Nat den = 1;

  static Rational make(Nat num, Nat den);
  double value() const;
  std::string str() const;  // "p/q"
  friend bool operator==(const Rational&, const Rational&) = default;
  friend bool operator<(const Rational& a, const Rational& b);
};

class RatioBoundViolation : public std::runtime_error {
 public:
  RatioBoundViolation(const std::string& what, std::size_t witness) : std::runtime_error(what), witness(witness) {}
  std::size_t witness;
};

struct RatioBoundReport {
  std::size_t n_max = 0;
  std::vector<std::size_t> equality_at;
};

/// Checks 3 T(n) <= 2 n^2 + n for 1 <= n <= n_max, with equality exactly at n = 2^k - 1.
RatioBoundReport ratio_bound_check(std::size_t n_max);

struct RatioSample {
  std::size_t n = 0;
  Rational x;      // i / 2^k
  Rational value;  // T(n) / n^2
  bool is_local_min = false;
};

struct LimitSample {
  unsigned k = 0;
  std::vector<RatioSample> samples;  // i = 0 .. 2^k - 1
  std::size_t min_index = 0;
};

/// E_k = {(i / 2^k, T(2^k + i) / (2^k + i)^2)}. k <= 22.
LimitSample sample_limit_function(unsigned k);
/// `x,value` per sample as exact fractions, with a header line.
std::string samples_csv(const LimitSample& e);

/// For each block 2^k <= n < 2^(k+1), the n where T(n)/n^2 is smallest
/// (first one on a tie), listed when it is at most n_max. The blocks run
/// between consecutive maxima at 2^k - 1.
std::vector<std::size_t> local_minima(std::size_t n_max);
/// Every 2 <= n <= n_max with T(n)/n^2 strictly below both neighbours, plus n = 1.
/// Finds many shallow dips inside each block besides the block minima.
std::vector<std::size_t> strict_local_minima(std::size_t n_max);

/// Which ON-node adjacencies the tree check uses. `induced` takes every edge
/// of the underlying graph whose ends are both ON. `activation` joins each
/// node only to the ON neighbours that were already ON when it switched on.
enum class TreeEdges { induced, activation };

struct TreeReport {
  bool is_tree = false;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  /// First cycle-closing edge found, as two nodes; empty if none.
  std::vector<Cell> cycle_witness;
};

TreeReport tree_check(const CellGrid& grid, TreeEdges edges = TreeEdges::induced);
/// Nodes are pieces; an edge means one piece has an end at the other's midpoint.
TreeReport tree_check(const ToothpickStructure& s, TreeEdges edges = TreeEdges::induced);

/// (T(n) - 3) / 4 for n >= 3, else 0.
Nat quadrant_Q(Nat n);

}  // namespace tplab
