#pragma once

// Segment-placement automata: the toothpick structure, the corner structure,
// leftist toothpicks, T-toothpicks and Y-toothpicks.
//
// Plain, corner, leftist and T structures live on the doubled lattice: every
// coordinate is multiplied by two so that toothpick midpoints and endpoints
// are integer points and a unit toothpick spans two lattice steps. Vertical
// toothpicks sit on points with x + y even, horizontal ones on x + y odd.
//
// Y-toothpicks live on the honeycomb lattice in brick-wall coordinates: node
// (x, y) is joined to (x - 1, y), (x + 1, y) and to (x, y + 1) when x + y is
// even, (x, y - 1) when it is odd. A Y occupies the three edges at its node.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "tplab/sequence.hpp"

namespace tplab {

enum class Variant { toothpick, corner, leftist, t, y };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);

struct Point {
  std::int32_t x = 0;
  std::int32_t y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

inline std::uint64_t pack(Point p) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.x)) << 32) |
         static_cast<std::uint32_t>(p.y);
}

/// Orientation and kind of a placed piece. For T-toothpicks the suffix is the
/// direction the stem points; for Y-toothpicks it is the node parity.
enum class Shape : std::uint8_t {
  vertical,
  horizontal,
  half_east,  // corner seed: from the stored point to one lattice step east
  t_up,
  t_down,
  t_left,
  t_right,
  y_even,
  y_odd,
};

enum class SegmentKind { plain, half, t, y };

SegmentKind kind_of(Shape s);
/// Token used in the dump format.
std::string_view shape_token(Shape s);
/// Endpoint offsets relative to the stored point.
std::span<const Point> arm_offsets(Shape s);

struct Segment {
  Point mid;
  Shape shape = Shape::vertical;
  std::uint32_t stage = 0;

  std::vector<Point> endpoints() const;
};

enum class Role { end, midpoint };

struct Incidence {
  std::uint32_t segment;
  Role role;
  friend bool operator==(const Incidence&, const Incidence&) = default;
};

class ToothpickStructure {
 public:
  static constexpr std::uint32_t kNone = 0xffffffffU;

  /// Stage-0 state. Only the corner variant has anything at stage 0 (the
  /// half-toothpick seed, which is not counted).
  static ToothpickStructure init(Variant variant);

  /// Advances `stages` synchronous steps.
  void grow(std::size_t stages);

  Variant variant() const { return variant_; }
  std::size_t stage() const { return history_.size() - 1; }
  const std::vector<Segment>& segments() const { return segments_; }

  /// a(0..=stage) placements per stage, a(0) = 0.
  IntSequence added_per_stage() const;
  /// Counted pieces (the corner seed excluded).
  std::size_t count() const;

  bool is_exposed(Point p) const;
  /// Every exposed endpoint, sorted, from the incremental index.
  std::vector<Point> exposed() const;
  /// Same set recomputed from scratch over all segments; used to audit the index.
  std::vector<Point> exposed_brute_force() const;
  std::vector<Incidence> incidences(Point p) const;

  /// `stage token x y` per segment, sorted by (stage, token, x, y).
  std::string dump() const;

  /// Same-stage candidates that landed on one point and were merged into one placement.
  std::size_t merged_candidates() const { return merged_; }

 private:
  struct PointUse {
    std::uint32_t mid_segment = kNone;
    std::uint32_t end_owner = kNone;
    std::uint32_t ends = 0;
  };

  explicit ToothpickStructure(Variant variant);

  void place(Point mid, Shape shape, std::uint32_t stage);
  bool may_grow_from(const Segment& parent, Point end) const;
  Shape child_shape(const Segment& parent, Point end) const;
  const PointUse* use(Point p) const;

  Variant variant_;
  std::vector<Segment> segments_;
  absl::flat_hash_map<std::uint64_t, PointUse> points_;
  std::vector<std::size_t> history_;  // pieces added per stage, index 0 = stage 0
  std::size_t frontier_begin_ = 0;     // first segment placed in the latest stage
  std::size_t merged_ = 0;
};

/// tau(0..=n) for T-toothpicks; the first T has its stem pointing down.
IntSequence simulate_t_toothpick(std::size_t n);
/// Y-toothpick counts per stage, 0..=n.
IntSequence simulate_y_toothpick(std::size_t n);

struct BoundaryReport {
  std::int64_t height2 = 0;  // doubled units
  std::int64_t width2 = 0;
  std::size_t exposed_total = 0;
  std::size_t exposed_top = 0;        // ends of vertical segments on the top edge
  bool protrusion = false;            // corner: half-toothpick below the lower right corner
  std::size_t corner_protrusions = 0; // toothpick: exposed horizontal ends at the four corners
  std::size_t exposed_interior = 0;   // exposed ends strictly inside the bounding box
  double height() const { return static_cast<double>(height2) / 2.0; }
  double width() const { return static_cast<double>(width2) / 2.0; }
};

/// Corner structure at stage 2^k - 1, k >= 2. The height excludes the
/// protruding half-toothpick.
BoundaryReport corner_boundary_snapshot(const ToothpickStructure& s);
/// Toothpick structure at stage 2^k, k >= 2. The width excludes the
/// horizontal half-toothpicks protruding at the corners.
BoundaryReport toothpick_boundary_snapshot(const ToothpickStructure& s);

/// Leftist structure rotated a quarter turn anticlockwise with the originally
/// vertical toothpicks erased: row r holds r + 1 flags, flag j set when a
/// horizontal toothpick sits at position j of stage 2r + 1.
std::vector<std::vector<bool>> leftist_triangle(const ToothpickStructure& s);

/// Toothpicks whose centers lie strictly inside the first quadrant.
std::size_t first_quadrant_count(const ToothpickStructure& s);

}  // namespace tplab
