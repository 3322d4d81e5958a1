#pragma once

// Deterministic SVG output for toothpick structures and planar cell grids.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "tplab/gridca.hpp"
#include "tplab/toothpick.hpp"

namespace tplab {

enum class ColorMode { by_stage, monochrome };

ColorMode parse_color_mode(std::string_view name);

/// Region to draw, in the engine's own lattice units.
struct ViewBox {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

struct RenderConfig {
  double scale = 8.0;  // pixels per lattice unit
  ColorMode color_mode = ColorMode::by_stage;
  std::optional<ViewBox> viewport;  // unset: fit the drawing with a one-unit margin
  bool show_exposed = false;
};

/// Stage s is drawn in stage_palette()[s % 16].
const std::array<std::string_view, 16>& stage_palette();

/// One <line> per toothpick, three per T- or Y-piece, in dump order. The
/// corner seed is a separate <path class="seed">. Exposed ends become
/// <circle> marks when requested.
std::string render_structure(const ToothpickStructure& s, const RenderConfig& cfg = {});

/// One <rect> per non-OFF cell in dump order; DEAD cells are drawn hollow.
/// Throws UnsupportedDimension unless the grid is planar.
std::string render_grid(const CellGrid& grid, const RenderConfig& cfg = {});

}  // namespace tplab
