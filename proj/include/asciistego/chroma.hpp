#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asciistego/canvas.hpp"
#include "asciistego/segment_map.hpp"

// Colored renderings of a stego canvas: the segment colors made visible,
// and read back for machine checking.
namespace asciistego::chroma {

using CellColor = std::optional<Rgb>;  // nullopt = default foreground

struct ColoredCanvas {
  Canvas canvas;
  std::vector<CellColor> cell_colors;  // row-major, canvas.size() entries
};

/// Per-cell colors implied by the map: segment color inside, default outside.
std::vector<CellColor> cell_colors(const Canvas& c, const SegmentMap& m);

/// Each maximal same-color run within a row becomes
/// ESC "[38;2;R;G;Bm" run ESC "[0m"; default cells are bare; rows joined
/// by '\n'.
std::string render_ansi(const Canvas& c, const SegmentMap& m);

/// <pre> block with colored runs in <span style="color:#rrggbb">; &, <, >
/// escaped.
std::string render_html(const Canvas& c, const SegmentMap& m);

/// Inverse of render_ansi. Accepts exactly the two escape forms it emits;
/// anything else is BadEscape(byte offset). Ragged rows are padded with
/// default-colored spaces.
ColoredCanvas parse_ansi(std::string_view text);

struct ColorMismatch {
  LinearIndex index = 0;
  CellColor expected;
  CellColor found;
  friend bool operator==(const ColorMismatch&, const ColorMismatch&) = default;
};

/// Empty when every segment cell carries its segment's color and every
/// other cell is default. Throws DimensionMismatch if the color grid does
/// not match the canvas.
std::vector<ColorMismatch> check_colors(const ColoredCanvas& cc, const SegmentMap& m);

std::string describe(const CellColor& c);

}  // namespace asciistego::chroma
