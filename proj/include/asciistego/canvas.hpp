#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace asciistego {

/// Row-major cell position with newlines excluded: cell (r, c) is r * width + c.
using LinearIndex = std::size_t;

inline constexpr bool is_printable(char ch) noexcept {
  return ch >= 0x20 && ch <= 0x7e;
}

/// Rectangular grid of printable ASCII. Immutable once built; edits
/// return a new value.
class Canvas {
 public:
  /// Rows must be non-empty and printable; ragged rows are space-padded.
  static Canvas from_rows(std::span<const std::string> rows);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return cells_.size(); }

  std::string_view row(std::size_t r) const noexcept {
    return std::string_view(cells_).substr(r * width_, width_);
  }
  std::vector<std::string> rows() const;

  /// All cells, row-major, no separators.
  std::string_view cells() const noexcept { return cells_; }

  char at(LinearIndex i) const;

  friend bool operator==(const Canvas&, const Canvas&) = default;

 private:
  Canvas(std::size_t width, std::size_t height, std::string cells)
      : width_(width), height_(height), cells_(std::move(cells)) {}

  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::string cells_;
};

// Throws NonPrintable(byte offset) or EmptyInput. A single trailing newline
// is ignored.
Canvas parse_canvas(std::string_view text);

// Rows joined by '\n', no trailing newline.
std::string serialize_canvas(const Canvas& c);

char get_char(const Canvas& c, LinearIndex i);
Canvas set_chars(const Canvas& c, std::span<const std::pair<LinearIndex, char>> assignments);

// ---------------------------------------------------------------------------
// Image to ASCII

inline constexpr std::string_view kDefaultRamp = " .:-=+*#%@";
inline constexpr double kDefaultAspect = 0.5;

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  unsigned maxval = 255;
  std::vector<std::uint8_t> pixels;  // row-major, each value <= maxval
};

/// Plain (P2) or raw (P5) PGM with maxval in [1, 255]. Throws BadImage.
GrayImage parse_pgm(std::span<const std::uint8_t> bytes);

/// Block-averages the image to out_width columns and
/// max(1, round(height * out_width / width * aspect)) rows, then maps each
/// cell's mean luminance L onto ramp[floor((255 - L) * len / 256)].
/// The ramp runs light to dense. Rows are computed in parallel when built
/// with OpenMP.
Canvas image_to_ascii(const GrayImage& img, std::size_t out_width,
                      std::string_view ramp = kDefaultRamp, double aspect = kDefaultAspect);
Canvas image_to_ascii(std::span<const std::uint8_t> pgm, std::size_t out_width,
                      std::string_view ramp = kDefaultRamp, double aspect = kDefaultAspect);

/// Single-threaded reference for image_to_ascii. Must agree cell for cell.
Canvas image_to_ascii_serial(const GrayImage& img, std::size_t out_width,
                             std::string_view ramp = kDefaultRamp,
                             double aspect = kDefaultAspect);

}  // namespace asciistego
