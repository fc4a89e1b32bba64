#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "asciistego/canvas.hpp"
#include "asciistego/error.hpp"

namespace asciistego {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// "#rrggbb" in either case; nullopt otherwise.
std::optional<Rgb> parse_color(std::string_view text);
/// Lowercase "#rrggbb".
std::string format_color(Rgb c);
/// Lowercased copy when `text` is a valid color.
std::optional<std::string> normalize_color(std::string_view text);

/// Half-open, 0-based cell range [start, end) carrying payload characters,
/// read in ascending `seq` order.
struct Segment {
  LinearIndex start = 0;
  LinearIndex end = 0;
  std::string color;  // "#rrggbb"
  std::uint64_t seq = 0;

  std::size_t length() const noexcept { return end > start ? end - start : 0; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct SegmentMap {
  std::vector<Segment> segments;

  /// Copy sorted by seq (stable for duplicate ranks).
  std::vector<Segment> in_seq_order() const;
  friend bool operator==(const SegmentMap&, const SegmentMap&) = default;
};

/// Every problem with `m` against a canvas of `cells` cells; empty means
/// valid. Order: EmptyMap, then per segment in seq order BadColor and
/// OutOfBounds, then DuplicateSeq, then Overlap(lower seq, higher seq).
std::vector<Error> map_problems(const SegmentMap& m, std::size_t cells);
inline std::vector<Error> validate_map(const SegmentMap& m, const Canvas& c) {
  return map_problems(m, c.size());
}
/// Throws the first problem, if any.
void require_valid_map(const SegmentMap& m, std::size_t cells);

/// Sum of segment lengths.
std::size_t capacity(const SegmentMap& m);

/// "v1|" label "|" W "x" H "|" then "start,end,#color,seq;" per segment in
/// seq order. Doubles as the color string mixed into key derivation.
std::string canonical_aad(std::string_view label, std::size_t width, std::size_t height, const SegmentMap& m);

/// Every linear index covered by the map, in reading order.
std::vector<LinearIndex> segment_cells(const SegmentMap& m);

/// Map file: {"segments":[{"start":..,"end":..,"color":"#rrggbb","seq":..}]}.
/// Throws BadManifest on malformed input. Colors come back lowercased.
SegmentMap read_segment_map(std::string_view json_text);
std::string write_segment_map(const SegmentMap& m);

}  // namespace asciistego
