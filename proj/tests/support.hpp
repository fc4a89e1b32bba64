#pragma once

// Shared generators and fixtures for the test binaries.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "asciistego/canvas.hpp"
#include "asciistego/codec94.hpp"
#include "asciistego/cryptobox.hpp"
#include "asciistego/segment_map.hpp"

namespace asciistego::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {  // inclusive
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline Bytes random_bytes(Rng& rng, std::size_t n) {
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng());
  return out;
}

inline Canvas random_canvas(Rng& rng, std::size_t width, std::size_t height) {
  static constexpr std::string_view kArt = " .:-=+*#%@/\\|_()<>";
  std::vector<std::string> rows(height, std::string(width, ' '));
  for (auto& row : rows) {
    for (auto& ch : row) ch = kArt[uniform(rng, 0, kArt.size() - 1)];
  }
  return Canvas::from_rows(rows);
}

inline std::string random_color(Rng& rng) {
  return format_color(Rgb{static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng()),
                          static_cast<std::uint8_t>(rng())});
}

/// 1..max_segments disjoint segments; seq ranks are distinct but shuffled
/// relative to position. Capacity is at least min_capacity.
inline SegmentMap random_map(Rng& rng, std::size_t cells, std::size_t max_segments, std::size_t min_capacity) {
  for (;;) {
    std::size_t k = uniform(rng, 1, std::min(max_segments, (cells + 1) / 2));
    std::vector<std::size_t> cuts;
    while (cuts.size() < 2 * k) {
      std::size_t p = uniform(rng, 0, cells);
      if (std::find(cuts.begin(), cuts.end(), p) == cuts.end()) cuts.push_back(p);
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::uint64_t> seqs;
    std::uint64_t next = uniform(rng, 0, 3);
    for (std::size_t i = 0; i < k; ++i) {
      seqs.push_back(next);
      next += uniform(rng, 1, 5);
    }
    std::shuffle(seqs.begin(), seqs.end(), rng);
    SegmentMap m;
    for (std::size_t i = 0; i < k; ++i) m.segments.push_back({cuts[2 * i], cuts[2 * i + 1], random_color(rng), seqs[i]});
    if (capacity(m) >= min_capacity) return m;
  }
}

inline crypto::MasterKey random_key(Rng& rng) { return crypto::MasterKey::from_bytes(random_bytes(rng, 32)); }

inline crypto::Salt fixed_salt(std::uint8_t v) {
  crypto::Salt s;
  s.fill(v);
  return s;
}
inline crypto::Nonce fixed_nonce(std::uint8_t v) {
  crypto::Nonce n;
  n.fill(v);
  return n;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline Bytes hex(std::string_view s) { return from_hex(s).value(); }

// Reference three-segment layout; segment 3 overlaps segment 1.
inline SegmentMap reference_map(bool with_overlap) {
  SegmentMap m;
  m.segments.push_back({13, 45, "#87ceeb", 1});
  m.segments.push_back({58, 69, "#FF0000", 2});
  if (with_overlap) m.segments.push_back({38, 42, "#000000", 3});
  return m;
}

}  // namespace asciistego::testing
