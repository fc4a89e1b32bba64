#include "asciistego/segment_map.hpp"

#include <algorithm>

#include "segment_json.hpp"

namespace asciistego {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string seq_str(std::uint64_t seq) { return std::to_string(seq); }

}  // namespace

std::optional<Rgb> parse_color(std::string_view text) {
  if (text.size() != 7 || text[0] != '#') return std::nullopt;
  std::uint8_t parts[3];
  for (int i = 0; i < 3; ++i) {
    int hi = hex_value(text[1 + 2 * i]);
    int lo = hex_value(text[2 + 2 * i]);
    if (hi < 0 || lo < 0) return std::nullopt;
    parts[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return Rgb{parts[0], parts[1], parts[2]};
}

std::string format_color(Rgb c) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = "#";
  for (std::uint8_t v : {c.r, c.g, c.b}) {
    out.push_back(kDigits[v >> 4]);
    out.push_back(kDigits[v & 0xf]);
  }
  return out;
}

std::optional<std::string> normalize_color(std::string_view text) {
  auto rgb = parse_color(text);
  if (!rgb) return std::nullopt;
  return format_color(*rgb);
}

std::vector<Segment> SegmentMap::in_seq_order() const {
  std::vector<Segment> out = segments;
  std::stable_sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) { return a.seq < b.seq; });
  return out;
}

std::vector<Error> map_problems(const SegmentMap& m, std::size_t cells) {
  std::vector<Error> problems;
  if (m.segments.empty()) {
    problems.emplace_back(Errc::EmptyMap, "segment map is empty");
    return problems;
  }
  const std::vector<Segment> ordered = m.in_seq_order();
  for (const Segment& s : ordered) {
    if (!parse_color(s.color)) {
      problems.emplace_back(Errc::BadColor, "segment " + seq_str(s.seq) + ": bad color '" + s.color + "'", s.seq);
    }
    if (s.start >= s.end || s.end > cells) {
      problems.emplace_back(Errc::OutOfBounds,
                            "segment " + seq_str(s.seq) + ": range [" + std::to_string(s.start) + "," +
                                std::to_string(s.end) + ") invalid for " + std::to_string(cells) + " cells",
                            s.seq);
    }
  }
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i].seq == ordered[i - 1].seq) {
      problems.emplace_back(Errc::DuplicateSeq, "duplicate seq " + seq_str(ordered[i].seq), ordered[i].seq);
    }
  }
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      const Segment& a = ordered[i];
      const Segment& b = ordered[j];
      if (a.start < b.end && b.start < a.end) {
        problems.emplace_back(Errc::Overlap,
                              "segments " + seq_str(a.seq) + " and " + seq_str(b.seq) + " overlap", a.seq,
                              b.seq);
      }
    }
  }
  return problems;
}

void require_valid_map(const SegmentMap& m, std::size_t cells) {
  auto problems = map_problems(m, cells);
  if (!problems.empty()) throw problems.front();
}

std::size_t capacity(const SegmentMap& m) {
  std::size_t total = 0;
  for (const Segment& s : m.segments) total += s.length();
  return total;
}

std::string canonical_aad(std::string_view label, std::size_t width, std::size_t height, const SegmentMap& m) {
  std::string out = "v1|";
  out += label;
  out += '|';
  out += std::to_string(width) + "x" + std::to_string(height) + "|";
  for (const Segment& s : m.in_seq_order()) {
    out += std::to_string(s.start) + "," + std::to_string(s.end) + ",";
    out += normalize_color(s.color).value_or(s.color);
    out += "," + std::to_string(s.seq) + ";";
  }
  return out;
}

std::vector<LinearIndex> segment_cells(const SegmentMap& m) {
  std::vector<LinearIndex> out;
  out.reserve(capacity(m));
  for (const Segment& s : m.in_seq_order()) {
    for (LinearIndex i = s.start; i < s.end; ++i) out.push_back(i);
  }
  return out;
}

SegmentMap read_segment_map(std::string_view json_text) {
  detail::ordered_json doc;
  try {
    doc = detail::ordered_json::parse(json_text);
  } catch (const detail::ordered_json::parse_error& e) {
    throw Error(Errc::BadManifest, std::string("bad segment map: ") + e.what());
  }
  detail::expect_keys(doc, {"segments"}, "map");
  return detail::segments_from_json(doc["segments"]);
}

std::string write_segment_map(const SegmentMap& m) {
  detail::ordered_json doc;
  doc["segments"] = detail::segments_to_json(m);
  return doc.dump(2) + "\n";
}

namespace detail {

void expect_keys(const ordered_json& obj, std::initializer_list<std::string_view> keys, const std::string& what) {
  if (!obj.is_object()) bad_manifest(what);
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) bad_manifest(it.key());
  }
  for (std::string_view k : keys) {
    if (!obj.contains(k)) bad_manifest(std::string(k));
  }
}

std::uint64_t get_uint(const ordered_json& obj, const char* key, const std::string& what) {
  const auto& v = obj.at(key);
  if (!v.is_number_unsigned()) bad_manifest(what.empty() ? key : what);
  return v.get<std::uint64_t>();
}

std::string get_string(const ordered_json& obj, const char* key, const std::string& what) {
  const auto& v = obj.at(key);
  if (!v.is_string()) bad_manifest(what.empty() ? key : what);
  return v.get<std::string>();
}

ordered_json segments_to_json(const SegmentMap& m) {
  ordered_json arr = ordered_json::array();
  for (const Segment& s : m.segments) {
    ordered_json o;
    o["start"] = s.start;
    o["end"] = s.end;
    o["color"] = normalize_color(s.color).value_or(s.color);
    o["seq"] = s.seq;
    arr.push_back(std::move(o));
  }
  return arr;
}

SegmentMap segments_from_json(const ordered_json& arr) {
  if (!arr.is_array()) bad_manifest("segments");
  SegmentMap m;
  for (const auto& o : arr) {
    expect_keys(o, {"start", "end", "color", "seq"}, "segments");
    Segment s;
    s.start = get_uint(o, "start", "segments");
    s.end = get_uint(o, "end", "segments");
    s.seq = get_uint(o, "seq", "segments");
    std::string color = get_string(o, "color", "segments");
    s.color = normalize_color(color).value_or(color);
    m.segments.push_back(std::move(s));
  }
  return m;
}

}  // namespace detail

}  // namespace asciistego
