#include "asciistego/chroma.hpp"

#include "asciistego/error.hpp"

namespace asciistego::chroma {

namespace {

constexpr char kEsc = '\x1b';
constexpr std::string_view kReset = "\x1b[0m";
constexpr std::string_view kFgPrefix = "\x1b[38;2;";

std::string ansi_open(Rgb c) {
  return std::string(kFgPrefix) + std::to_string(c.r) + ";" + std::to_string(c.g) + ";" + std::to_string(c.b) + "m";
}

void append_html_escaped(std::string& out, char ch) {
  switch (ch) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    default: out.push_back(ch);
  }
}

// Calls emit(row, begin, end, color) for each maximal same-color run.
template <typename Emit>
void for_each_run(const Canvas& c, const std::vector<CellColor>& colors, Emit&& emit) {
  for (std::size_t r = 0; r < c.height(); ++r) {
    std::size_t base = r * c.width();
    std::size_t begin = 0;
    while (begin < c.width()) {
      std::size_t end = begin + 1;
      while (end < c.width() && colors[base + end] == colors[base + begin]) ++end;
      emit(r, begin, end, colors[base + begin]);
      begin = end;
    }
  }
}

// Parses "R;G;Bm" starting at pos; advances pos past 'm'.
std::optional<Rgb> parse_triplet(std::string_view text, std::size_t& pos) {
  unsigned parts[3];
  for (int k = 0; k < 3; ++k) {
    std::size_t digits = 0;
    unsigned v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9' && digits < 3) {
      v = v * 10 + static_cast<unsigned>(text[pos] - '0');
      ++pos;
      ++digits;
    }
    if (digits == 0 || v > 255 || pos >= text.size()) return std::nullopt;
    char sep = k < 2 ? ';' : 'm';
    if (text[pos] != sep) return std::nullopt;
    ++pos;
    parts[k] = v;
  }
  return Rgb{static_cast<std::uint8_t>(parts[0]), static_cast<std::uint8_t>(parts[1]),
             static_cast<std::uint8_t>(parts[2])};
}

}  // namespace

std::vector<CellColor> cell_colors(const Canvas& c, const SegmentMap& m) {
  require_valid_map(m, c.size());
  std::vector<CellColor> colors(c.size());
  for (const Segment& s : m.segments) {
    Rgb rgb = *parse_color(s.color);
    for (LinearIndex i = s.start; i < s.end; ++i) colors[i] = rgb;
  }
  return colors;
}

std::string render_ansi(const Canvas& c, const SegmentMap& m) {
  const auto colors = cell_colors(c, m);
  std::string out;
  out.reserve(c.size() + c.height() + 20 * m.segments.size());
  for_each_run(c, colors, [&](std::size_t r, std::size_t begin, std::size_t end, const CellColor& color) {
    if (r != 0 && begin == 0) out.push_back('\n');
    std::string_view run = c.row(r).substr(begin, end - begin);
    if (color) {
      out += ansi_open(*color);
      out += run;
      out += kReset;
    } else {
      out += run;
    }
  });
  return out;
}

std::string render_html(const Canvas& c, const SegmentMap& m) {
  const auto colors = cell_colors(c, m);
  std::string out = "<pre>";
  for_each_run(c, colors, [&](std::size_t r, std::size_t begin, std::size_t end, const CellColor& color) {
    if (r != 0 && begin == 0) out.push_back('\n');
    if (color) out += "<span style=\"color:" + format_color(*color) + "\">";
    for (char ch : c.row(r).substr(begin, end - begin)) append_html_escaped(out, ch);
    if (color) out += "</span>";
  });
  out += "</pre>";
  return out;
}

ColoredCanvas parse_ansi(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);

  std::vector<std::string> rows(1);
  std::vector<std::vector<CellColor>> row_colors(1);
  CellColor current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    char ch = text[pos];
    if (ch == '\n') {
      rows.emplace_back();
      row_colors.emplace_back();
      ++pos;
    } else if (ch == kEsc) {
      const std::size_t at = pos;
      if (text.substr(pos, kReset.size()) == kReset) {
        current.reset();
        pos += kReset.size();
      } else if (text.substr(pos, kFgPrefix.size()) == kFgPrefix) {
        pos += kFgPrefix.size();
        auto rgb = parse_triplet(text, pos);
        if (!rgb) throw Error(Errc::BadEscape, "malformed color escape at offset " + std::to_string(at), at);
        current = *rgb;
      } else {
        throw Error(Errc::BadEscape, "unrecognized escape sequence at offset " + std::to_string(at), at);
      }
    } else if (is_printable(ch)) {
      rows.back().push_back(ch);
      row_colors.back().push_back(current);
      ++pos;
    } else {
      throw Error(Errc::NonPrintable, "non-printable character at offset " + std::to_string(pos), pos);
    }
  }

  ColoredCanvas out{Canvas::from_rows(rows), {}};
  out.cell_colors.reserve(out.canvas.size());
  for (auto& colors : row_colors) {
    colors.resize(out.canvas.width());
    out.cell_colors.insert(out.cell_colors.end(), colors.begin(), colors.end());
  }
  return out;
}

std::vector<ColorMismatch> check_colors(const ColoredCanvas& cc, const SegmentMap& m) {
  if (cc.cell_colors.size() != cc.canvas.size()) {
    throw Error(Errc::DimensionMismatch, "color grid does not match canvas dimensions");
  }
  const auto expected = cell_colors(cc.canvas, m);
  std::vector<ColorMismatch> out;
  for (LinearIndex i = 0; i < expected.size(); ++i) {
    if (expected[i] != cc.cell_colors[i]) out.push_back({i, expected[i], cc.cell_colors[i]});
  }
  return out;
}

std::string describe(const CellColor& c) { return c ? format_color(*c) : std::string("default"); }

}  // namespace asciistego::chroma
