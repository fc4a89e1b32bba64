#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <regex>

#include "asciistego/chroma.hpp"
#include "asciistego/error.hpp"
#include "support.hpp"

using namespace asciistego;
using namespace asciistego::testing;
namespace ch = asciistego::chroma;

namespace {

SegmentMap single(LinearIndex start, LinearIndex end, std::string color) {
  SegmentMap m;
  m.segments.push_back({start, end, std::move(color), 1});
  return m;
}

std::string strip_escapes(const std::string& s) { return std::regex_replace(s, std::regex("\x1b\\[[0-9;]*m"), ""); }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Io;
}

}  // namespace

TEST_CASE("render_ansi format") {
  CHECK(ch::render_ansi(parse_canvas("X"), single(0, 1, "#ff0000")) == "\x1b[38;2;255;0;0mX\x1b[0m");
  CHECK(ch::render_ansi(parse_canvas("AB"), single(0, 1, "#000000")) == "\x1b[38;2;0;0;0mA\x1b[0mB");
  CHECK(ch::render_ansi(parse_canvas("AB\nCD"), single(1, 3, "#87ceeb")) ==
        "A\x1b[38;2;135;206;235mB\x1b[0m\n\x1b[38;2;135;206;235mC\x1b[0mD");

  // Adjacent segments of equal color merge into one run.
  SegmentMap twins;
  twins.segments.push_back({0, 1, "#010203", 1});
  twins.segments.push_back({1, 2, "#010203", 2});
  CHECK(ch::render_ansi(parse_canvas("ab"), twins) == "\x1b[38;2;1;2;3mab\x1b[0m");

  CHECK(code_of([] { ch::render_ansi(parse_canvas("ab"), SegmentMap{}); }) == Errc::EmptyMap);
}

TEST_CASE("render_html") {
  CHECK(ch::render_html(parse_canvas("X"), single(0, 1, "#FF0000")) == "<pre><span style=\"color:#ff0000\">X</span></pre>");
  CHECK(ch::render_html(parse_canvas("<&>\nab"), single(3, 4, "#000000")) ==
        "<pre>&lt;&amp;&gt;\n<span style=\"color:#000000\">a</span>b </pre>");
}

TEST_CASE("html output never leaks raw markup characters") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::string> rows(uniform(rng, 1, 6));
    for (auto& row : rows) {
      row.resize(uniform(rng, 1, 20));
      for (auto& c : row) c = "<>&\"ab "[uniform(rng, 0, 6)];
    }
    Canvas c = Canvas::from_rows(rows);
    std::string html = ch::render_html(c, random_map(rng, c.size(), 3, 1));
    std::string stripped = std::regex_replace(html, std::regex("</?pre>|<span style=\"color:#[0-9a-f]{6}\">|</span>"), "");
    REQUIRE(stripped.find('<') == std::string::npos);
    REQUIRE(stripped.find('>') == std::string::npos);
    REQUIRE(std::regex_replace(stripped, std::regex("&(amp|lt|gt);"), "").find('&') == std::string::npos);
  }
}

TEST_CASE("parse_ansi") {
  auto plain = ch::parse_ansi("ab\ncd");
  CHECK(plain.canvas == parse_canvas("ab\ncd"));
  CHECK(std::all_of(plain.cell_colors.begin(), plain.cell_colors.end(), [](auto& c) { return !c; }));

  auto colored = ch::parse_ansi("\x1b[38;2;255;0;0mX\x1b[0m");
  CHECK(colored.canvas == parse_canvas("X"));
  CHECK(colored.cell_colors[0] == Rgb{255, 0, 0});

  auto ragged = ch::parse_ansi("abc\n\x1b[38;2;1;2;3mz\x1b[0m");
  CHECK(ragged.canvas.rows() == std::vector<std::string>{"abc", "z  "});
  CHECK(ragged.cell_colors[3] == Rgb{1, 2, 3});
  CHECK(!ragged.cell_colors[4]);

  try {
    ch::parse_ansi("ab\x1b[38;2;1");
    FAIL("truncated escape accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadEscape);
    CHECK(e.first() == 2);
  }
  CHECK(code_of([] { ch::parse_ansi("\x1b[1mX"); }) == Errc::BadEscape);
  CHECK(code_of([] { ch::parse_ansi("\x1b[38;2;256;0;0mX"); }) == Errc::BadEscape);
  CHECK(code_of([] { ch::parse_ansi("\x1b[38;2;1;2;3X"); }) == Errc::BadEscape);
  CHECK(code_of([] { ch::parse_ansi("X\x1b"); }) == Errc::BadEscape);
  CHECK(code_of([] { ch::parse_ansi("X\x07"); }) == Errc::NonPrintable);
}

TEST_CASE("render/parse identity and stripped text on random canvases") {
  Rng rng(1);
  for (int t = 0; t < 1000; ++t) {
    Canvas c = random_canvas(rng, uniform(rng, 1, 40), uniform(rng, 1, 12));
    SegmentMap m = random_map(rng, c.size(), 5, 1);
    std::string ansi = ch::render_ansi(c, m);
    REQUIRE(strip_escapes(ansi) == serialize_canvas(c));
    auto parsed = ch::parse_ansi(ansi);
    REQUIRE(parsed.canvas == c);
    REQUIRE(parsed.cell_colors == ch::cell_colors(c, m));
    REQUIRE(ch::check_colors(parsed, m).empty());
  }
}

TEST_CASE("check_colors pinpoints mismatches") {
  Canvas c = parse_canvas("abcdefghij");
  SegmentMap m = single(2, 5, "#87ceeb");
  auto cc = ch::parse_ansi(ch::render_ansi(c, m));
  CHECK(ch::check_colors(cc, m).empty());

  auto recolored = cc;
  recolored.cell_colors[3] = Rgb{0, 0, 0};
  auto mm = ch::check_colors(recolored, m);
  REQUIRE(mm.size() == 1);
  CHECK(mm[0] == ch::ColorMismatch{3, Rgb{0x87, 0xce, 0xeb}, Rgb{0, 0, 0}});

  auto decorated = cc;
  decorated.cell_colors[8] = Rgb{1, 1, 1};
  mm = ch::check_colors(decorated, m);
  REQUIRE(mm.size() == 1);
  CHECK(mm[0].index == 8);
  CHECK(!mm[0].expected);

  auto stripped = cc;
  stripped.cell_colors[2].reset();
  CHECK(ch::check_colors(stripped, m).at(0).index == 2);

  auto short_grid = cc;
  short_grid.cell_colors.pop_back();
  CHECK(code_of([&] { ch::check_colors(short_grid, m); }) == Errc::DimensionMismatch);
}
