#include "asciistego/canvas.hpp"

#include <algorithm>

#include "asciistego/error.hpp"

namespace asciistego {

Canvas Canvas::from_rows(std::span<const std::string> rows) {
  if (rows.empty()) throw Error(Errc::EmptyInput, "canvas has no rows");
  std::size_t width = 0;
  std::size_t offset = 0;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (!is_printable(row[i])) {
        throw Error(Errc::NonPrintable,
                    "non-printable character at offset " + std::to_string(offset + i), offset + i);
      }
    }
    width = std::max(width, row.size());
    offset += row.size() + 1;
  }
  if (width == 0) throw Error(Errc::EmptyInput, "canvas has zero width");

  std::string cells;
  cells.reserve(width * rows.size());
  for (const auto& row : rows) {
    cells += row;
    cells.append(width - row.size(), ' ');
  }
  return Canvas(width, rows.size(), std::move(cells));
}

std::vector<std::string> Canvas::rows() const {
  std::vector<std::string> out;
  out.reserve(height_);
  for (std::size_t r = 0; r < height_; ++r) out.emplace_back(row(r));
  return out;
}

char Canvas::at(LinearIndex i) const {
  if (i >= cells_.size()) {
    throw Error(Errc::IndexOutOfBounds,
                "index " + std::to_string(i) + " outside canvas of " +
                    std::to_string(cells_.size()) + " cells",
                i);
  }
  return cells_[i];
}

Canvas parse_canvas(std::string_view text) {
  if (text.empty()) throw Error(Errc::EmptyInput, "empty canvas text");
  if (text.back() == '\n') text.remove_suffix(1);

  std::vector<std::string> rows;
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      rows.emplace_back(text.substr(begin, i - begin));
      begin = i + 1;
    } else if (!is_printable(text[i])) {
      throw Error(Errc::NonPrintable, "non-printable character at offset " + std::to_string(i), i);
    }
  }
  return Canvas::from_rows(rows);
}

std::string serialize_canvas(const Canvas& c) {
  std::string out;
  out.reserve(c.size() + c.height());
  for (std::size_t r = 0; r < c.height(); ++r) {
    if (r != 0) out.push_back('\n');
    out += c.row(r);
  }
  return out;
}

char get_char(const Canvas& c, LinearIndex i) { return c.at(i); }

Canvas set_chars(const Canvas& c, std::span<const std::pair<LinearIndex, char>> assignments) {
  std::vector<std::string> rows = c.rows();
  for (const auto& [index, ch] : assignments) {
    if (index >= c.size()) {
      throw Error(Errc::IndexOutOfBounds, "index " + std::to_string(index) + " out of bounds", index);
    }
    if (!is_printable(ch)) {
      throw Error(Errc::NonPrintable, "replacement for cell " + std::to_string(index) +
                                          " is not printable",
                  index);
    }
    rows[index / c.width()][index % c.width()] = ch;
  }
  return Canvas::from_rows(rows);
}

}  // namespace asciistego
