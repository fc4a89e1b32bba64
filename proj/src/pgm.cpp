#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <optional>

#include "asciistego/canvas.hpp"
#include "asciistego/error.hpp"

namespace asciistego {

namespace {

[[noreturn]] void bad_image(const std::string& why) { throw Error(Errc::BadImage, "bad PGM: " + why); }

class PgmReader {
 public:
  explicit PgmReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t number(const char* what) {
    skip_space_and_comments();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      if (value > (std::numeric_limits<std::size_t>::max() - 9) / 10) bad_image(std::string(what) + " too large");
      value = value * 10 + (bytes_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) bad_image(std::string("expected ") + what);
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

std::optional<std::string> ramp_problem(std::string_view ramp) {
  if (ramp.size() < 2) return "ramp needs at least two characters";
  if (!std::all_of(ramp.begin(), ramp.end(), is_printable)) return "ramp contains non-printable characters";
  return std::nullopt;
}

struct Grid {
  std::size_t cols;
  std::size_t rows;
};

Grid output_grid(const GrayImage& img, std::size_t out_width, std::string_view ramp, double aspect) {
  if (auto why = ramp_problem(ramp)) throw Error(Errc::BadRamp, *why);
  if (out_width == 0) throw Error(Errc::BadImage, "output width must be at least 1");
  if (img.width == 0 || img.height == 0 || img.maxval == 0 ||
      img.pixels.size() != img.width * img.height) {
    throw Error(Errc::BadImage, "image has no pixels");
  }
  if (!(aspect > 0.0) || !std::isfinite(aspect)) throw Error(Errc::BadImage, "aspect must be positive");
  double scaled = static_cast<double>(img.height) * (static_cast<double>(out_width) / img.width) * aspect;
  auto rows = static_cast<std::size_t>(std::llround(scaled));
  return {out_width, std::max<std::size_t>(rows, 1)};
}

// Pixel span [lo, hi) covered by output cell `cell` of `cells`; never empty.
std::pair<std::size_t, std::size_t> block(std::size_t cell, std::size_t cells, std::size_t pixels) {
  std::size_t lo = cell * pixels / cells;
  std::size_t hi = (cell + 1) * pixels / cells;
  if (hi <= lo) hi = std::min(lo + 1, pixels);
  if (lo >= pixels) lo = pixels - 1;
  return {lo, hi};
}

// floor((255 - L) * n / 256) with L = 255 * sum / (count * maxval), kept in
// integers so the serial and parallel kernels agree bit for bit.
char cell_char(const GrayImage& img, Grid grid, std::size_t r, std::size_t c, std::string_view ramp) {
  auto [y0, y1] = block(r, grid.rows, img.height);
  auto [x0, x1] = block(c, grid.cols, img.width);
  std::uint64_t sum = 0;
  for (std::size_t y = y0; y < y1; ++y) {
    const std::uint8_t* line = img.pixels.data() + y * img.width;
    for (std::size_t x = x0; x < x1; ++x) sum += line[x];
  }
  std::uint64_t full = static_cast<std::uint64_t>((y1 - y0) * (x1 - x0)) * img.maxval;
  std::uint64_t index = 255 * (full - sum) * ramp.size() / (256 * full);
  return ramp[static_cast<std::size_t>(index)];
}

}  // namespace

GrayImage parse_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) bad_image("missing P2/P5 magic");
  bool raw = bytes[1] == '5';
  PgmReader in(bytes);
  in.advance(2);

  GrayImage img;
  img.width = in.number("width");
  img.height = in.number("height");
  std::size_t maxval = in.number("maxval");
  if (img.width == 0 || img.height == 0) bad_image("zero dimension");
  if (maxval == 0 || maxval > 255) bad_image("maxval must be in [1, 255]");
  img.maxval = static_cast<unsigned>(maxval);
  if (img.width > (std::size_t{1} << 32) / img.height) bad_image("image too large");
  std::size_t count = img.width * img.height;

  img.pixels.resize(count);
  if (raw) {
    if (in.remaining() == 0 || !std::isspace(in.peek())) bad_image("missing separator before raster");
    in.advance(1);
    if (in.remaining() < count) bad_image("truncated raster");
    std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(in.pos()), count, img.pixels.begin());
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t v = in.number("pixel value");
      img.pixels[i] = static_cast<std::uint8_t>(std::min<std::size_t>(v, 256));
      if (v > maxval) bad_image("pixel value exceeds maxval");
    }
  }
  if (raw) {
    for (std::uint8_t p : img.pixels) {
      if (p > maxval) bad_image("pixel value exceeds maxval");
    }
  }
  return img;
}

Canvas image_to_ascii(const GrayImage& img, std::size_t out_width, std::string_view ramp, double aspect) {
  Grid grid = output_grid(img, out_width, ramp, aspect);
  std::vector<std::string> rows(grid.rows, std::string(grid.cols, ' '));
  const auto nrows = static_cast<std::ptrdiff_t>(grid.rows);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < nrows; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    for (std::size_t c = 0; c < grid.cols; ++c) {
      row[c] = cell_char(img, grid, static_cast<std::size_t>(r), c, ramp);
    }
  }
  return Canvas::from_rows(rows);
}

Canvas image_to_ascii_serial(const GrayImage& img, std::size_t out_width, std::string_view ramp,
                             double aspect) {
  Grid grid = output_grid(img, out_width, ramp, aspect);
  std::vector<std::string> rows(grid.rows, std::string(grid.cols, ' '));
  for (std::size_t r = 0; r < grid.rows; ++r) {
    for (std::size_t c = 0; c < grid.cols; ++c) rows[r][c] = cell_char(img, grid, r, c, ramp);
  }
  return Canvas::from_rows(rows);
}

Canvas image_to_ascii(std::span<const std::uint8_t> pgm, std::size_t out_width, std::string_view ramp,
                      double aspect) {
  if (auto why = ramp_problem(ramp)) throw Error(Errc::BadRamp, *why);
  return image_to_ascii(parse_pgm(pgm), out_width, ramp, aspect);
}

}  // namespace asciistego
