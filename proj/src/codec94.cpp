#include "asciistego/codec94.hpp"

#include <algorithm>

#include "asciistego/error.hpp"

namespace asciistego::codec94 {

std::string encode(std::span<const std::uint8_t> data) {
  std::string out;
  out.reserve(encoded_len(data.size()));
  for (std::size_t i = 0; i < data.size(); i += 4) {
    std::size_t n = std::min<std::size_t>(4, data.size() - i);
    std::uint32_t value = 0;
    for (std::size_t k = 0; k < 4; ++k) value = (value << 8) | (k < n ? data[i + k] : 0u);

    char digits[5];
    for (int k = 4; k >= 0; --k) {
      digits[k] = digit_char(value % kRadix);
      value /= kRadix;
    }
    out.append(digits, n == 4 ? 5 : n + 1);
  }
  return out;
}

std::vector<std::uint8_t> decode(std::string_view text) {
  if (text.size() % 5 == 1) {
    throw Error(Errc::BadLength, "radix-94 text length " + std::to_string(text.size()) + " leaves a 1-digit group");
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!in_alphabet(text[i])) {
      throw Error(Errc::BadChar, "character outside radix-94 alphabet at position " + std::to_string(i), i);
    }
  }

  std::vector<std::uint8_t> out;
  out.reserve(text.size() / 5 * 4 + 4);
  for (std::size_t i = 0; i < text.size(); i += 5) {
    std::size_t m = std::min<std::size_t>(5, text.size() - i);
    std::uint64_t value = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      unsigned d = k < m ? static_cast<unsigned>(text[i + k] - kFirst) : kRadix - 1;
      value = value * kRadix + d;
    }
    if (value > 0xffffffffu) {
      throw Error(Errc::Overflow, "radix-94 group at position " + std::to_string(i) + " exceeds 32 bits", i);
    }
    std::size_t keep = m == 5 ? 4 : m - 1;
    for (std::size_t k = 0; k < keep; ++k) {
      out.push_back(static_cast<std::uint8_t>(value >> (24 - 8 * k)));
    }
  }
  return out;
}

}  // namespace asciistego::codec94
