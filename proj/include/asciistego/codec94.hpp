#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Radix-94 binary-to-text codec over the printable ASCII range '!'..'~'.
// Space is excluded so it stays available as art background.
//
// Each 4-byte big-endian group becomes 5 digits, most significant first.
// A trailing group of n bytes (n = 1..3) is zero-padded, encoded, and cut
// to n + 1 digits. Decoding refills a short group with '~' (the top digit),
// which restores the kept bytes exactly for any radix below 256.
namespace asciistego::codec94 {

inline constexpr std::size_t kRadix = 94;
inline constexpr char kFirst = '!';
inline constexpr char kLast = '~';

inline constexpr bool in_alphabet(char ch) noexcept { return ch >= kFirst && ch <= kLast; }
inline constexpr char digit_char(unsigned d) noexcept { return static_cast<char>(kFirst + d); }

std::string encode(std::span<const std::uint8_t> data);

// Throws BadChar(position), BadLength when size % 5 == 1, or Overflow when
// a group exceeds 2^32 - 1.
std::vector<std::uint8_t> decode(std::string_view text);

constexpr std::size_t encoded_len(std::size_t n) noexcept {
  return 5 * (n / 4) + (n % 4 == 0 ? 0 : n % 4 + 1);
}

// Largest n with encoded_len(n) <= capacity.
constexpr std::size_t max_payload(std::size_t capacity) noexcept {
  std::size_t tail = capacity % 5;
  return 4 * (capacity / 5) + (tail >= 2 ? tail - 1 : 0);
}

}  // namespace asciistego::codec94
