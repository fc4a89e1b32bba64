#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace asciistego {

using Bytes = std::vector<std::uint8_t>;

// Lowercase hex.
std::string to_hex(std::span<const std::uint8_t> data);

// Accepts either case; nullopt on odd length or a non-hex digit.
std::optional<Bytes> from_hex(std::string_view text);

inline Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

}  // namespace asciistego
