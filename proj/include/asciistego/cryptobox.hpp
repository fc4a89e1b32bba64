#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "asciistego/hex.hpp"

// Key derivation (HKDF-SHA-256), authenticated encryption
// (ChaCha20-Poly1305, RFC 8439), digests, and key-derived padding.
namespace asciistego::crypto {

inline constexpr std::size_t kKeySize = 32;
inline constexpr std::size_t kSaltSize = 16;
inline constexpr std::size_t kNonceSize = 12;
inline constexpr std::size_t kTagSize = 16;
inline constexpr std::size_t kMaxLabelSize = 64;

using Key = std::array<std::uint8_t, kKeySize>;
using Salt = std::array<std::uint8_t, kSaltSize>;
using Nonce = std::array<std::uint8_t, kNonceSize>;
using Digest = std::array<std::uint8_t, 32>;
using RowDigest = std::array<std::uint8_t, 8>;

/// 32-byte master secret. Wiped on destruction; never written anywhere
/// except the key file produced by keygen.
class MasterKey {
 public:
  static MasterKey from_bytes(std::span<const std::uint8_t> bytes);
  /// Key file body: 64 hex digits, optionally followed by one newline.
  static MasterKey from_key_file(std::string_view text);
  static MasterKey generate();

  MasterKey(const MasterKey&) = default;
  MasterKey& operator=(const MasterKey&) = default;
  ~MasterKey();

  std::span<const std::uint8_t, kKeySize> bytes() const noexcept { return secret_; }
  /// 64 lowercase hex digits and a trailing newline.
  std::string to_key_file() const;

 private:
  explicit MasterKey(const Key& secret) : secret_(secret) {}
  Key secret_{};
};

struct DatasetContext {
  Salt salt{};
  std::string label;
  Nonce nonce{};
  std::string color_string;
};

struct DerivedKeys {
  Key data_key{};
  Key pad_secret{};
};

void check_label(std::string_view label);

/// PRK = Extract(salt, master);
/// data_key = Expand(PRK, "ascii-stego/v1/data" || label || color_string, 32);
/// pad_secret = Expand(PRK, "ascii-stego/v1/pad" || label, 32).
/// Throws BadLabel.
DerivedKeys derive_keys(const MasterKey& mk, const DatasetContext& ctx);

Digest hkdf_extract(std::span<const std::uint8_t> salt, std::span<const std::uint8_t> ikm);
// length <= 255 * 32.
Bytes hkdf_expand(std::span<const std::uint8_t> prk, std::span<const std::uint8_t> info, std::size_t length);

/// Ciphertext is plaintext.size() + 16 bytes with the tag appended.
Bytes seal(std::span<const std::uint8_t, kKeySize> key, const Nonce& nonce,
           std::span<const std::uint8_t> plaintext, std::span<const std::uint8_t> aad);
/// Throws AuthenticationFailed on any tag mismatch.
Bytes open(std::span<const std::uint8_t, kKeySize> key, const Nonce& nonce,
           std::span<const std::uint8_t> ciphertext, std::span<const std::uint8_t> aad);

Digest digest(std::span<const std::uint8_t> data);
inline Digest digest(std::string_view s) {
  return digest(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}
RowDigest row_digest(std::span<const std::uint8_t> data);
inline RowDigest row_digest(std::string_view s) {
  return row_digest(std::span(reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

/// n camouflage characters: Alphabet94[stream[i] mod 94] where stream is
/// HKDF-Expand(pad_secret, "fill", n). Past the 8160-byte HKDF output limit
/// the stream continues in 8160-byte blocks keyed with "fill" || be32(block).
std::string pad_chars(std::span<const std::uint8_t, kKeySize> pad_secret, std::size_t n);

/// Cryptographically secure random bytes.
void random_bytes(std::span<std::uint8_t> out);

}  // namespace asciistego::crypto
