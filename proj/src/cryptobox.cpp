#include "asciistego/cryptobox.hpp"

#include <openssl/core_names.h>
#include <openssl/crypto.h>
#include <openssl/evp.h>
#include <openssl/kdf.h>
#include <openssl/rand.h>

#include <algorithm>
#include <limits>
#include <memory>

#include "asciistego/codec94.hpp"
#include "asciistego/error.hpp"

namespace asciistego::crypto {

namespace {

struct CipherCtxFree {
  void operator()(EVP_CIPHER_CTX* p) const { EVP_CIPHER_CTX_free(p); }
};
struct KdfFree {
  void operator()(EVP_KDF* p) const { EVP_KDF_free(p); }
};
struct KdfCtxFree {
  void operator()(EVP_KDF_CTX* p) const { EVP_KDF_CTX_free(p); }
};
using CipherCtx = std::unique_ptr<EVP_CIPHER_CTX, CipherCtxFree>;

constexpr std::size_t kHkdfMaxOutput = 255 * 32;
constexpr std::string_view kDataInfo = "ascii-stego/v1/data";
constexpr std::string_view kPadInfo = "ascii-stego/v1/pad";
constexpr std::string_view kFillInfo = "fill";

[[noreturn]] void openssl_failure(const char* what) {
  throw std::runtime_error(std::string("OpenSSL failure: ") + what);
}

int as_int(std::size_t n) {
  if (n > static_cast<std::size_t>(std::numeric_limits<int>::max())) openssl_failure("buffer too large");
  return static_cast<int>(n);
}

// HKDF through the OpenSSL provider, one mode per call.
void hkdf(const char* mode, std::span<const std::uint8_t> key, std::span<const std::uint8_t> salt,
          std::span<const std::uint8_t> info, std::span<std::uint8_t> out) {
  std::unique_ptr<EVP_KDF, KdfFree> kdf(EVP_KDF_fetch(nullptr, "HKDF", nullptr));
  if (!kdf) openssl_failure("HKDF unavailable");
  std::unique_ptr<EVP_KDF_CTX, KdfCtxFree> ctx(EVP_KDF_CTX_new(kdf.get()));
  if (!ctx) openssl_failure("HKDF context");

  // OSSL_PARAM wants non-const pointers even for inputs.
  static const std::uint8_t kEmpty = 0;
  auto ptr = [](std::span<const std::uint8_t> s) {
    return const_cast<std::uint8_t*>(s.empty() ? &kEmpty : s.data());
  };
  char digest_name[] = "SHA256";
  OSSL_PARAM params[6];
  std::size_t n = 0;
  params[n++] = OSSL_PARAM_construct_utf8_string(OSSL_KDF_PARAM_MODE, const_cast<char*>(mode), 0);
  params[n++] = OSSL_PARAM_construct_utf8_string(OSSL_KDF_PARAM_DIGEST, digest_name, 0);
  params[n++] = OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_KEY, ptr(key), key.size());
  if (!salt.empty()) {
    params[n++] = OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_SALT, ptr(salt), salt.size());
  }
  params[n++] = OSSL_PARAM_construct_octet_string(OSSL_KDF_PARAM_INFO, ptr(info), info.size());
  params[n] = OSSL_PARAM_construct_end();
  if (EVP_KDF_derive(ctx.get(), out.data(), out.size(), params) <= 0) openssl_failure("HKDF derive");
}

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace

MasterKey MasterKey::from_bytes(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kKeySize) {
    throw Error(Errc::BadKey, "master key must be 32 bytes, got " + std::to_string(bytes.size()));
  }
  Key k{};
  std::copy(bytes.begin(), bytes.end(), k.begin());
  return MasterKey(k);
}

MasterKey MasterKey::from_key_file(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (text.size() != 2 * kKeySize) throw Error(Errc::BadKey, "key file must hold 64 hex digits");
  auto bytes = from_hex(text);
  if (!bytes) throw Error(Errc::BadKey, "key file is not valid hex");
  MasterKey key = from_bytes(*bytes);
  OPENSSL_cleanse(bytes->data(), bytes->size());
  return key;
}

MasterKey MasterKey::generate() {
  Key k{};
  random_bytes(k);
  MasterKey key(k);
  OPENSSL_cleanse(k.data(), k.size());
  return key;
}

MasterKey::~MasterKey() { OPENSSL_cleanse(secret_.data(), secret_.size()); }

std::string MasterKey::to_key_file() const { return to_hex(secret_) + "\n"; }

void check_label(std::string_view label) {
  if (label.size() > kMaxLabelSize) {
    throw Error(Errc::BadLabel, "label longer than " + std::to_string(kMaxLabelSize) + " bytes");
  }
  for (char ch : label) {
    if (ch < 0x20 || ch > 0x7e) throw Error(Errc::BadLabel, "label contains non-printable characters");
  }
}

Digest hkdf_extract(std::span<const std::uint8_t> salt, std::span<const std::uint8_t> ikm) {
  Digest prk{};
  hkdf("EXTRACT_ONLY", ikm, salt, {}, prk);
  return prk;
}

Bytes hkdf_expand(std::span<const std::uint8_t> prk, std::span<const std::uint8_t> info, std::size_t length) {
  if (length > kHkdfMaxOutput) throw std::length_error("HKDF-Expand output limited to 8160 bytes");
  Bytes out(length);
  if (length != 0) hkdf("EXPAND_ONLY", prk, {}, info, out);
  return out;
}

DerivedKeys derive_keys(const MasterKey& mk, const DatasetContext& ctx) {
  check_label(ctx.label);
  Digest prk = hkdf_extract(ctx.salt, mk.bytes());

  std::string data_info = std::string(kDataInfo) + ctx.label + ctx.color_string;
  std::string pad_info = std::string(kPadInfo) + ctx.label;
  DerivedKeys keys;
  hkdf("EXPAND_ONLY", prk, {}, as_bytes(data_info), keys.data_key);
  hkdf("EXPAND_ONLY", prk, {}, as_bytes(pad_info), keys.pad_secret);
  OPENSSL_cleanse(prk.data(), prk.size());
  return keys;
}

Bytes seal(std::span<const std::uint8_t, kKeySize> key, const Nonce& nonce,
           std::span<const std::uint8_t> plaintext, std::span<const std::uint8_t> aad) {
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) openssl_failure("cipher context");
  if (EVP_EncryptInit_ex(ctx.get(), EVP_chacha20_poly1305(), nullptr, key.data(), nonce.data()) != 1) {
    openssl_failure("seal init");
  }
  Bytes out(plaintext.size() + kTagSize);
  int len = 0;
  if (!aad.empty() && EVP_EncryptUpdate(ctx.get(), nullptr, &len, aad.data(), as_int(aad.size())) != 1) {
    openssl_failure("seal aad");
  }
  int written = 0;
  if (!plaintext.empty()) {
    if (EVP_EncryptUpdate(ctx.get(), out.data(), &len, plaintext.data(), as_int(plaintext.size())) != 1) {
      openssl_failure("seal update");
    }
    written = len;
  }
  if (EVP_EncryptFinal_ex(ctx.get(), out.data() + written, &len) != 1) openssl_failure("seal final");
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_GET_TAG, static_cast<int>(kTagSize),
                          out.data() + plaintext.size()) != 1) {
    openssl_failure("seal tag");
  }
  return out;
}

Bytes open(std::span<const std::uint8_t, kKeySize> key, const Nonce& nonce,
           std::span<const std::uint8_t> ciphertext, std::span<const std::uint8_t> aad) {
  if (ciphertext.size() < kTagSize) {
    throw Error(Errc::AuthenticationFailed, "authentication failed: ciphertext shorter than the tag");
  }
  std::size_t body = ciphertext.size() - kTagSize;
  CipherCtx ctx(EVP_CIPHER_CTX_new());
  if (!ctx) openssl_failure("cipher context");
  if (EVP_DecryptInit_ex(ctx.get(), EVP_chacha20_poly1305(), nullptr, key.data(), nonce.data()) != 1) {
    openssl_failure("open init");
  }
  Bytes out(body);
  int len = 0;
  if (!aad.empty() && EVP_DecryptUpdate(ctx.get(), nullptr, &len, aad.data(), as_int(aad.size())) != 1) {
    openssl_failure("open aad");
  }
  int written = 0;
  if (body != 0) {
    if (EVP_DecryptUpdate(ctx.get(), out.data(), &len, ciphertext.data(), as_int(body)) != 1) {
      openssl_failure("open update");
    }
    written = len;
  }
  if (EVP_CIPHER_CTX_ctrl(ctx.get(), EVP_CTRL_AEAD_SET_TAG, static_cast<int>(kTagSize),
                          const_cast<std::uint8_t*>(ciphertext.data() + body)) != 1) {
    openssl_failure("open tag");
  }
  if (EVP_DecryptFinal_ex(ctx.get(), out.data() + written, &len) != 1) {
    OPENSSL_cleanse(out.data(), out.size());
    throw Error(Errc::AuthenticationFailed, "authentication failed: tag mismatch (tampered data or wrong key)");
  }
  return out;
}

Digest digest(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 || len != out.size()) {
    openssl_failure("SHA-256");
  }
  return out;
}

RowDigest row_digest(std::span<const std::uint8_t> data) {
  Digest full = digest(data);
  RowDigest out{};
  std::copy_n(full.begin(), out.size(), out.begin());
  return out;
}

std::string pad_chars(std::span<const std::uint8_t, kKeySize> pad_secret, std::size_t n) {
  std::string out;
  out.reserve(n);
  for (std::uint32_t block = 0; out.size() < n; ++block) {
    std::string info(kFillInfo);
    if (block != 0) {
      for (int shift = 24; shift >= 0; shift -= 8) info.push_back(static_cast<char>((block >> shift) & 0xff));
    }
    Bytes stream = hkdf_expand(pad_secret, as_bytes(info), std::min(kHkdfMaxOutput, n - out.size()));
    for (std::uint8_t b : stream) out.push_back(codec94::digit_char(b % codec94::kRadix));
  }
  return out;
}

void random_bytes(std::span<std::uint8_t> out) {
  if (RAND_bytes(out.data(), as_int(out.size())) != 1) openssl_failure("RAND_bytes");
}

}  // namespace asciistego::crypto
