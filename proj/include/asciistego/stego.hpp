#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "asciistego/canvas.hpp"
#include "asciistego/cryptobox.hpp"
#include "asciistego/segment_map.hpp"

namespace asciistego {

inline constexpr int kManifestVersion = 1;
inline constexpr double kDefaultRowThreshold = 0.10;

/// Offline extraction metadata. Travels separately from the canvas and
/// never contains key material.
struct Manifest {
  int version = kManifestVersion;
  std::string label;
  std::size_t width = 0;
  std::size_t height = 0;
  SegmentMap segments;
  crypto::Salt salt{};
  crypto::Nonce nonce{};
  std::size_t ct_len = 0;
  crypto::Digest canvas_digest{};
  std::vector<crypto::Digest> segment_digests;  // seq order
  std::vector<crypto::RowDigest> row_digests;

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

/// Canonical JSON: keys in declaration order, lowercase hex, two-space
/// indent, trailing newline.
std::string manifest_write(const Manifest& man);
/// Rejects unknown, missing or ill-typed fields, bad hex, version != 1
/// and maps that do not fit the stated dimensions. Throws BadManifest.
Manifest manifest_read(std::string_view text);

enum class Verdict { Clean, DecorativeModified, SignificantlyModified, SegmentTampered };
std::string_view verdict_name(Verdict v) noexcept;

struct IntegrityReport {
  Verdict verdict = Verdict::Clean;
  double modified_row_ratio = 0.0;
  std::vector<std::uint64_t> mismatched_segments;  // seq ranks
};

struct EmbedOptions {
  std::optional<crypto::Salt> salt;
  std::optional<crypto::Nonce> nonce;
};

struct EmbedResult {
  Canvas stego;
  Manifest manifest;
};

struct ExtractOptions {
  bool strict = false;
  double row_threshold = kDefaultRowThreshold;
};

struct ExtractResult {
  Bytes plaintext;
  IntegrityReport report;
};

/// Encrypts `plaintext`, writes its radix-94 ciphertext into the segment
/// cells in reading order and fills the rest of each segment with
/// key-derived padding. Cells outside the map are left alone.
/// Throws CapacityExceeded(needed, available) or any map problem.
EmbedResult embed(const Canvas& art, const SegmentMap& map, const crypto::MasterKey& mk, std::string_view label,
                  std::span<const std::uint8_t> plaintext, const EmbedOptions& opts = {});

/// Clean when the whole-canvas digest matches. Otherwise SegmentTampered if
/// any segment digest differs, else the fraction of rows whose digest
/// differs decides between DecorativeModified (<= threshold) and
/// SignificantlyModified.
IntegrityReport verify(const Canvas& c, const Manifest& man, double row_threshold = kDefaultRowThreshold);

/// Throws DimensionMismatch, IntegrityRefusal (strict and not Clean) or
/// AuthenticationFailed. Segment cells that no longer decode as radix-94
/// text, and padding cells that differ from the key-derived padding, are
/// reported as AuthenticationFailed as well.
ExtractResult extract(const Canvas& stego, const Manifest& man, const crypto::MasterKey& mk,
                      const ExtractOptions& opts = {});

/// Concatenated characters of every segment in reading order.
std::string segment_text(const Canvas& c, const SegmentMap& map);

}  // namespace asciistego
