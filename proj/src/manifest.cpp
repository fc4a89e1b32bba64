#include <algorithm>

#include "asciistego/codec94.hpp"
#include "asciistego/stego.hpp"
#include "segment_json.hpp"

namespace asciistego {

namespace {

using detail::bad_manifest;
using detail::ordered_json;

bool is_lower_hex(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

template <std::size_t N>
std::array<std::uint8_t, N> fixed_hex(const ordered_json& v, const char* field) {
  if (!v.is_string()) bad_manifest(field);
  const auto& s = v.get_ref<const std::string&>();
  if (s.size() != 2 * N || !is_lower_hex(s)) bad_manifest(field);
  auto bytes = from_hex(s);
  if (!bytes) bad_manifest(field);
  std::array<std::uint8_t, N> out{};
  std::copy(bytes->begin(), bytes->end(), out.begin());
  return out;
}

template <std::size_t N>
std::vector<std::array<std::uint8_t, N>> hex_list(const ordered_json& v, const char* field, std::size_t count) {
  if (!v.is_array() || v.size() != count) bad_manifest(field);
  std::vector<std::array<std::uint8_t, N>> out;
  out.reserve(count);
  for (const auto& item : v) out.push_back(fixed_hex<N>(item, field));
  return out;
}

}  // namespace

std::string manifest_write(const Manifest& man) {
  ordered_json doc;
  doc["version"] = man.version;
  doc["label"] = man.label;
  doc["width"] = man.width;
  doc["height"] = man.height;
  doc["segments"] = detail::segments_to_json(man.segments);
  doc["salt"] = to_hex(man.salt);
  doc["nonce"] = to_hex(man.nonce);
  doc["ct_len"] = man.ct_len;
  doc["canvas_digest"] = to_hex(man.canvas_digest);
  ordered_json segs = ordered_json::array();
  for (const auto& d : man.segment_digests) segs.push_back(to_hex(d));
  doc["segment_digests"] = std::move(segs);
  ordered_json rows = ordered_json::array();
  for (const auto& d : man.row_digests) rows.push_back(to_hex(d));
  doc["row_digests"] = std::move(rows);
  return doc.dump(2) + "\n";
}

Manifest manifest_read(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(Errc::BadManifest, std::string("bad manifest: not JSON (") + e.what() + ")");
  }
  detail::expect_keys(doc,
                      {"version", "label", "width", "height", "segments", "salt", "nonce", "ct_len", "canvas_digest",
                       "segment_digests", "row_digests"},
                      "manifest");

  Manifest man;
  if (!doc["version"].is_number_unsigned() || doc["version"].get<std::uint64_t>() != kManifestVersion) {
    bad_manifest("version");
  }
  man.label = detail::get_string(doc, "label", "label");
  try {
    crypto::check_label(man.label);
  } catch (const Error&) {
    bad_manifest("label");
  }
  man.width = detail::get_uint(doc, "width", "width");
  man.height = detail::get_uint(doc, "height", "height");
  if (man.width == 0) bad_manifest("width");
  if (man.height == 0) bad_manifest("height");
  if (man.width > std::size_t{1} << 32 || man.height > std::size_t{1} << 32) bad_manifest("width");

  man.segments = detail::segments_from_json(doc["segments"]);
  if (!map_problems(man.segments, man.width * man.height).empty()) bad_manifest("segments");

  man.salt = fixed_hex<crypto::kSaltSize>(doc["salt"], "salt");
  man.nonce = fixed_hex<crypto::kNonceSize>(doc["nonce"], "nonce");
  man.ct_len = detail::get_uint(doc, "ct_len", "ct_len");
  if (man.ct_len < crypto::kTagSize || man.ct_len > capacity(man.segments) ||
      codec94::encoded_len(man.ct_len) > capacity(man.segments)) {
    bad_manifest("ct_len");
  }
  man.canvas_digest = fixed_hex<32>(doc["canvas_digest"], "canvas_digest");
  man.segment_digests = hex_list<32>(doc["segment_digests"], "segment_digests", man.segments.segments.size());
  man.row_digests = hex_list<8>(doc["row_digests"], "row_digests", man.height);
  return man;
}

}  // namespace asciistego
