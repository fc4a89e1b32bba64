#include "asciistego/stego.hpp"

#include <openssl/crypto.h>

#include "asciistego/codec94.hpp"

namespace asciistego {

namespace {

crypto::DerivedKeys keys_for(const crypto::MasterKey& mk, const Manifest& man, const std::string& aad) {
  crypto::DatasetContext ctx;
  ctx.salt = man.salt;
  ctx.label = man.label;
  ctx.nonce = man.nonce;
  ctx.color_string = aad;
  return crypto::derive_keys(mk, ctx);
}

std::span<const std::uint8_t> as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

void require_dims(const Canvas& c, const Manifest& man) {
  if (c.width() != man.width || c.height() != man.height) {
    throw Error(Errc::DimensionMismatch, "canvas is " + std::to_string(c.width()) + "x" +
                                             std::to_string(c.height()) + " but manifest expects " +
                                             std::to_string(man.width) + "x" + std::to_string(man.height));
  }
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Clean: return "Clean";
    case Verdict::DecorativeModified: return "DecorativeModified";
    case Verdict::SignificantlyModified: return "SignificantlyModified";
    case Verdict::SegmentTampered: return "SegmentTampered";
  }
  return "Unknown";
}

std::string segment_text(const Canvas& c, const SegmentMap& map) {
  std::string out;
  out.reserve(capacity(map));
  for (const Segment& s : map.in_seq_order()) out += c.cells().substr(s.start, s.length());
  return out;
}

EmbedResult embed(const Canvas& art, const SegmentMap& map, const crypto::MasterKey& mk, std::string_view label,
                  std::span<const std::uint8_t> plaintext, const EmbedOptions& opts) {
  crypto::check_label(label);
  require_valid_map(map, art.size());

  const std::size_t available = capacity(map);
  const std::size_t ct_len = plaintext.size() + crypto::kTagSize;
  const std::size_t needed = codec94::encoded_len(ct_len);
  if (needed > available) {
    throw Error(Errc::CapacityExceeded,
                "payload needs " + std::to_string(needed) + " cells but the map holds " + std::to_string(available),
                needed, available);
  }

  Manifest man;
  man.label = std::string(label);
  man.width = art.width();
  man.height = art.height();
  man.segments.segments = map.in_seq_order();
  for (auto& s : man.segments.segments) s.color = *normalize_color(s.color);
  if (opts.salt) {
    man.salt = *opts.salt;
  } else {
    crypto::random_bytes(man.salt);
  }
  if (opts.nonce) {
    man.nonce = *opts.nonce;
  } else {
    crypto::random_bytes(man.nonce);
  }
  man.ct_len = ct_len;

  const std::string aad = canonical_aad(man.label, man.width, man.height, man.segments);
  const crypto::DerivedKeys keys = keys_for(mk, man, aad);
  const Bytes ct = crypto::seal(keys.data_key, man.nonce, plaintext, as_bytes(aad));
  const std::string payload = codec94::encode(ct) + crypto::pad_chars(keys.pad_secret, available - needed);

  const std::vector<LinearIndex> cells = segment_cells(man.segments);
  std::vector<std::pair<LinearIndex, char>> writes;
  writes.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) writes.emplace_back(cells[i], payload[i]);
  Canvas stego = set_chars(art, writes);

  man.canvas_digest = crypto::digest(serialize_canvas(stego));
  for (const Segment& s : man.segments.segments) {
    man.segment_digests.push_back(crypto::digest(stego.cells().substr(s.start, s.length())));
  }
  for (std::size_t r = 0; r < stego.height(); ++r) man.row_digests.push_back(crypto::row_digest(stego.row(r)));
  return {std::move(stego), std::move(man)};
}

IntegrityReport verify(const Canvas& c, const Manifest& man, double row_threshold) {
  require_dims(c, man);
  IntegrityReport report;
  if (crypto::digest(serialize_canvas(c)) == man.canvas_digest) return report;

  std::size_t changed_rows = 0;
  for (std::size_t r = 0; r < c.height(); ++r) {
    if (r >= man.row_digests.size() || crypto::row_digest(c.row(r)) != man.row_digests[r]) ++changed_rows;
  }
  report.modified_row_ratio = static_cast<double>(changed_rows) / static_cast<double>(c.height());

  const std::vector<Segment> ordered = man.segments.in_seq_order();
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const Segment& s = ordered[i];
    if (i >= man.segment_digests.size() || s.end > c.size() ||
        crypto::digest(c.cells().substr(s.start, s.length())) != man.segment_digests[i]) {
      report.mismatched_segments.push_back(s.seq);
    }
  }

  if (!report.mismatched_segments.empty()) {
    report.verdict = Verdict::SegmentTampered;
  } else if (report.modified_row_ratio <= row_threshold) {
    report.verdict = Verdict::DecorativeModified;
  } else {
    report.verdict = Verdict::SignificantlyModified;
  }
  return report;
}

ExtractResult extract(const Canvas& stego, const Manifest& man, const crypto::MasterKey& mk,
                      const ExtractOptions& opts) {
  require_dims(stego, man);
  require_valid_map(man.segments, stego.size());

  ExtractResult result;
  result.report = verify(stego, man, opts.row_threshold);
  if (opts.strict && result.report.verdict != Verdict::Clean) {
    throw Error(Errc::IntegrityRefusal,
                "strict mode: canvas integrity is " + std::string(verdict_name(result.report.verdict)));
  }

  const std::size_t enc_len = codec94::encoded_len(man.ct_len);
  const std::string text = segment_text(stego, man.segments);
  if (enc_len > text.size()) {
    throw Error(Errc::AuthenticationFailed, "authentication failed: ciphertext longer than segment capacity");
  }
  Bytes ct;
  try {
    ct = codec94::decode(std::string_view(text).substr(0, enc_len));
  } catch (const Error& e) {
    throw Error(Errc::AuthenticationFailed, std::string("authentication failed: ") + e.what(), e.first());
  }
  // A short final group has several spellings that decode alike; only the
  // one embed writes is accepted.
  if (codec94::encode(ct) != std::string_view(text).substr(0, enc_len)) {
    throw Error(Errc::AuthenticationFailed, "authentication failed: non-canonical ciphertext encoding");
  }

  const std::string aad = canonical_aad(man.label, man.width, man.height, man.segments);
  const crypto::DerivedKeys keys = keys_for(mk, man, aad);
  result.plaintext = crypto::open(keys.data_key, man.nonce, ct, as_bytes(aad));

  // Padding is key-derived, so the key holder can authenticate it too.
  const std::string pad = crypto::pad_chars(keys.pad_secret, text.size() - enc_len);
  if (CRYPTO_memcmp(pad.data(), text.data() + enc_len, pad.size()) != 0) {
    result.plaintext.clear();
    throw Error(Errc::AuthenticationFailed, "authentication failed: padding cells were altered");
  }
  return result;
}

}  // namespace asciistego
