// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "asciistego/chroma.hpp"
#include "asciistego/error.hpp"
#include "asciistego/stego.hpp"
#include "golden.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace asciistego;
using namespace asciistego::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::optional<Errc> error_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

Canvas edit(const Canvas& c, LinearIndex i, char ch) {
  const std::pair<LinearIndex, char> e{i, ch};
  return set_chars(c, std::span(&e, 1));
}

char other_printable(Rng& rng, char current) {
  char ch;
  do ch = static_cast<char>(uniform(rng, 0x20, 0x7e));
  while (ch == current);
  return ch;
}

struct Case {
  Canvas art;
  SegmentMap map;
  Bytes payload;
  EmbedResult embedded;
};

// Random canvas with at least `min_height` rows and at least one decorative cell.
Case random_case(Rng& rng, const crypto::MasterKey& mk, std::size_t min_height) {
  for (;;) {
    Canvas art = random_canvas(rng, uniform(rng, 8, 60), uniform(rng, min_height, 30));
    if (art.size() < 40) continue;
    SegmentMap m = random_map(rng, art.size(), 5, codec94::encoded_len(crypto::kTagSize));
    if (capacity(m) == art.size()) continue;
    Bytes p = random_bytes(rng, uniform(rng, 0, codec94::max_payload(capacity(m)) - crypto::kTagSize));
    EmbedResult r = embed(art, m, mk, "acceptance", p);
    return {std::move(art), std::move(m), std::move(p), std::move(r)};
  }
}

Outcome round_trip() {
  Rng rng(1001);
  std::size_t ok = 0;
  const int n = 1000;
  for (int t = 0; t < n; ++t) {
    auto mk = random_key(rng);
    Case c = random_case(rng, mk, 1);
    auto out = extract(c.embedded.stego, c.embedded.manifest, mk);
    if (out.plaintext == c.payload && out.report.verdict == Verdict::Clean) ++ok;
  }
  return {ok == n, std::to_string(ok) + "/" + std::to_string(n) + " randomized cases extracted exactly with verdict Clean"};
}

Outcome codec_oracle() {
  Rng rng(2002);
  std::size_t ok = 0, total = 0;
  for (std::size_t len = 0; len <= 64; ++len) {
    for (int t = 0; t < 200; ++t, ++total) {
      Bytes data = random_bytes(rng, len);
      std::string enc = codec94::encode(data);
      if (enc == oracle::encode94(data) && codec94::decode(enc) == data) ++ok;
    }
  }
  std::size_t rt_ok = 0;
  for (std::size_t len = 0; len <= 4096; ++len) {
    Bytes data = random_bytes(rng, len);
    if (codec94::decode(codec94::encode(data)) == data) ++rt_ok;
  }
  return {ok == total && rt_ok == 4097, std::to_string(ok) + "/" + std::to_string(total) +
                                            " oracle matches over lengths 0..64, " + std::to_string(rt_ok) +
                                            "/4097 round trips over lengths 0..4096"};
}

// Mutates one manifest field that is bound into the AAD and key derivation,
// keeping the map itself valid so the failure comes from authentication.
bool mutate_manifest(Rng& rng, Manifest& man, int which) {
  auto& segs = man.segments.segments;
  Segment& s = segs[uniform(rng, 0, segs.size() - 1)];
  std::size_t cells = man.width * man.height;
  switch (which) {
    case 0: {
      std::size_t pos = uniform(rng, 1, 6);
      static constexpr std::string_view kHex = "0123456789abcdef";
      char ch;
      do ch = kHex[uniform(rng, 0, 15)];
      while (ch == s.color[pos]);
      s.color[pos] = ch;
      return true;
    }
    case 1: {
      Segment moved = s;
      if (uniform(rng, 0, 1) == 0 && moved.start > 0) {
        --moved.start, --moved.end;
      } else {
        ++moved.start, ++moved.end;
      }
      Segment saved = s;
      s = moved;
      if (!map_problems(man.segments, cells).empty()) {
        s = saved;
        return false;
      }
      return true;
    }
    default: {
      std::set<std::uint64_t> used;
      for (const auto& x : segs) used.insert(x.seq);
      std::uint64_t seq;
      do seq = uniform(rng, 0, 50);
      while (used.contains(seq));
      s.seq = seq;
      return true;
    }
  }
}

Outcome tamper_soundness() {
  Rng rng(3003);
  auto mk = random_key(rng);

  std::size_t seg_fail = 0;
  for (int t = 0; t < 500; ++t) {
    Case c = random_case(rng, mk, 1);
    auto cells = segment_cells(c.map);
    LinearIndex at = cells[uniform(rng, 0, cells.size() - 1)];
    Canvas damaged = edit(c.embedded.stego, at, other_printable(rng, c.embedded.stego.at(at)));
    if (error_of([&] { extract(damaged, c.embedded.manifest, mk); }) == Errc::AuthenticationFailed) ++seg_fail;
  }

  std::size_t man_fail = 0, man_total = 0;
  while (man_total < 100) {
    Case c = random_case(rng, mk, 1);
    Manifest m = c.embedded.manifest;
    if (!mutate_manifest(rng, m, static_cast<int>(man_total % 3))) continue;
    ++man_total;
    if (error_of([&] { extract(c.embedded.stego, m, mk); }) == Errc::AuthenticationFailed) ++man_fail;
  }

  std::size_t deco_recovered = 0, deco_flagged = 0;
  for (int t = 0; t < 500; ++t) {
    Case c = random_case(rng, mk, 10);
    std::vector<bool> in_seg(c.art.size());
    for (auto i : segment_cells(c.map)) in_seg[i] = true;
    LinearIndex at;
    do at = uniform(rng, 0, c.art.size() - 1);
    while (in_seg[at]);
    Canvas damaged = edit(c.embedded.stego, at, other_printable(rng, c.embedded.stego.at(at)));
    try {
      auto out = extract(damaged, c.embedded.manifest, mk);
      if (out.plaintext == c.payload) ++deco_recovered;
      if (out.report.verdict == Verdict::DecorativeModified) ++deco_flagged;
    } catch (const Error&) {
    }
  }

  return {seg_fail == 500 && man_fail == 100 && deco_recovered == 500 && deco_flagged == 500,
          "segment edits " + std::to_string(seg_fail) + "/500 AuthenticationFailed, manifest edits " +
              std::to_string(man_fail) + "/100 rejected, decorative edits " + std::to_string(deco_recovered) +
              "/500 recovered and " + std::to_string(deco_flagged) + "/500 DecorativeModified"};
}

Outcome reference_fixtures() {
  const std::size_t cells = 20 * 4;
  auto problems = map_problems(reference_map(true), cells);
  bool overlap = problems.size() == 1 && problems[0].code() == Errc::Overlap && problems[0].first() == 1 &&
                 problems[0].second() == 3;

  SegmentMap m = reference_map(false);
  std::size_t cap = capacity(m);
  std::size_t max_pt = codec94::max_payload(cap) - crypto::kTagSize;

  Canvas art = Canvas::from_rows(std::vector<std::string>(4, std::string(20, '.')));
  auto mk = crypto::MasterKey::from_bytes(Bytes(32, 7));
  bool fits = false;
  try {
    auto r = embed(art, m, mk, "fig", Bytes(18, 0xab));
    fits = extract(r.stego, r.manifest, mk).plaintext == Bytes(18, 0xab);
  } catch (const Error&) {
  }
  std::size_t needed = 0, available = 0;
  try {
    embed(art, m, mk, "fig", Bytes(19, 0xab));
  } catch (const Error& e) {
    if (e.code() == Errc::CapacityExceeded) needed = e.first(), available = e.second();
  }
  return {overlap && cap == 43 && max_pt == 18 && fits && needed > 0 && available == 43,
          std::string(overlap ? "Overlap(1,3)" : "no Overlap(1,3)") + ", capacity " + std::to_string(cap) +
              ", max plaintext " + std::to_string(max_pt) + ", 18 bytes " + (fits ? "fit" : "did not fit") +
              ", 19 bytes " + (needed ? "CapacityExceeded(" + std::to_string(needed) + "," + std::to_string(available) + ")" : "accepted")};
}

Outcome verdict_algebra() {
  Canvas art = Canvas::from_rows(std::vector<std::string>(20, std::string(20, '.')));
  SegmentMap m;
  m.segments.push_back({0, 20, "#87ceeb", 1});
  auto mk = crypto::MasterKey::from_bytes(Bytes(32, 9));
  auto r = embed(art, m, mk, "verdicts", Bytes{});

  std::set<Verdict> seen;
  auto clean = verify(r.stego, r.manifest);
  seen.insert(clean.verdict);
  auto one = verify(edit(r.stego, 20 * 5 + 3, '#'), r.manifest);
  seen.insert(one.verdict);
  auto three = verify(edit(edit(edit(r.stego, 20 * 5 + 3, '#'), 20 * 9, '#'), 20 * 19 + 19, '#'), r.manifest);
  seen.insert(three.verdict);
  auto seg = verify(edit(r.stego, 4, r.stego.at(4) == '!' ? '"' : '!'), r.manifest);
  seen.insert(seg.verdict);

  bool ok = clean.verdict == Verdict::Clean && one.verdict == Verdict::DecorativeModified &&
            one.modified_row_ratio == 0.05 && three.verdict == Verdict::SignificantlyModified &&
            three.modified_row_ratio == 0.15 && seg.verdict == Verdict::SegmentTampered && seen.size() == 4;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu/4 verdicts reached; 1 row %.3f %s; 3 rows %.3f %s", seen.size(),
                one.modified_row_ratio, std::string(verdict_name(one.verdict)).c_str(), three.modified_row_ratio,
                std::string(verdict_name(three.verdict)).c_str());
  return {ok, buf};
}

Outcome determinism() {
  const Golden g = Golden::load();
  bool golden = !g.stego.empty();
  for (int run = 0; run < 3 && golden; ++run) {
    EmbedResult r = g.embed_once();
    golden = serialize_canvas(r.stego) + "\n" == g.stego && manifest_write(r.manifest) == g.manifest;
  }

  crypto::Key key;
  Bytes kb = hex(oracle::kRfcKey);
  std::copy(kb.begin(), kb.end(), key.begin());
  crypto::Nonce nonce;
  Bytes nb = hex(oracle::kRfcNonce);
  std::copy(nb.begin(), nb.end(), nonce.begin());
  bool rfc = crypto::seal(key, nonce, to_bytes(oracle::kRfcPlaintext), hex(oracle::kRfcAad)) == hex(oracle::kRfcSealed);

  bool sha = to_hex(crypto::digest(std::string_view{})) == oracle::kSha256Empty;
  return {golden && rfc && sha, std::string("golden stego+manifest ") + (golden ? "identical" : "differ") +
                                    ", RFC 8439 vector " + (rfc ? "matches" : "differs") + ", SHA-256(\"\") " +
                                    (sha ? "matches" : "differs")};
}

Outcome render_identity() {
  Rng rng(7007);
  std::size_t ident = 0;
  for (int t = 0; t < 1000; ++t) {
    Canvas c = random_canvas(rng, uniform(rng, 1, 60), uniform(rng, 1, 20));
    SegmentMap m = random_map(rng, c.size(), 6, 1);
    auto parsed = chroma::parse_ansi(chroma::render_ansi(c, m));
    if (parsed.canvas == c && parsed.cell_colors == chroma::cell_colors(c, m) && chroma::check_colors(parsed, m).empty()) {
      ++ident;
    }
  }

  std::size_t pinpointed = 0;
  const int inject_cases = 500;
  for (int t = 0; t < inject_cases; ++t) {
    Canvas c = random_canvas(rng, uniform(rng, 2, 60), uniform(rng, 1, 20));
    SegmentMap m = random_map(rng, c.size(), 6, 1);
    auto parsed = chroma::parse_ansi(chroma::render_ansi(c, m));
    std::set<std::size_t> injected;
    for (std::size_t k = uniform(rng, 1, 5); k > 0; --k) {
      std::size_t i = uniform(rng, 0, c.size() - 1);
      auto& cell = parsed.cell_colors[i];
      if (injected.contains(i)) continue;
      switch (uniform(rng, 0, 2)) {
        case 0:
          cell.reset();
          break;
        case 1:
          cell = parse_color(random_color(rng));
          break;
        default:
          if (cell) cell->r ^= 1; else cell = Rgb{0, 0, 0};
      }
      if (cell != chroma::cell_colors(c, m)[i]) injected.insert(i);
    }
    std::set<std::size_t> found;
    for (const auto& mm : chroma::check_colors(parsed, m)) found.insert(mm.index);
    if (found == injected) ++pinpointed;
  }
  return {ident == 1000 && pinpointed == inject_cases,
          std::to_string(ident) + "/1000 render/parse identities, " + std::to_string(pinpointed) + "/" +
              std::to_string(inject_cases) + " injected mismatch sets pinpointed exactly"};
}

Outcome performance() {
  Rng rng(8008);
  Canvas art = random_canvas(rng, 200, 80);
  SegmentMap m;
  m.segments.push_back({200 * 10, 200 * 12, "#87ceeb", 1});
  m.segments.push_back({200 * 40 + 50, 200 * 40 + 350, "#ff0000", 2});
  m.segments.push_back({200 * 70, 200 * 72, "#00ff00", 3});
  auto mk = random_key(rng);
  Bytes payload = random_bytes(rng, codec94::max_payload(capacity(m)) - crypto::kTagSize);

  using clock = std::chrono::steady_clock;
  double worst_embed = 0, worst_extract = 0;
  bool ok = true;
  for (int run = 0; run < 10; ++run) {
    auto t0 = clock::now();
    auto r = embed(art, m, mk, "perf", payload);
    auto t1 = clock::now();
    auto out = extract(r.stego, r.manifest, mk);
    auto t2 = clock::now();
    ok = ok && out.plaintext == payload;
    worst_embed = std::max(worst_embed, std::chrono::duration<double, std::milli>(t1 - t0).count());
    worst_extract = std::max(worst_extract, std::chrono::duration<double, std::milli>(t2 - t1).count());
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "200x80 canvas, capacity %zu chars: worst embed %.3f ms, worst extract %.3f ms (10 runs)",
                capacity(m), worst_embed, worst_extract);
  return {ok && capacity(m) >= 1024 && worst_embed < 50.0 && worst_extract < 50.0, buf};
}

}  // namespace

int main() {
  const std::pair<const char*, Outcome (*)()> criteria[] = {
      {"end-to-end round trip", round_trip},   {"codec oracle", codec_oracle},
      {"tamper soundness", tamper_soundness},  {"reference map fixtures", reference_fixtures},
      {"verify verdict algebra", verdict_algebra}, {"determinism and interop", determinism},
      {"render/parse identity", render_identity},  {"performance sanity", performance},
  };
  int failures = 0;
  int n = 1;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s  %d. %s: %s\n", o.pass ? "PASS" : "FAIL", n++, name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
