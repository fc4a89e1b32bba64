#include "asciistego/tamper.hpp"

#include <vector>

#include "json.hpp"

namespace asciistego {

namespace {

// SplitMix64: tiny, portable and fully specified, so reports are identical
// across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

 private:
  std::uint64_t state_;
};

struct Outcome {
  bool detected = false;
  bool recovered = false;
};

class Harness {
 public:
  Harness(const Canvas& stego, const Manifest& man, const crypto::MasterKey& mk, TamperKind kind,
          std::size_t trials, std::uint64_t seed)
      : stego_(stego), man_(man), mk_(mk), kind_(kind), seed_(seed) {
    if (trials == 0) throw std::invalid_argument("tamper-sim needs at least one trial");
    original_ = extract(stego_, man_, mk_).plaintext;

    segment_cells_ = asciistego::segment_cells(man_.segments);
    std::vector<bool> in_segment(stego_.size(), false);
    for (LinearIndex i : segment_cells_) in_segment[i] = true;
    for (LinearIndex i = 0; i < stego_.size(); ++i) {
      if (!in_segment[i]) decorative_cells_.push_back(i);
    }
    if (kind_ == TamperKind::Decorative && decorative_cells_.empty()) {
      throw std::invalid_argument("canvas has no decorative cells to perturb");
    }
  }

  Outcome run(std::size_t trial) const {
    SplitMix64 rng(seed_ ^ (0xd1b54a32d192ed03ull * (trial + 1)));
    switch (kind_) {
      case TamperKind::Segment: return check(perturb_cell(segment_cells_, rng), man_);
      case TamperKind::Decorative: return check(perturb_cell(decorative_cells_, rng), man_);
      case TamperKind::Color: return check(stego_, perturb_color(rng));
    }
    return {};
  }

 private:
  Canvas perturb_cell(const std::vector<LinearIndex>& pool, SplitMix64& rng) const {
    LinearIndex at = pool[rng.below(pool.size())];
    char old = stego_.cells()[at];
    // One of the 94 printable characters other than `old`.
    char ch = static_cast<char>(0x20 + rng.below(94));
    if (ch >= old) ++ch;
    const std::pair<LinearIndex, char> edit{at, ch};
    return set_chars(stego_, std::span(&edit, 1));
  }

  Manifest perturb_color(SplitMix64& rng) const {
    static constexpr char kHex[] = "0123456789abcdef";
    Manifest edited = man_;
    Segment& s = edited.segments.segments[rng.below(edited.segments.segments.size())];
    std::size_t digit = 1 + rng.below(6);
    // One of the 15 other lowercase hex digits.
    std::size_t old_pos = std::string_view(kHex, 16).find(s.color[digit]);
    std::size_t pick = rng.below(15);
    s.color[digit] = kHex[pick >= old_pos ? pick + 1 : pick];
    return edited;
  }

  Outcome check(const Canvas& c, const Manifest& m) const {
    Outcome out;
    out.detected = verify(c, m).verdict != Verdict::Clean;
    try {
      out.recovered = extract(c, m, mk_).plaintext == original_;
    } catch (const Error& e) {
      if (e.code() == Errc::AuthenticationFailed) out.detected = true;
    }
    return out;
  }

  const Canvas& stego_;
  const Manifest& man_;
  const crypto::MasterKey& mk_;
  TamperKind kind_;
  std::uint64_t seed_;
  Bytes original_;
  std::vector<LinearIndex> segment_cells_;
  std::vector<LinearIndex> decorative_cells_;
};

}  // namespace

std::string_view tamper_kind_name(TamperKind k) noexcept {
  switch (k) {
    case TamperKind::Segment: return "segment";
    case TamperKind::Decorative: return "decorative";
    case TamperKind::Color: return "color";
  }
  return "unknown";
}

std::optional<TamperKind> parse_tamper_kind(std::string_view name) noexcept {
  for (TamperKind k : {TamperKind::Segment, TamperKind::Decorative, TamperKind::Color}) {
    if (tamper_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

std::string tamper_report_json(const TamperReport& r) {
  nlohmann::ordered_json doc;
  doc["kind"] = tamper_kind_name(r.kind);
  doc["trials"] = r.trials;
  doc["detected"] = r.detected;
  doc["detection_rate"] = r.detection_rate();
  doc["recovered"] = r.recovered;
  return doc.dump(2) + "\n";
}

TamperReport tamper_sim(const Canvas& stego, const Manifest& man, const crypto::MasterKey& mk, TamperKind kind,
                        std::size_t trials, std::uint64_t seed) {
  const Harness harness(stego, man, mk, kind, trials, seed);
  std::size_t detected = 0;
  std::size_t recovered = 0;
  const auto n = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : detected, recovered)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    Outcome o = harness.run(static_cast<std::size_t>(t));
    detected += o.detected ? 1 : 0;
    recovered += o.recovered ? 1 : 0;
  }
  return {kind, trials, detected, recovered};
}

TamperReport tamper_sim_serial(const Canvas& stego, const Manifest& man, const crypto::MasterKey& mk,
                               TamperKind kind, std::size_t trials, std::uint64_t seed) {
  const Harness harness(stego, man, mk, kind, trials, seed);
  TamperReport report{kind, trials, 0, 0};
  for (std::size_t t = 0; t < trials; ++t) {
    Outcome o = harness.run(t);
    report.detected += o.detected ? 1 : 0;
    report.recovered += o.recovered ? 1 : 0;
  }
  return report;
}

}  // namespace asciistego
