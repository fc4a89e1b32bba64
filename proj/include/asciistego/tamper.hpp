#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "asciistego/stego.hpp"

namespace asciistego {

enum class TamperKind { Segment, Decorative, Color };

std::string_view tamper_kind_name(TamperKind k) noexcept;
std::optional<TamperKind> parse_tamper_kind(std::string_view name) noexcept;

struct TamperReport {
  TamperKind kind = TamperKind::Segment;
  std::size_t trials = 0;
  std::size_t detected = 0;   // non-Clean verdict or authentication failure
  std::size_t recovered = 0;  // payload still extracted intact

  double detection_rate() const noexcept {
    return trials == 0 ? 0.0 : static_cast<double>(detected) / static_cast<double>(trials);
  }
  friend bool operator==(const TamperReport&, const TamperReport&) = default;
};

std::string tamper_report_json(const TamperReport& r);

/// Runs `trials` independent perturbations of (canvas, manifest), each drawn
/// from a generator seeded by (seed, trial index), so the report does not
/// depend on scheduling. Trials run in parallel under OpenMP.
///   Segment:    one random segment cell replaced by a different printable char.
///   Decorative: the same for a cell outside every segment.
///   Color:      one hex digit of one manifest segment color changed.
/// The unmodified inputs must extract cleanly first.
TamperReport tamper_sim(const Canvas& stego, const Manifest& man, const crypto::MasterKey& mk, TamperKind kind,
                        std::size_t trials, std::uint64_t seed);

/// Single-threaded reference; same report as tamper_sim for equal inputs.
TamperReport tamper_sim_serial(const Canvas& stego, const Manifest& man, const crypto::MasterKey& mk,
                               TamperKind kind, std::size_t trials, std::uint64_t seed);

}  // namespace asciistego
