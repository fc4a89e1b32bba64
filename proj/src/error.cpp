#include "asciistego/error.hpp"

namespace asciistego {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrintable: return "NonPrintable";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::BadImage: return "BadImage";
    case Errc::BadRamp: return "BadRamp";
    case Errc::IndexOutOfBounds: return "IndexOutOfBounds";
    case Errc::BadChar: return "BadChar";
    case Errc::BadLength: return "BadLength";
    case Errc::Overflow: return "Overflow";
    case Errc::BadLabel: return "BadLabel";
    case Errc::BadKey: return "BadKey";
    case Errc::AuthenticationFailed: return "AuthenticationFailed";
    case Errc::Overlap: return "Overlap";
    case Errc::OutOfBounds: return "OutOfBounds";
    case Errc::BadColor: return "BadColor";
    case Errc::EmptyMap: return "EmptyMap";
    case Errc::DuplicateSeq: return "DuplicateSeq";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::IntegrityRefusal: return "IntegrityRefusal";
    case Errc::BadManifest: return "BadManifest";
    case Errc::BadEscape: return "BadEscape";
    case Errc::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace asciistego
