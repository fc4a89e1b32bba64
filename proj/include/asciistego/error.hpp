#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asciistego {

enum class Errc {
  // canvas
  NonPrintable,      // first() = position
  EmptyInput,
  BadImage,
  BadRamp,
  IndexOutOfBounds,  // first() = index
  // codec94
  BadChar,           // first() = position
  BadLength,
  Overflow,          // first() = group offset in the text
  // cryptobox
  BadLabel,
  BadKey,
  AuthenticationFailed,
  // stego
  Overlap,           // first(), second() = seq ranks
  OutOfBounds,       // first() = seq
  BadColor,          // first() = seq
  EmptyMap,
  DuplicateSeq,      // first() = seq
  CapacityExceeded,  // first() = needed chars, second() = available chars
  DimensionMismatch,
  IntegrityRefusal,
  BadManifest,
  // chroma
  BadEscape,         // first() = position
  // plumbing
  Io,
};

std::string_view errc_name(Errc code) noexcept;

/// Every failure raised by the library. The numeric payload carried in
/// first()/second() depends on the code, see Errc.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::size_t first = 0, std::size_t second = 0)
      : std::runtime_error(what), code_(code), first_(first), second_(second) {}

  Errc code() const noexcept { return code_; }
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  Errc code_;
  std::size_t first_;
  std::size_t second_;
};

}  // namespace asciistego
