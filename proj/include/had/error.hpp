#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace had {

enum class Errc {
  ZeroInverse,
  ArityMismatch,
  ShapeMismatch,
  ZeroPolynomial,
  SyntaxError,
  UnknownVariable,
  NoPointFound,
  UnsupportedRepresentation,
  SingularPoint,
  SingularTransform,
  UndefinedProduct,
  OnDelta,
  EmptyProduct,
  PreconditionViolated,
  CoordinateDegenerate,
  SamplingExhausted,
  TooLarge,
  DegreeTooSmall,
  InvalidArgument,
  FormatError,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library. The code identifies the condition;
/// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Parse failure in the polynomial grammar; `position` is a byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace had
