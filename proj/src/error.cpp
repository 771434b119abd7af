#include "had/error.hpp"

namespace had {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::ArityMismatch: return "ArityMismatch";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::NoPointFound: return "NoPointFound";
    case Errc::UnsupportedRepresentation: return "UnsupportedRepresentation";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::SingularTransform: return "SingularTransform";
    case Errc::UndefinedProduct: return "UndefinedProduct";
    case Errc::OnDelta: return "OnDelta";
    case Errc::EmptyProduct: return "EmptyProduct";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::CoordinateDegenerate: return "CoordinateDegenerate";
    case Errc::SamplingExhausted: return "SamplingExhausted";
    case Errc::TooLarge: return "TooLarge";
    case Errc::DegreeTooSmall: return "DegreeTooSmall";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::FormatError: return "FormatError";
  }
  return "Unknown";
}

}  // namespace had
