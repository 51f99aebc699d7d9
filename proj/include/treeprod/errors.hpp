#pragma once

#include <stdexcept>
#include <string>

namespace treeprod {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct InvalidTreeWord : Error { using Error::Error; };
struct NormUnsupported : Error { using Error::Error; };
struct EqualPoints : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct SpecNotMapped : Error { using Error::Error; };
struct CenterEqualsPoint : Error { using Error::Error; };
struct TrivialInput : Error { using Error::Error; };
struct RInsideInterval : Error { using Error::Error; };
struct TreeSpec : Error { using Error::Error; };
struct UnsupportedSpec : Error { using Error::Error; };
struct RadiusTooLarge : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Signals a broken internal invariant (an operation produced an invalid
// descriptor); indicates a bug, not bad input.
struct InternalValidation : Error { using Error::Error; };

}  // namespace treeprod
