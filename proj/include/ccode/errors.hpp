#pragma once

#include <stdexcept>
#include <string>

namespace ccode {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// code model
struct ElementOutOfRange : Error { using Error::Error; };
struct MalformedSequence : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };
struct WidthMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct LengthTooShort : Error { using Error::Error; };
struct DimensionLimit : Error { using Error::Error; };

// constructions
struct TooShort : Error { using Error::Error; };
struct OddLength : Error { using Error::Error; };
struct InputNotVerified : Error { using Error::Error; };
struct PostVerificationFailed : Error { using Error::Error; };

// bound engine
struct RangeTooSmall : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };
struct NoEntry : Error { using Error::Error; };
struct SoundnessViolation : Error { using Error::Error; };

// file format
struct ParseError : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };

}  // namespace ccode
