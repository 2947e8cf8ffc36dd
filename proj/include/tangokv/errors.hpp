#pragma once

#include <stdexcept>
#include <string>

namespace tangokv {

/// Base class for every error the toolkit raises on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction / input errors.
struct ParamViolation : Error { using Error::Error; };
struct SmoothnessFailure : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct PreconditionViolation : Error { using Error::Error; };
struct NotTango : Error { using Error::Error; };
struct InputNotInScope : Error { using Error::Error; };
struct UnsupportedConfiguration : Error { using Error::Error; };
struct DivisibilityFailure : Error { using Error::Error; };
struct NotLogTerminal : Error { using Error::Error; };

// Arithmetic / analysis errors.
struct ArithmeticOverflow : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct PrecisionExhausted : Error { using Error::Error; };
struct FrobeniusKernel : Error { using Error::Error; };

// A computed divisor did not hit its degree identity: a support place was
// missed or a valuation is wrong. Always a hard internal error.
struct SupportLeak : Error { using Error::Error; };

struct InternalError : Error { using Error::Error; };

} // namespace tangokv
