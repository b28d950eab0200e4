#ifndef BPP_ERRORS_HPP
#define BPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bpp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument outside its documented domain (n <= 0, negative coefficients, ...).
struct DomainError : Error {
    using Error::Error;
};

// Diagonal index outside [-a, b].
struct IndexOutOfRange : Error {
    using Error::Error;
};

// Matrix shape does not match the declared box dimensions.
struct ShapeMismatch : Error {
    using Error::Error;
};

// Cell-level invariant violations; the message lists every violated constraint.
struct ValidationError : Error {
    using Error::Error;
};

// Predicted enumeration size exceeds the configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

// DP state space or expansion table exceeds the configured budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// Exact polynomial division left a nonzero remainder (arithmetic bug sentinel).
struct NonzeroRemainder : Error {
    using Error::Error;
};

// An internal consistency check failed (signals a bug, not bad input).
struct InternalError : Error {
    using Error::Error;
};

// CFTP hit the max-T abort without coalescing; never returns a bad sample.
struct CftpAborted : Error {
    using Error::Error;
};

}  // namespace bpp

#endif
