#include "entrobound/error.hpp"

namespace entrobound {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::InvalidExponent: return "invalid exponent";
    case ErrorKind::InvalidDimension: return "invalid dimension";
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::OutOfRange: return "out of range";
    case ErrorKind::NotUnitary: return "not unitary";
    case ErrorKind::NonFinite: return "non-finite value";
    case ErrorKind::ZeroVector: return "zero vector";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::InvalidArgument: return "invalid argument";
    }
    return "error";
}

} // namespace entrobound
