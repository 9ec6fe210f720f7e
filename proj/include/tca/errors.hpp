#pragma once

#include <stdexcept>
#include <string>

namespace tca {

// Error codes shared across the library. Every throwing operation documents
// which codes it can raise.
enum class ErrorCode {
    EmptyPartition,
    EmptyRectangle,
    ZeroFunctor,
    SyntaxError,
    IndexError,
    RingMismatch,
    NotHomogeneous,
    TooFewRows,
    OddSpaceUnsupported,
    BadExponent,
    UnitIdeal,
    NotPrime,
    Internal,
};

inline const char* errorCodeName(ErrorCode c) {
    switch (c) {
        case ErrorCode::EmptyPartition: return "EmptyPartition";
        case ErrorCode::EmptyRectangle: return "EmptyRectangle";
        case ErrorCode::ZeroFunctor: return "ZeroFunctor";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::IndexError: return "IndexError";
        case ErrorCode::RingMismatch: return "RingMismatch";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::TooFewRows: return "TooFewRows";
        case ErrorCode::OddSpaceUnsupported: return "OddSpaceUnsupported";
        case ErrorCode::BadExponent: return "BadExponent";
        case ErrorCode::UnitIdeal: return "UnitIdeal";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace tca
