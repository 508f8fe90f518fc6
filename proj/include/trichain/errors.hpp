#pragma once

#include <stdexcept>
#include <string>

namespace trichain {

enum class ErrorCode {
    NonRegular,
    Loop,
    DuplicateEdge,
    ParityViolation,
    OddDegree,
    NotApplicable,
    KeyMismatch,
    StepNotApplicable,
    Precondition,
    NoWitness,
    InternalContradiction,
    NotTwoRegular,
    Parity,
    Empty,
    InvalidFormat,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::NonRegular: return "NonRegular";
        case ErrorCode::Loop: return "Loop";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::ParityViolation: return "ParityViolation";
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::NotApplicable: return "NotApplicable";
        case ErrorCode::KeyMismatch: return "KeyMismatch";
        case ErrorCode::StepNotApplicable: return "StepNotApplicable";
        case ErrorCode::Precondition: return "Precondition";
        case ErrorCode::NoWitness: return "NoWitness";
        case ErrorCode::InternalContradiction: return "InternalContradiction";
        case ErrorCode::NotTwoRegular: return "NotTwoRegular";
        case ErrorCode::Parity: return "Parity";
        case ErrorCode::Empty: return "Empty";
        case ErrorCode::InvalidFormat: return "InvalidFormat";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what_arg, long index = -1)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what_arg),
          code_(code),
          index_(index) {}

    ErrorCode code() const noexcept { return code_; }

    // Step index for StepNotApplicable, -1 otherwise.
    long index() const noexcept { return index_; }

private:
    ErrorCode code_;
    long index_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg, long index = -1) {
    throw Error(code, msg, index);
}

} // namespace trichain
