#pragma once

#include <stdexcept>
#include <string>

namespace siltlab {

/// Error codes surfaced through SiltError::code(). The CLI maps these to
/// exit codes (input errors -> 2, budget/undecided -> 3).
enum class ErrorCode {
    MalformedRelation,
    NotFiniteDimensional,
    ShapeMismatch,
    AlgebraMismatch,
    NotChainMap,
    DerivedFlagRejected,
    NotProjectiveTerms,
    NotInjectiveTerms,
    NotPerfect,
    SupportOutOfRange,
    IndexOutOfRange,
    NotNSilting,
    NotTilting,
    NotInRepP,
    DecompositionFailure,
    BudgetExceeded,
    InvalidArgument,
    IoError,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::MalformedRelation: return "MalformedRelation";
        case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
        case ErrorCode::ShapeMismatch: return "ShapeMismatch";
        case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
        case ErrorCode::NotChainMap: return "NotChainMap";
        case ErrorCode::DerivedFlagRejected: return "DerivedFlagRejected";
        case ErrorCode::NotProjectiveTerms: return "NotProjectiveTerms";
        case ErrorCode::NotInjectiveTerms: return "NotInjectiveTerms";
        case ErrorCode::NotPerfect: return "NotPerfect";
        case ErrorCode::SupportOutOfRange: return "SupportOutOfRange";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotNSilting: return "NotNSilting";
        case ErrorCode::NotTilting: return "NotTilting";
        case ErrorCode::NotInRepP: return "NotInRepP";
        case ErrorCode::DecompositionFailure: return "DecompositionFailure";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

class SiltError : public std::runtime_error {
public:
    SiltError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Three-valued verdict for budgeted decision procedures.
enum class Verdict { True, False, Undecided };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::True: return "true";
        case Verdict::False: return "false";
        case Verdict::Undecided: return "undecided";
    }
    return "?";
}

}  // namespace siltlab
