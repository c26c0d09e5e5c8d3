#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace betashift {

enum class ErrorKind {
    InvalidInput,
    InvalidBeta,
    InvalidKneading,
    PrecisionExhausted,
    HorizonTooSmall,
    HorizonExceeded,
    IndexBeyondHorizon,
    ToleranceUnreachable,
    InadmissibleWord,
    SoficInput,
    WorkBudgetExceeded,
    ZeroTail,
};

inline std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidBeta: return "InvalidBeta";
    case ErrorKind::InvalidKneading: return "InvalidKneading";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorKind::HorizonExceeded: return "HorizonExceeded";
    case ErrorKind::IndexBeyondHorizon: return "IndexBeyondHorizon";
    case ErrorKind::ToleranceUnreachable: return "ToleranceUnreachable";
    case ErrorKind::InadmissibleWord: return "InadmissibleWord";
    case ErrorKind::SoficInput: return "SoficInput";
    case ErrorKind::WorkBudgetExceeded: return "WorkBudgetExceeded";
    case ErrorKind::ZeroTail: return "ZeroTail";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace betashift
