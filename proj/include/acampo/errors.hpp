#pragma once

#include <stdexcept>
#include <string>

namespace acampo {

// Error taxonomy shared by the library and the CLI exit-code mapping.
enum class ErrorKind {
    InvalidModulus,
    EnumerationTooLarge,
    ShapeError,
    InvalidCharacteristic,
    NeedsMoreTerms,
    IncompleteGerm,
    MustValidateFirst,
    InvalidArity,
    InvalidExponent,
    UnsupportedExponentPair,
    InvalidIndex,
    NotApplicable,
    InvalidPrime,
    BudgetExceeded,
    InconsistentDivide,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    // CLI exit codes: 1 validation failure, 2 input/parse error, 3 budget error.
    int exit_code() const {
        switch (kind_) {
            case ErrorKind::EnumerationTooLarge:
            case ErrorKind::BudgetExceeded:
                return 3;
            case ErrorKind::MustValidateFirst:
            case ErrorKind::InconsistentDivide:
                return 1;
            default:
                return 2;
        }
    }

private:
    ErrorKind kind_;
};

}  // namespace acampo
