#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrc {

enum class ErrorCode {
    // field / polynomial layer
    NotPrime,
    ReducibleModulus,
    DegreeMismatch,
    FieldTooLarge,
    DivisionByZero,
    ContextMismatch,
    // series
    NotInvertible,
    NoContraction,
    PrecisionExhausted,
    // curves
    PlaceAtInfinity,
    NonRationalPlace,
    UnsupportedBackend,
    Exhausted,
    NotASquare,
    // builder
    RankDeficient,
    InsufficientPrecision,
    NotEnoughPlaces,
    NotEnoughIrreducibles,
    AlphaInvalid,
    FieldTooSmall,
    BadLocalityParity,
    NotPrimeField,
    // codec
    BudgetExceeded,
    NotInAnyGroup,
    MultipleErasures,
    NoErasure,
    NotACodeword,
    DistanceUnknown,
    // bounds
    DomainError,
    NotOddPower,
    Inapplicable,
    BadParams,
    // plumbing
    InvalidConfig,
    IoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
    throw Error(code, what);
}

}  // namespace lrc
