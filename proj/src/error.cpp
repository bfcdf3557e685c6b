#include "lrc/error.hpp"

namespace lrc {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::FieldTooLarge: return "FieldTooLarge";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::NotInvertible: return "NotInvertible";
        case ErrorCode::NoContraction: return "NoContraction";
        case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorCode::PlaceAtInfinity: return "PlaceAtInfinity";
        case ErrorCode::NonRationalPlace: return "NonRationalPlace";
        case ErrorCode::UnsupportedBackend: return "UnsupportedBackend";
        case ErrorCode::Exhausted: return "Exhausted";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
        case ErrorCode::NotEnoughPlaces: return "NotEnoughPlaces";
        case ErrorCode::NotEnoughIrreducibles: return "NotEnoughIrreducibles";
        case ErrorCode::AlphaInvalid: return "AlphaInvalid";
        case ErrorCode::FieldTooSmall: return "FieldTooSmall";
        case ErrorCode::BadLocalityParity: return "BadLocalityParity";
        case ErrorCode::NotPrimeField: return "NotPrimeField";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::NotInAnyGroup: return "NotInAnyGroup";
        case ErrorCode::MultipleErasures: return "MultipleErasures";
        case ErrorCode::NoErasure: return "NoErasure";
        case ErrorCode::NotACodeword: return "NotACodeword";
        case ErrorCode::DistanceUnknown: return "DistanceUnknown";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::NotOddPower: return "NotOddPower";
        case ErrorCode::Inapplicable: return "Inapplicable";
        case ErrorCode::BadParams: return "BadParams";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace lrc
