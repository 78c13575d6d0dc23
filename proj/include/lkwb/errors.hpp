#ifndef LKWB_ERRORS_HPP
#define LKWB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lkwb {

enum class ErrorKind {
    DivisionByZero,
    FieldMismatch,
    DenominatorVanishesIdentically,
    PoleAtSpecialization,
    ExponentOverflow,
    ParseError,
    NonSquare,
    AmbientMismatch,
    DimensionMismatch,
    ZeroDivisorEncountered,
    ParameterZero,
    SemisimplicityViolation,
    RelationGateNotPassed,
    InfeasibleMode,
    ZeroSeed,
    DepthTooLarge,
    EmptyIntersection,
    InvalidConfig,
    IoFailure,
    InternalCheckFailed,
};

inline const char* to_string(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DenominatorVanishesIdentically: return "DenominatorVanishesIdentically";
        case ErrorKind::PoleAtSpecialization: return "PoleAtSpecialization";
        case ErrorKind::ExponentOverflow: return "ExponentOverflow";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::NonSquare: return "NonSquare";
        case ErrorKind::AmbientMismatch: return "AmbientMismatch";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::ZeroDivisorEncountered: return "ZeroDivisorEncountered";
        case ErrorKind::ParameterZero: return "ParameterZero";
        case ErrorKind::SemisimplicityViolation: return "SemisimplicityViolation";
        case ErrorKind::RelationGateNotPassed: return "RelationGateNotPassed";
        case ErrorKind::InfeasibleMode: return "InfeasibleMode";
        case ErrorKind::ZeroSeed: return "ZeroSeed";
        case ErrorKind::DepthTooLarge: return "DepthTooLarge";
        case ErrorKind::EmptyIntersection: return "EmptyIntersection";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
        case ErrorKind::IoFailure: return "IoFailure";
        case ErrorKind::InternalCheckFailed: return "InternalCheckFailed";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

   private:
    ErrorKind kind_;
};

}  // namespace lkwb

#endif
