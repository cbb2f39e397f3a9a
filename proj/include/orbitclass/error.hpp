#pragma once

#include <stdexcept>
#include <string>

namespace orbitclass {

enum class ErrorKind {
    VarSpaceMismatch,
    NotDivisible,
    DenominatorRemains,
    ZeroPolynomial,
    DenominatorZero,
    NotSymmetric,
    TransposeOverflow,
    ShapeOutOfBox,
    DoesNotFit,
    RankDeficient,
    NotUniform,
    CodimMismatch,
    OverflowNonEmpty,
    NoConsistentConvention,
    NotInSpan,
    ShapeConstraint,
    InternalNonPolynomial,
    InvalidArgument,
    ParseError,
    SizeLimit,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::VarSpaceMismatch: return "VarSpaceMismatch";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::DenominatorRemains: return "DenominatorRemains";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::DenominatorZero: return "DenominatorZero";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::TransposeOverflow: return "TransposeOverflow";
        case ErrorKind::ShapeOutOfBox: return "ShapeOutOfBox";
        case ErrorKind::DoesNotFit: return "DoesNotFit";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::NotUniform: return "NotUniform";
        case ErrorKind::CodimMismatch: return "CodimMismatch";
        case ErrorKind::OverflowNonEmpty: return "OverflowNonEmpty";
        case ErrorKind::NoConsistentConvention: return "NoConsistentConvention";
        case ErrorKind::NotInSpan: return "NotInSpan";
        case ErrorKind::ShapeConstraint: return "ShapeConstraint";
        case ErrorKind::InternalNonPolynomial: return "InternalNonPolynomial";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::SizeLimit: return "SizeLimit";
    }
    return "Unknown";
}

}  // namespace orbitclass
