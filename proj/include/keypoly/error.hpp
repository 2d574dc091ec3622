#pragma once

#include <stdexcept>
#include <string>

namespace keypoly {

enum class ErrorCode {
    MonicRequired,
    ZeroPolynomial,
    DivisionByZero,
    FieldMismatch,
    NotAUnit,
    PseudoValuationNotAField,
    UnsupportedRing,
    UnsupportedResidueFactorization,
    KeyConditionViolated,
    KeyValueTooSmall,
    InvalidInput,
    LimitRequired,
    ReducibleInput,
    StageBoundExceeded,
    NonUniqueExtension,
    ResidueCharDividesDegree,
    NotEquivalentPower,
    MembershipFailure,
    HypothesisViolated,
    RelationNotHomogeneous,
    RelationValueTooSmall,
    CoverageGapFound,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace keypoly
