#include "keypoly/value.hpp"

#include "keypoly/error.hpp"

namespace keypoly {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::MonicRequired: return "MonicRequired";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::PseudoValuationNotAField: return "PseudoValuationNotAField";
        case ErrorCode::UnsupportedRing: return "UnsupportedRing";
        case ErrorCode::UnsupportedResidueFactorization: return "UnsupportedResidueFactorization";
        case ErrorCode::KeyConditionViolated: return "KeyConditionViolated";
        case ErrorCode::KeyValueTooSmall: return "KeyValueTooSmall";
        case ErrorCode::InvalidInput: return "InvalidInput";
        case ErrorCode::LimitRequired: return "LimitRequired";
        case ErrorCode::ReducibleInput: return "ReducibleInput";
        case ErrorCode::StageBoundExceeded: return "StageBoundExceeded";
        case ErrorCode::NonUniqueExtension: return "NonUniqueExtension";
        case ErrorCode::ResidueCharDividesDegree: return "ResidueCharDividesDegree";
        case ErrorCode::NotEquivalentPower: return "NotEquivalentPower";
        case ErrorCode::MembershipFailure: return "MembershipFailure";
        case ErrorCode::HypothesisViolated: return "HypothesisViolated";
        case ErrorCode::RelationNotHomogeneous: return "RelationNotHomogeneous";
        case ErrorCode::RelationValueTooSmall: return "RelationValueTooSmall";
        case ErrorCode::CoverageGapFound: return "CoverageGapFound";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw Error(ErrorCode::ParseError, "bad rational literal '" + text + "'");
    q.canonicalize();
    return q;
}

const Rational& Value::finite() const {
    if (infinite_) throw Error(ErrorCode::InvalidInput, "value is infinite");
    return q_;
}

Value Value::operator+(const Value& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return Value(Rational(q_ + o.q_));
}

Value Value::operator-(const Value& o) const {
    if (o.infinite_) throw Error(ErrorCode::InvalidInput, "cannot subtract infinity");
    if (infinite_) return infinity();
    return Value(Rational(q_ - o.q_));
}

Value Value::operator*(long n) const {
    if (n < 0) throw Error(ErrorCode::InvalidInput, "negative multiple of a value");
    if (n == 0) return Value(0);
    if (infinite_) return infinity();
    return Value(Rational(q_ * n));
}

bool Value::operator==(const Value& o) const {
    if (infinite_ || o.infinite_) return infinite_ == o.infinite_;
    return q_ == o.q_;
}

std::strong_ordering Value::operator<=>(const Value& o) const {
    if (infinite_ && o.infinite_) return std::strong_ordering::equal;
    if (infinite_) return std::strong_ordering::greater;
    if (o.infinite_) return std::strong_ordering::less;
    int c = cmp(q_, o.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Value::str() const { return infinite_ ? "infinity" : to_string(q_); }

}  // namespace keypoly
