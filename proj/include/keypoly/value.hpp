#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>

namespace keypoly {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

/// Element of Q ∪ {∞}. Infinity compares greater than every finite value.
class Value {
public:
    Value() : infinite_(false), q_(0) {}
    Value(long n) : infinite_(false), q_(n) {}
    Value(const Rational& q) : infinite_(false), q_(q) {}

    static Value infinity() {
        Value v;
        v.infinite_ = true;
        return v;
    }

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }
    const Rational& finite() const;

    Value operator+(const Value& o) const;
    /// ∞ − finite = ∞; subtracting infinity is an error.
    Value operator-(const Value& o) const;
    /// Nonnegative integer multiples; 0·∞ is taken to be 0.
    Value operator*(long n) const;

    bool operator==(const Value& o) const;
    std::strong_ordering operator<=>(const Value& o) const;

    std::string str() const;

private:
    bool infinite_;
    Rational q_;
};

inline Value min(const Value& a, const Value& b) { return b < a ? b : a; }

}  // namespace keypoly
