#pragma once

#include "keypoly/field.hpp"

#include <string>
#include <utility>
#include <vector>

namespace keypoly {

/// Dense univariate polynomial over a Field, lowest degree first.
/// Trailing zeros are stripped; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    explicit Poly(FieldPtr field, std::string var = "x");
    Poly(FieldPtr field, std::vector<Elem> coeffs, std::string var = "x");

    static Poly constant(const Elem& c, std::string var = "x");
    static Poly monomial(const Elem& c, int degree, std::string var = "x");
    static Poly variable(FieldPtr field, std::string var = "x");

    const FieldPtr& field() const noexcept { return field_; }
    const std::string& var() const noexcept { return var_; }
    Poly with_var(std::string var) const;

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_monic() const;

    Elem coeff(int i) const;
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    Elem lc() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Elem& c) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned n) const;
    Elem eval(const Elem& a) const;
    /// this(inner)
    Poly compose(const Poly& inner) const;
    Poly derivative() const;
    Poly monic() const;
    /// Multiply by var^k.
    Poly shift(int k) const;
    /// Apply a coefficient map into another field.
    template <class F>
    Poly map(FieldPtr target, F&& fn) const {
        std::vector<Elem> out;
        out.reserve(c_.size());
        for (const auto& c : c_) out.push_back(fn(c));
        return Poly(std::move(target), std::move(out), var_);
    }

    bool operator==(const Poly& o) const;

    std::string str() const;

private:
    void normalize();

    FieldPtr field_;
    std::vector<Elem> c_;
    std::string var_;
};

/// General division over the coefficient field; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Division by a monic polynomial, exact over any coefficient subring.
std::pair<Poly, Poly> poly_divmod(const Poly& g, const Poly& phi);

/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

struct ExtendedGcd {
    Poly g, s, t;  // g = s·a + t·b, g monic
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// Classical resultant, computed by the Euclidean remainder sequence.
Elem resultant(const Poly& f, const Poly& g);

}  // namespace keypoly
