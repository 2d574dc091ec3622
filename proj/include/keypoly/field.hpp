#pragma once

#include "keypoly/value.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace keypoly {

class Poly;
class Field;
class Elem;
using FieldPtr = std::shared_ptr<const Field>;

struct FracRep;
struct AlgRep;

/// An element of a Field. Elements are immutable values that carry their field.
///
/// Representation by field kind:
///   Rationals          reduced mpq
///   Prime              canonical residue 0..p-1
///   RationalFunctions  num/den over the base field, coprime, den monic
///   Algebraic          polynomial over the base field of degree < deg(modulus)
class Elem {
public:
    Elem() = default;

    const FieldPtr& field() const noexcept { return field_; }
    bool valid() const noexcept { return field_ != nullptr; }

    bool is_zero() const;
    bool is_one() const;

    Elem operator+(const Elem& o) const;
    Elem operator-(const Elem& o) const;
    Elem operator*(const Elem& o) const;
    Elem operator/(const Elem& o) const;
    Elem operator-() const;
    Elem& operator+=(const Elem& o) { return *this = *this + o; }
    Elem& operator-=(const Elem& o) { return *this = *this - o; }
    Elem& operator*=(const Elem& o) { return *this = *this * o; }

    Elem inverse() const;
    /// Integer power; negative exponents invert (nonzero base required).
    Elem pow(long n) const;

    bool operator==(const Elem& o) const;

    std::string str() const;

    const Rational& rational() const;
    long residue() const;
    const Poly& num() const;
    const Poly& den() const;
    const Poly& alg() const;

private:
    friend class Field;
    using Rep = std::variant<std::monostate, Rational, long, std::shared_ptr<const FracRep>,
                             std::shared_ptr<const AlgRep>>;
    Elem(FieldPtr f, Rep r) : field_(std::move(f)), rep_(std::move(r)) {}

    FieldPtr field_;
    Rep rep_;
};

class Field : public std::enable_shared_from_this<Field> {
public:
    enum class Kind { Rationals, Prime, RationalFunctions, Algebraic };

    static FieldPtr rationals();
    static FieldPtr prime(long p);
    static FieldPtr rational_functions(FieldPtr base, std::string var);
    /// base[var]/(modulus); the modulus must be monic and irreducible over base.
    static FieldPtr algebraic(FieldPtr base, const Poly& modulus, std::string var);

    Kind kind() const noexcept { return kind_; }
    long characteristic() const noexcept { return characteristic_; }
    const FieldPtr& base() const noexcept { return base_; }
    const std::string& var() const noexcept { return var_; }
    const Poly& modulus() const;
    /// Degree over the base field (1 for rationals and prime fields).
    int extension_degree() const;

    bool is_finite() const;
    /// Number of elements of a finite field.
    long order() const;
    std::vector<Elem> elements() const;

    Elem zero() const;
    Elem one() const;
    Elem from_int(long n) const;
    Elem from_integer(const Integer& n) const;
    Elem from_rational(const Rational& q) const;
    /// The adjoined variable of a rational-function or algebraic field.
    Elem generator() const;
    /// Image of an element of this field or of one of its base fields.
    Elem embed(const Elem& a) const;
    /// True when `a` lies in the prime/base subfield reached by repeated `base()`.
    bool is_subfield(const Field& sub) const;

    Elem make_frac(const Poly& num, const Poly& den) const;
    Elem make_alg(const Poly& rep) const;

    bool same_as(const Field& o) const;
    std::string name() const;

private:
    Field() = default;
    FieldPtr self() const { return shared_from_this(); }

    Kind kind_ = Kind::Rationals;
    long characteristic_ = 0;
    FieldPtr base_;
    std::string var_;
    std::shared_ptr<const Poly> modulus_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace keypoly
