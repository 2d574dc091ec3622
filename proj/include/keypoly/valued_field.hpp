#pragma once

#include "keypoly/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace keypoly {

class InductiveValuation;
class ValuedField;
using ValuedFieldPtr = std::shared_ptr<const ValuedField>;

/// A field K with a rank-one valuation whose value group is (1/d)Z.
class ValuedField {
public:
    virtual ~ValuedField() = default;

    virtual const FieldPtr& field() const = 0;
    virtual Value value(const Elem& a) const = 0;
    virtual const FieldPtr& residue_field() const = 0;
    /// Residue class of a value-zero element; NotAUnit otherwise.
    virtual Elem residue(const Elem& a) const = 0;
    virtual Elem lift(const Elem& r) const = 0;
    /// Element of value 1/d.
    virtual Elem uniformizer() const = 0;
    /// d, the denominator of the value group.
    virtual long value_denominator() const = 0;
    virtual std::string describe() const = 0;

    /// Residue characteristic.
    long residue_characteristic() const { return residue_field()->characteristic(); }
};

/// Q with the p-adic valuation.
ValuedFieldPtr padic_field(long p);

/// k(var) with the order of vanishing at var = 0; k is Q or a prime field.
ValuedFieldPtr order_field(FieldPtr k, const std::string& var);

/// K(var) valued by a tower over K[var] with finite key values.
ValuedFieldPtr extend_by_tower(const InductiveValuation& tower);

/// Additive submonoid of Q generated by finitely many nonnegative values.
class ValueSemigroup {
public:
    explicit ValueSemigroup(std::vector<Rational> generators);

    const std::vector<Rational>& generators() const noexcept { return gens_; }
    /// Common denominator of the generators.
    long denominator() const noexcept { return d_; }
    bool contains(const Rational& q) const;
    /// Smallest positive element, or zero when there is none.
    Rational min_positive() const;
    std::string str() const;

private:
    std::vector<Rational> gens_;
    long d_ = 1;
};

}  // namespace keypoly
