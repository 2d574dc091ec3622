#pragma once

#include "keypoly/factor.hpp"
#include "keypoly/valued_field.hpp"

#include <memory>
#include <string>
#include <vector>

namespace keypoly {

/// Laurent polynomial Y^low · poly(Y); poly has a nonzero constant term
/// unless it is zero.
struct Laurent {
    long low = 0;
    Poly poly;

    bool is_zero() const { return poly.is_zero(); }
};

struct PhiExpansion {
    Poly pivot;
    std::vector<Poly> digits;
    std::vector<Value> digit_values;
    std::vector<Value> term_values;
};

/// One term a · φ_1^{m_1} ··· φ_k^{m_k} of the nested expansion.
struct MultiTerm {
    Elem coeff;
    std::vector<long> exponents;
    Value value;
};

/// Residual polynomial of g at the top stage: the graded class of g, shifted
/// to a polynomial with nonzero constant term.
struct Residual {
    Poly poly;
    long m0 = 0;  ///< smallest index attaining the value
    long D = 0;   ///< largest index attaining the value (effective degree)
    Value value;
};

struct KeyCheck {
    bool ok = true;
    std::string reason;
    explicit operator bool() const { return ok; }
};

struct EquivalenceFactorization {
    Poly unit;
    long m0 = 0;
    std::vector<std::pair<Poly, long>> factors;
};

/// A MacLane tower [v0; v1(φ1)=μ1; …; vk(φk)=μk] on K[var].
/// Only the last key value may be infinite.
class InductiveValuation {
public:
    struct Stage {
        Poly phi;
        Value mu;
        long e = 1;        ///< order of μ modulo the previous value group
        long h = 0;        ///< μ = h/e in units of the previous group generator
        long a = 1, b = 0; ///< a·e + b·h = 1
        Rational unit;     ///< generator 1/d of the value group after this stage
        FieldPtr coeffs;   ///< coefficient field of graded classes at this stage
        Poly psi;          ///< residual polynomial of φ at the previous stage (stage ≥ 2)
        Elem z;            ///< image of the previous Y in coeffs (stage ≥ 2)
        std::string yvar;  ///< name of the graded variable Y of this stage
        std::vector<long> uniformizer;  ///< exponents of (π, φ_1, …, φ_k) in ϖ_k
    };

    InductiveValuation(ValuedFieldPtr base, std::string var = "x");

    const ValuedFieldPtr& base() const noexcept { return base_; }
    const FieldPtr& field() const noexcept { return base_->field(); }
    const std::string& var() const noexcept { return var_; }
    int height() const noexcept { return static_cast<int>(stages_.size()); }
    /// 1-based.
    const Stage& stage(int i) const;
    const Poly& phi(int i) const { return stage(i).phi; }
    const Value& mu(int i) const { return stage(i).mu; }
    bool is_pseudo() const;
    /// Tower of the first k stages.
    InductiveValuation prefix(int k) const;

    /// Augmentation with a key polynomial. The first stage accepts any monic
    /// linear φ and any μ.
    InductiveValuation augment(const Poly& phi, const Value& mu) const;
    /// Augmentation without the key checks (stage data is still computed).
    InductiveValuation augment_unchecked(const Poly& phi, const Value& mu) const;

    Poly poly(const std::string& text) const;
    Poly constant(const Elem& c) const { return Poly::constant(c, var_); }

    Value value(const Poly& g) const { return value_at(height(), g); }
    Value value_at(int k, const Poly& g) const;
    PhiExpansion phi_expand(int k, const Poly& g) const;
    std::vector<MultiTerm> multi_expand(const Poly& g) const;
    Value value_by_multi_expansion(const Poly& g) const;
    Poly homogenize(const Poly& g) const;
    bool is_homogeneous(const Poly& g) const;

    bool is_equivalent(const Poly& g, const Poly& h) const;
    /// h divides g up to equivalence, decided on residual polynomials.
    bool equiv_divides(const Poly& h, const Poly& g) const;
    bool is_minimal(const Poly& g) const;
    KeyCheck key_check(const Poly& phi) const;
    bool is_key(const Poly& phi) const { return key_check(phi).ok; }
    long effective_degree(const Poly& g) const;
    long projection(const Poly& g) const;

    Residual residual(const Poly& g) const;
    /// Class of g in the degree-γ piece of the graded algebra of v_i.
    Laurent graded_class(int i, const Poly& g, const Rational& gamma) const;
    /// Degree-γ class at level 0 (a constant), in the residue field.
    Elem base_class(const Elem& a, const Rational& gamma) const;
    /// Image of a class of level i−1 in the coefficient field of stage i.
    Elem evaluate_class(int i, const Laurent& c) const;
    /// A of degree < deg φ_{l+1} with value δ whose evaluated class is c.
    Poly lift_to_level(int l, const Elem& c, const Rational& delta) const;
    /// A with graded_class(top, A, δ) = L.
    Poly lift_class(const Laurent& L, const Rational& delta) const;

    EquivalenceFactorization equivalence_factor(const Poly& f) const;
    Poly lift_residual_factor(const Poly& rho) const;

    /// Denominator of the value group of the top finite stage.
    long value_denominator() const;
    /// Coefficient field of graded classes after the last stage: the residue
    /// field of K[x]/(φ_n) for a pseudo-valuation.
    FieldPtr stage_residue_field() const;
    /// ϖ of the top finite stage as a fraction num/den of polynomials in var.
    std::pair<Poly, Poly> uniformizer_fraction() const;

    std::string str() const;

private:
    Stage make_stage(const Poly& phi, const Value& mu) const;
    int top_finite() const;

    ValuedFieldPtr base_;
    std::string var_;
    std::vector<std::shared_ptr<const Stage>> stages_;
};

}  // namespace keypoly
