#pragma once

#include "keypoly/descent.hpp"

#include <string>
#include <vector>

namespace keypoly {

/// Initial form of a polynomial for a (pseudo-)valuation w: a lift and its degree.
struct InitialForm {
    Poly lift;
    Value degree;
};

InitialForm initial_form(const InductiveValuation& w, const Poly& g);
/// In(a) = In(b), i.e. w(a − b) > w(a).
bool same_initial_form(const InductiveValuation& w, const Poly& a, const Poly& b);
InitialForm operator*(const InitialForm& a, const InitialForm& b);

/// c · φ̄_1^{j_1} ··· φ̄_i^{j_i} with the lift c in A and total degree `value`.
struct GradedTerm {
    Elem coeff;
    std::vector<long> exponents;
    Value value;
};

/// φ̄_gen^power + Σ terms, homogeneous of degree power · v(φ_gen).
struct GradedRelation {
    int gen = 1;
    long power = 1;
    std::vector<GradedTerm> terms;
    Value degree;
};

struct GradedPresentation {
    std::vector<std::string> names;
    std::vector<Value> degrees;
    std::vector<GradedRelation> relations;
    std::vector<Poly> phis;     ///< φ_1 .. φ_{n−1}
    Poly f;
    InductiveValuation tower;   ///< pseudo-valuation with v(f) = ∞
};

std::string monomial_str(const std::vector<long>& exponents, const std::vector<std::string>& names);
std::string relation_str(const GradedRelation& r, const std::vector<std::string>& names);

GradedPresentation presentation(const LocalRing& A, const GeneratingSequence& gs, const Poly& f);

struct RelationReport {
    int gen = 1;
    Value degree;
    Value lift_value;  ///< value of the lift reduced mod f
};

/// Throws RelationNotHomogeneous or RelationValueTooSmall.
std::vector<RelationReport> relation_check(const GradedPresentation& P);

struct SemigroupModule {
    ValueSemigroup base;
    std::vector<Rational> module_gens;  ///< Σ j_i v(φ_i), 0 ≤ j_i < m_i
    std::vector<Rational> small_gens;   ///< 0 and the v(φ_i) alone
    bool small_gens_cover = false;      ///< every observed value lies in S + small_gens
    std::vector<Rational> observed;     ///< distinct values up to the bound
    long checked = 0;                   ///< number of elements whose value was tested
    Rational bound;
};

bool module_contains(const ValueSemigroup& S, const std::vector<Rational>& gens, const Rational& q);

/// Values of x^j mod f, of products of ring generators and φ's, and of
/// `samples` random elements of A[x], all checked against S + z up to `bound`.
/// Throws CoverageGapFound on the first value outside.
SemigroupModule semigroup_module(const LocalRing& A, const GeneratingSequence& gs, const Poly& f,
                                 const Rational& bound, long samples = 500, unsigned long seed = 1);

/// {"generators": [{"degree", "name"}], "relations": [{"lead": {"gen", "power"},
/// "terms": [{"coeff", "monomial", "value"}]}], "semigroup": {"base_gens", "module_gens"}}
/// with sorted keys and reduced fractions, indented by two spaces.
std::string presentation_json(const GradedPresentation& P, const SemigroupModule& M);

}  // namespace keypoly
