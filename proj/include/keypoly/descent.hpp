#pragma once

#include "keypoly/approximants.hpp"
#include "keypoly/error.hpp"

#include <string>
#include <vector>

namespace keypoly {

/// A local domain A with quotient field K:
///   Z_(p), or R[vars]_(m) with R = Q, F_p or Z and m = (vars) or (p, vars).
/// HypothesisViolated carrying which hypothesis failed: "pDividesDeg",
/// "nonUnique", "notInA" or "keysNotInA".
class HypothesisViolation : public Error {
public:
    HypothesisViolation(std::string kind, const std::string& what)
        : Error(ErrorCode::HypothesisViolated, kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct LocalRing {
    enum class Kind { IntegersLocalized, PolyLocalized };
    enum class Coefficients { Q, Z, Fp };

    Kind kind = Kind::IntegersLocalized;
    Coefficients coefficients = Coefficients::Q;
    long p = 0;
    std::vector<std::string> vars;

    static LocalRing localized_integers(long p);
    static LocalRing localized_polynomials(Coefficients c, std::vector<std::string> vars, long p = 0);

    std::string describe() const;
};

/// Throws UnsupportedRing when A is not a subring of K of a supported shape.
void check_ring(const LocalRing& A, const FieldPtr& K);
bool membership(const LocalRing& A, const Elem& a);
bool poly_in(const LocalRing& A, const Poly& g);
/// Generators of the maximal ideal of A, as elements of K.
std::vector<Elem> maximal_ideal_generators(const LocalRing& A, const FieldPtr& K);
ValueSemigroup semigroup_of_ring(const LocalRing& A, const ValuedFieldPtr& F);

struct PowerDigits {
    long e = 1;
    std::vector<Poly> a;  ///< digits of g in φ_k, a_r = 1
    std::vector<Poly> c;  ///< c_i with g^e = Σ c_i φ_k^i (not reduced mod φ_k)
    std::vector<std::vector<std::vector<long>>> provenance;  ///< multi-indices (l_0..l_r) behind each c_i
};

PowerDigits power_digits(const InductiveValuation& v, const Poly& g, long e);

struct DescentTrace {
    long r = 0;
    long e = 1;
    std::vector<Poly> a;       ///< digits of g
    std::vector<Poly> b;       ///< digits of the homogenized f
    std::vector<Poly> alpha;   ///< c_i reduced mod φ_k
    std::vector<Value> power_margin;  ///< v(α_i − b_i) − (re − i)μ, for every i
    std::vector<Poly> H;       ///< H_j evaluated at u_{j+1}..u_r, reduced mod φ_k
    std::vector<Poly> u;
    std::vector<Value> u_margin;  ///< v(a_j − u_j) − (r − j)μ
    Poly phi;
};

/// Replace the key g of v (coefficients in the valuation ring) by an
/// equivalent key with coefficients in A, given f ∼ g^e with e = deg f / deg g.
std::pair<Poly, DescentTrace> descend_key(const InductiveValuation& v, const Poly& g, const Poly& f,
                                          const LocalRing& A);

struct GeneratingSequence {
    std::vector<Poly> phis;    ///< φ_1 .. φ_{n−1}
    std::vector<Value> values; ///< v(φ_i)
    std::vector<long> n;       ///< n_k = deg f / deg φ_k
    std::vector<long> m;       ///< m_i = deg φ_{i+1} / deg φ_i, with φ_n = f
    InductiveValuation tower;  ///< keys φ_i, ending with v(f) = ∞
    std::vector<DescentTrace> traces;
    bool all_in_A = false;
};

GeneratingSequence generating_sequence(const LocalRing& A, const ValuedFieldPtr& F, const Poly& f,
                                       int stage_bound = kDefaultStageBound);

/// Generating sequence read off a resolved unique chain whose keys already lie
/// in A[x], without the degree hypothesis of the descent.
GeneratingSequence sequence_from_chain(const LocalRing& A, const Resolution& r);

}  // namespace keypoly
