#pragma once

#include "keypoly/descent.hpp"
#include "keypoly/inductive_valuation.hpp"
#include "keypoly/parser.hpp"

#include <random>
#include <string>
#include <vector>

namespace keypoly::testing {

/// Q(s)(t) with v(s) = 1, v(t) = 3/2 and t^2/s^3 of residue 1, realised by
/// the tower [v(t) = 3/2, v(t^2 - s^3) = 7/2] over Q(s). Checks built on it use
/// only values up to 3 and the residue of t^2/s^3, which every valuation with
/// those constraints shares.
inline ValuedFieldPtr st_field() {
    auto base = order_field(Field::rationals(), "s");
    InductiveValuation T(base, "t");
    T = T.augment(T.poly("t"), Value(Rational(3, 2)));
    T = T.augment(T.poly("t^2-s^3"), Value(Rational(7, 2)));
    return extend_by_tower(T);
}

inline InductiveValuation gauss(const ValuedFieldPtr& F, const Rational& mu, const std::string& var = "x") {
    InductiveValuation v(F, var);
    return v.augment(v.poly(var), Value(mu));
}

/// Q(t) over Q_3 with v(t) = 1.
inline ValuedFieldPtr t3_field() {
    InductiveValuation T(padic_field(3), "t");
    return extend_by_tower(T.augment(T.poly("t"), Value(1)));
}

struct DescentCase {
    std::string label;
    InductiveValuation v;
    Poly g;  ///< key with a coefficient outside A
    Poly f;  ///< in A[x], equivalent to g^e
    LocalRing A;
};

/// Seeded perturbations g = g0 + h with h integral but not in A, and
/// f = g0^e + (terms in A of value above e·v(g0)).
inline std::vector<DescentCase> descent_cases(unsigned seed, int per_family) {
    std::mt19937_64 rng(seed);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    const char* coeffs[] = {"1", "-1", "2", "-2", "1/2", "-5/2"};
    auto coeff = [&] { return std::string(coeffs[pick(0, 5)]); };

    struct Family {
        std::string name;
        ValuedFieldPtr F;
        InductiveValuation v;
        std::string g0;
        Rational mu;        ///< v(g0)
        long deg;           ///< deg g0
        std::string small;  ///< element of A of value 1
        Rational vsmall;
        std::string gen;    ///< element of A of value gv
        Rational gv;
        std::string den;    ///< denominator making h leave A
        Rational vden;
        std::vector<long> powers;
        LocalRing A;
    };
    std::vector<Family> fams;
    {
        auto F = st_field();
        auto A = LocalRing::localized_polynomials(LocalRing::Coefficients::Q, {"s", "t"});
        fams.push_back({"st/level1", F, gauss(F, 1), "x+s", 1, 1, "s", 1, "t", Rational(3, 2), "s", 1, {1, 2, 3}, A});
        auto v1 = gauss(F, Rational(1, 2));
        auto v2 = v1.augment(v1.poly("x^2+s"), Value(Rational(3, 2)));
        fams.push_back({"st/level2", F, v2, "x^2+s+t", Rational(3, 2), 2, "s", 1, "t", Rational(3, 2), "s", 1,
                        {1, 2, 3}, A});
    }
    {
        auto F = t3_field();
        auto A = LocalRing::localized_polynomials(LocalRing::Coefficients::Z, {"t"}, 3);
        fams.push_back({"t3/level1", F, gauss(F, 1), "x+t", 1, 1, "3", 1, "t", 1, "3", 1, {1, 2, 4}, A});
        auto v1 = gauss(F, Rational(1, 2));
        auto v2 = v1.augment(v1.poly("x^2+3"), Value(Rational(3, 2)));
        fams.push_back({"t3/level2", F, v2, "x^2+t*x+3", Rational(3, 2), 2, "3", 1, "t", 1, "3", 1, {1, 2, 4}, A});
    }

    std::vector<DescentCase> out;
    for (const auto& fam : fams) {
        for (int n = 0; n < per_family; ++n) {
            // h = c · gen^a / den^b with value a·gv − b·vden > mu
            long a = 0, b = 0;
            do {
                a = pick(1, 5);
                b = pick(1, 4);
            } while (!(a * fam.gv - b * fam.vden > fam.mu));
            std::string h = coeff() + "*" + fam.gen + "^" + std::to_string(a) + "/" + fam.den + "^" + std::to_string(b);
            const long e = fam.powers[pick(0, static_cast<long>(fam.powers.size()) - 1)];
            // x^j · small^k with j < e·deg and value above e·mu
            std::string f = "(" + fam.g0 + ")^" + std::to_string(e);
            const long terms = pick(1, 3);
            for (long t = 0; t < terms; ++t) {
                long j = pick(0, e * fam.deg - 1);
                Rational xv = fam.v.value(fam.v.poly("x")).finite() * j;
                long k = 0;
                while (!(xv + fam.vsmall * k > fam.mu * e)) ++k;
                k += pick(0, 1);
                f += "+" + coeff() + "*" + fam.small + "^" + std::to_string(k) + "*x^" + std::to_string(j);
            }
            out.push_back({fam.name + "#" + std::to_string(n) + " e=" + std::to_string(e), fam.v,
                           fam.v.poly(fam.g0 + "+" + h), fam.v.poly(f), fam.A});
        }
    }
    return out;
}

}  // namespace keypoly::testing
