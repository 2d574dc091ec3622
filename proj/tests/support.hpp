#pragma once

#include "keypoly/factor.hpp"
#include "keypoly/newton_polygon.hpp"
#include "keypoly/parser.hpp"

#include <algorithm>
#include <random>

namespace keypoly::testing {

inline Poly P(const std::string& text, const FieldPtr& K, const std::string& var = "x") {
    return parse_poly(text, K, var);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Small random element: rationals with bounded height, polynomials in the
/// adjoined variables of rational-function fields.
inline Elem random_elem(const FieldPtr& K, std::mt19937_64& rng, long height = 6) {
    switch (K->kind()) {
        case Field::Kind::Rationals: {
            Rational q(uniform(rng, -height, height), uniform(rng, 1, 3));
            q.canonicalize();
            return K->from_rational(q);
        }
        case Field::Kind::Prime: return K->from_int(uniform(rng, 0, K->characteristic() - 1));
        case Field::Kind::RationalFunctions: {
            std::vector<Elem> cs;
            int d = static_cast<int>(uniform(rng, 0, 2));
            for (int i = 0; i <= d; ++i) cs.push_back(random_elem(K->base(), rng, height));
            Poly num(K->base(), cs, K->var());
            if (uniform(rng, 0, 3) == 0) {
                Poly den = Poly::monomial(K->base()->one(), static_cast<int>(uniform(rng, 0, 1)), K->var()) +
                           Poly::constant(random_elem(K->base(), rng, height), K->var());
                if (!den.is_zero()) return K->make_frac(num, den);
            }
            return K->make_frac(num, Poly::constant(K->base()->one(), K->var()));
        }
        case Field::Kind::Algebraic: {
            std::vector<Elem> cs;
            for (int i = 0; i < K->extension_degree(); ++i) cs.push_back(random_elem(K->base(), rng, height));
            return K->make_alg(Poly(K->base(), cs, K->var()));
        }
    }
    return K->zero();
}

inline Poly random_poly(const FieldPtr& K, std::mt19937_64& rng, int max_degree, long height = 6,
                        const std::string& var = "x") {
    std::vector<Elem> cs;
    int d = static_cast<int>(uniform(rng, 0, max_degree));
    for (int i = 0; i <= d; ++i) cs.push_back(random_elem(K, rng, height));
    return Poly(K, cs, var);
}

inline Poly random_monic(const FieldPtr& K, std::mt19937_64& rng, int degree, long height = 6,
                         const std::string& var = "x") {
    std::vector<Elem> cs;
    for (int i = 0; i < degree; ++i) cs.push_back(random_elem(K, rng, height));
    cs.push_back(K->one());
    return Poly(K, cs, var);
}

/// Irreducibility by exhaustive search over monic divisors of degree <= deg/2.
inline bool irreducible_by_search(const Poly& g) {
    const FieldPtr& F = g.field();
    if (g.degree() < 1) return false;
    const auto elems = F->elements();
    for (int d = 1; 2 * d <= g.degree(); ++d) {
        std::vector<size_t> idx(d, 0);
        while (true) {
            std::vector<Elem> cs;
            for (int i = 0; i < d; ++i) cs.push_back(elems[idx[i]]);
            cs.push_back(F->one());
            if (divmod(g, Poly(F, cs, g.var())).second.is_zero()) return false;
            int i = 0;
            while (i < d && ++idx[i] == elems.size()) idx[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

// A point is a lower-hull vertex when it is the lowest at its abscissa and lies
// strictly below every chord joining a point on its left to one on its right.
inline std::vector<PolygonPoint> brute_vertices(const std::vector<PolygonPoint>& pts) {
    std::vector<PolygonPoint> out;
    for (const auto& p : pts) {
        bool ok = true;
        for (const auto& q : pts)
            if (q.abscissa == p.abscissa && q.ordinate < p.ordinate) ok = false;
        for (const auto& q : pts)
            for (const auto& r : pts) {
                if (!(q.abscissa < p.abscissa && p.abscissa < r.abscissa)) continue;
                Rational chord = q.ordinate + (r.ordinate - q.ordinate) * (p.abscissa - q.abscissa) /
                                                  Rational(r.abscissa - q.abscissa);
                if (p.ordinate >= chord) ok = false;
            }
        if (ok && std::none_of(out.begin(), out.end(), [&](const auto& o) { return o.abscissa == p.abscissa; }))
            out.push_back(p);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.abscissa < b.abscissa; });
    return out;
}

/// Random point set with distinct abscissas in [0, n] and small ordinates.
inline std::vector<PolygonPoint> random_points(std::mt19937_64& rng) {
    std::vector<PolygonPoint> pts;
    const long n = uniform(rng, 1, 8);
    for (long i = 0; i <= n; ++i)
        if (i == 0 || i == n || uniform(rng, 0, 2) > 0) {
            Rational q(uniform(rng, -6, 12), uniform(rng, 1, 3));
            q.canonicalize();
            pts.push_back({i, q});
        }
    return pts;
}

}  // namespace keypoly::testing
