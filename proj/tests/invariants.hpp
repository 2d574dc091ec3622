#pragma once

#include "scenarios.hpp"
#include "support.hpp"

#include "keypoly/approximants.hpp"
#include "keypoly/error.hpp"

#include <functional>
#include <string>
#include <vector>

namespace keypoly::testing {

struct SuiteResult {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::string first_failure;

    void check(bool ok, const std::function<std::string()>& what) {
        ++instances;
        if (ok) return;
        if (failures++ == 0) first_failure = what();
    }
};

struct NamedTower {
    std::string name;
    InductiveValuation tower;
};

/// Finite towers of height at least two, exercised by the invariant suites.
inline std::vector<NamedTower> invariant_towers() {
    std::vector<NamedTower> out;
    auto Q2 = padic_field(2);
    {
        auto v = gauss(Q2, 0);
        v = v.augment(v.poly("x+1"), Value(Rational(1, 2)));
        out.push_back({"Q2 [x=0, x+1=1/2]", v});
        out.push_back({"Q2 [x=0, x+1=1/2, x^2+2*x+3=2]", v.augment(v.poly("x^2+2*x+3"), Value(2))});
    }
    {
        auto v = gauss(Q2, Rational(1, 3));
        out.push_back({"Q2 [x=1/3, x^3-2=3/2]", v.augment(v.poly("x^3-2"), Value(Rational(3, 2)))});
    }
    {
        auto F = st_field();
        auto v = gauss(F, Rational(1, 2));
        out.push_back({"Q(s)(t) [x=1/2, x^2+s=3/2]", v.augment(v.poly("x^2+s"), Value(Rational(3, 2)))});
    }
    {
        auto F = t3_field();
        auto v = gauss(F, Rational(1, 2));
        out.push_back({"Q3(t) [x=1/2, x^2+3=3/2]", v.augment(v.poly("x^2+3"), Value(Rational(3, 2)))});
    }
    {
        auto F = order_field(Field::prime(3), "t");
        auto v = gauss(F, 0);
        out.push_back({"F3(t) [x=0, x^2+1=1]", v.augment(v.poly("x^2+1"), Value(1))});
    }
    return out;
}

/// Small integer, sometimes times a field generator.
inline Elem small_elem(const FieldPtr& K, std::mt19937_64& rng) {
    Elem c = K->from_int(uniform(rng, -4, 4));
    if (K->kind() == Field::Kind::Rationals || K->kind() == Field::Kind::Prime || uniform(rng, 0, 2) > 0) return c;
    if (uniform(rng, 0, 1) == 0 || K->base()->kind() == Field::Kind::Rationals ||
        K->base()->kind() == Field::Kind::Prime)
        return c * K->generator();
    return c * K->embed(K->base()->generator());
}

/// Polynomial of degree <= d with coefficients c·π^a, c small and a <= 3.
inline Poly random_scaled(const InductiveValuation& v, std::mt19937_64& rng, int max_degree) {
    const FieldPtr& K = v.field();
    const Elem pi = v.base()->uniformizer();
    std::vector<Elem> cs;
    int d = static_cast<int>(uniform(rng, 0, max_degree));
    for (int i = 0; i <= d; ++i) {
        Elem c = small_elem(K, rng);
        if (uniform(rng, 0, 3) == 0) c = K->zero();
        cs.push_back(c * pi.pow(uniform(rng, 0, 3)));
    }
    return Poly(K, cs, v.var());
}

/// φ_k^m + lower terms, often minimal and often a key.
inline Poly random_near_power(const InductiveValuation& v, std::mt19937_64& rng, long m) {
    const Poly& phi = v.phi(v.height());
    Poly g = phi.pow(static_cast<unsigned>(m));
    for (long j = 0; j < m; ++j) g = g + random_scaled(v, rng, phi.degree() - 1) * phi.pow(static_cast<unsigned>(j));
    return g;
}

inline Poly nonzero(const std::function<Poly()>& gen) {
    while (true) {
        Poly g = gen();
        if (!g.is_zero()) return g;
    }
}

inline std::vector<SuiteResult> run_invariant_suites(const NamedTower& nt, std::mt19937_64& rng, int count) {
    const InductiveValuation& v = nt.tower;
    const int k = v.height();
    const int top = v.phi(k).degree();
    std::vector<SuiteResult> out;
    auto tag = [&](const std::string& what) { return nt.name + ": " + what; };

    SuiteResult expansion{"value by multi-expansion"};
    for (int n = 0; n < count; ++n) {
        Poly g = nonzero([&] { return random_scaled(v, rng, 3 * top); });
        expansion.check(v.value_by_multi_expansion(g) == v.value(g), [&] { return tag(g.str()); });
    }
    out.push_back(expansion);

    SuiteResult stability{"stability below the next key degree"};
    for (int n = 0; n < count; ++n) {
        int i = static_cast<int>(uniform(rng, 1, k - 1));
        Poly g = nonzero([&] { return random_scaled(v, rng, v.phi(i + 1).degree() - 1); });
        Value vi = v.value_at(i, g);
        for (int j = i + 1; j <= k; ++j) stability.check(v.value_at(j, g) == vi, [&] { return tag(g.str()); });
        stability.check(v.value(v.phi(i)) == v.mu(i), [&] { return tag("v(phi_" + std::to_string(i) + ")"); });
    }
    out.push_back(stability);

    SuiteResult minimal{"minimality"};
    for (int n = 0; n < count; ++n) {
        int i = static_cast<int>(uniform(rng, 2, k));
        InductiveValuation prev = v.prefix(i - 1);
        Poly h = nonzero([&] { return random_scaled(v, rng, v.phi(i).degree() - 1); });
        minimal.check(!prev.equiv_divides(v.phi(i), h), [&] { return tag("phi_" + std::to_string(i) + " | " + h.str()); });
        Poly g = random_near_power(v, rng, uniform(rng, 1, 2));
        if (!v.is_minimal(g)) continue;
        Poly h2 = nonzero([&] { return random_scaled(v, rng, g.degree() - 1); });
        minimal.check(!v.equiv_divides(g, h2), [&] { return tag(g.str() + " | " + h2.str()); });
    }
    out.push_back(minimal);

    SuiteResult monotone{"monotonicity"};
    for (int n = 0; n < count; ++n) {
        int i = static_cast<int>(uniform(rng, 2, k));
        InductiveValuation prev = v.prefix(i - 1);
        Poly g = uniform(rng, 0, 1) ? nonzero([&] { return random_scaled(v, rng, 2 * top); })
                                    : v.phi(i) * nonzero([&] { return random_scaled(v, rng, top); }) +
                                          random_scaled(v, rng, 1) * v.base()->uniformizer().pow(4);
        Value a = v.value_at(i, g), b = v.value_at(i - 1, g);
        bool divides = prev.equiv_divides(v.phi(i), g);
        monotone.check(a >= b && ((a == b) == !divides), [&] { return tag(g.str()); });
    }
    out.push_back(monotone);

    SuiteResult divisible{"key degree divisibility"};
    long accepted = 0;
    for (int n = 0, tries = 0; n < count && tries < 20 * count; ++tries) {
        int d = static_cast<int>(uniform(rng, 1, 2 * top + 1));
        Poly g = uniform(rng, 0, 1) ? random_near_power(v, rng, uniform(rng, 1, 3))
                                    : Poly::monomial(v.field()->one(), d, v.var()) + random_scaled(v, rng, d - 1);
        KeyCheck kc{false, ""};
        try {
            kc = v.key_check(g);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::UnsupportedResidueFactorization) throw;
            continue;
        }
        ++n;
        if (kc.ok) ++accepted;
        divisible.check(!kc.ok || g.degree() % top == 0, [&] { return tag(g.str()); });
    }
    divisible.check(accepted > 0, [&] { return tag("no key accepted"); });
    out.push_back(divisible);

    SuiteResult dadd{"effective degree additivity and invariance"};
    for (int n = 0; n < count; ++n) {
        Poly g = nonzero([&] { return random_scaled(v, rng, 2 * top); });
        Poly h = nonzero([&] { return random_scaled(v, rng, 2 * top); });
        dadd.check(v.effective_degree(g * h) == v.effective_degree(g) + v.effective_degree(h),
                   [&] { return tag(g.str() + " * " + h.str()); });
        dadd.check(v.effective_degree(v.homogenize(g)) == v.effective_degree(g), [&] { return tag(g.str()); });
    }
    out.push_back(dadd);

    SuiteResult hom{"homogenize"};
    for (int n = 0; n < count; ++n) {
        Poly g = nonzero([&] { return random_scaled(v, rng, 2 * top + 1); });
        Poly H = v.homogenize(g);
        hom.check(v.value(H) == v.value(g) && v.homogenize(H) == H && v.is_homogeneous(H) &&
                      v.value(g - H) > v.value(g),
                  [&] { return tag(g.str()); });
    }
    out.push_back(hom);
    return out;
}

/// A resolved irreducible f and its pseudo-valuation.
struct ResolvedScenario {
    std::string name;
    ValuedFieldPtr F;
    Poly f;
};

inline std::vector<ResolvedScenario> resolved_scenarios() {
    auto Q2 = padic_field(2);
    auto st = st_field();
    auto F3 = order_field(Field::prime(3), "t");
    auto F5 = order_field(Field::prime(5), "t");
    return {
        {"Q2 x^2+1", Q2, P("x^2+1", Q2->field())},
        {"Q2 x^3-2", Q2, P("x^3-2", Q2->field())},
        {"Q2 x^2+x+1", Q2, P("x^2+x+1", Q2->field())},
        {"Q(s)(t) x^2+s", st, P("x^2+s", st->field())},
        {"Q(s)(t) (x+s)^3+t^2*s", st, P("(x+s)^3+t^2*s", st->field())},
        {"F3(t) x^2-t", F3, P("x^2-t", F3->field())},
        {"F5(t) x^3-t^2*(1+t)", F5, P("x^3-t^2*(1+t)", F5->field())},
    };
}

inline SuiteResult dominance_suite(const ResolvedScenario& sc, std::mt19937_64& rng, int count) {
    SuiteResult r{"pseudo-valuation dominates every stage"};
    const InductiveValuation w = resolve(sc.F, sc.f).branches.front().tower;
    for (int n = 0; n < count; ++n) {
        Poly g = nonzero([&] { return random_scaled(w.prefix(1), rng, 2 * static_cast<int>(sc.f.degree())); });
        Value wg = w.value(g);
        for (int k = 1; k < w.height(); ++k)
            r.check(wg >= w.value_at(k, g), [&] { return sc.name + ": " + g.str(); });
    }
    return r;
}

inline SuiteResult hull_suite(std::mt19937_64& rng, int count) {
    SuiteResult r{"lower hull against brute force"};
    for (int n = 0; n < count; ++n) {
        auto pts = random_points(rng);
        auto N = newton_polygon(pts);
        auto B = brute_vertices(pts);
        bool ok = N.vertices.size() == B.size();
        for (size_t i = 0; ok && i < B.size(); ++i)
            ok = N.vertices[i].abscissa == B[i].abscissa && N.vertices[i].ordinate == B[i].ordinate;
        r.check(ok, [&] { return std::to_string(pts.size()) + " points"; });
    }
    return r;
}

}  // namespace keypoly::testing
