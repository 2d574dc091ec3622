#include "keypoly/graded.hpp"

#include "keypoly/error.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace keypoly {

InitialForm initial_form(const InductiveValuation& w, const Poly& g) { return {g, w.value(g)}; }

bool same_initial_form(const InductiveValuation& w, const Poly& a, const Poly& b) {
    Value va = w.value(a);
    if (va.is_infinite()) return w.value(b).is_infinite();
    return w.value(a - b) > va;
}

InitialForm operator*(const InitialForm& a, const InitialForm& b) { return {a.lift * b.lift, a.degree + b.degree}; }

std::string monomial_str(const std::vector<long>& exponents, const std::vector<std::string>& names) {
    std::string out;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += names[i];
        if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

std::string relation_str(const GradedRelation& r, const std::vector<std::string>& names) {
    std::vector<long> lead(r.gen, 0);
    lead[r.gen - 1] = r.power;
    std::string out = monomial_str(lead, names);
    for (const auto& t : r.terms) {
        std::string c = t.coeff.str();
        std::string m = monomial_str(t.exponents, names);
        bool compound = c.find_first_of("+-", 1) != std::string::npos;
        bool negative = !compound && c[0] == '-';
        std::string mag = negative ? c.substr(1) : c;
        if (compound) mag = "(" + mag + ")";
        out += negative ? "-" : "+";
        if (m == "1") out += mag;
        else out += (mag == "1" ? "" : mag + "*") + m;
    }
    return out;
}

GradedPresentation presentation(const LocalRing& A, const GeneratingSequence& gs, const Poly& f) {
    GradedPresentation P{{}, {}, {}, gs.phis, f, gs.tower};
    const int n = static_cast<int>(gs.phis.size());
    for (int i = 1; i <= n; ++i) {
        P.names.push_back("phi_" + std::to_string(i));
        P.degrees.push_back(gs.values[i - 1]);
    }
    for (int i = 1; i <= n; ++i) {
        const Poly& next = i < n ? gs.phis[i] : f;
        InductiveValuation vi = gs.tower.prefix(i);
        GradedRelation rel;
        rel.gen = i;
        rel.power = next.degree() / gs.phis[i - 1].degree();
        rel.degree = gs.values[i - 1] * rel.power;
        for (const auto& t : vi.multi_expand(next)) {
            if (t.exponents[i - 1] == rel.power) continue;
            if (!(t.value == rel.degree)) continue;
            if (!membership(A, t.coeff))
                throw Error(ErrorCode::MembershipFailure, "relation coefficient " + t.coeff.str() + " is not in A");
            rel.terms.push_back({t.coeff, t.exponents, t.value});
        }
        std::sort(rel.terms.begin(), rel.terms.end(), [](const GradedTerm& a, const GradedTerm& b) {
            return std::lexicographical_compare(b.exponents.rbegin(), b.exponents.rend(), a.exponents.rbegin(),
                                                a.exponents.rend());
        });
        P.relations.push_back(std::move(rel));
    }
    return P;
}

std::vector<RelationReport> relation_check(const GradedPresentation& P) {
    std::vector<RelationReport> out;
    const InductiveValuation& w = P.tower;
    for (const auto& rel : P.relations) {
        const std::string shown = relation_str(rel, P.names);
        Poly lift = P.phis[rel.gen - 1].pow(static_cast<unsigned>(rel.power));
        for (const auto& t : rel.terms) {
            Value tv = w.base()->value(t.coeff);
            Poly term = Poly::constant(t.coeff, w.var());
            for (size_t l = 0; l < t.exponents.size(); ++l) {
                tv = tv + P.degrees[l] * t.exponents[l];
                term = term * P.phis[l].pow(static_cast<unsigned>(t.exponents[l]));
            }
            if (!(tv == rel.degree))
                throw Error(ErrorCode::RelationNotHomogeneous,
                            shown + ": term " + monomial_str(t.exponents, P.names) + " has degree " + tv.str() +
                                ", not " + rel.degree.str());
            lift = lift + term;
        }
        Value lv = w.value(poly_divmod(lift, P.f).second);
        if (!(lv > rel.degree))
            throw Error(ErrorCode::RelationValueTooSmall,
                        shown + ": lift has value " + lv.str() + ", not above " + rel.degree.str());
        out.push_back({rel.gen, rel.degree, lv});
    }
    return out;
}

bool module_contains(const ValueSemigroup& S, const std::vector<Rational>& gens, const Rational& q) {
    for (const auto& z : gens)
        if (z <= q && S.contains(q - z)) return true;
    return false;
}

SemigroupModule semigroup_module(const LocalRing& A, const GeneratingSequence& gs, const Poly& f,
                                 const Rational& bound, long samples, unsigned long seed) {
    const InductiveValuation& w = gs.tower;
    const ValuedFieldPtr& F = w.base();
    const FieldPtr& K = w.field();
    SemigroupModule M{semigroup_of_ring(A, F), {}, {Rational(0)}, true, {}, 0, bound};
    const int n = static_cast<int>(gs.phis.size());

    std::vector<Rational> z{Rational(0)};
    for (int i = 0; i < n; ++i) {
        std::vector<Rational> next;
        for (const auto& base : z)
            for (long j = 0; j < gs.m[i]; ++j) next.push_back(base + gs.values[i].finite() * j);
        z = std::move(next);
        M.small_gens.push_back(gs.values[i].finite());
    }
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    M.module_gens = z;
    std::sort(M.small_gens.begin(), M.small_gens.end());
    M.small_gens.erase(std::unique(M.small_gens.begin(), M.small_gens.end()), M.small_gens.end());

    auto record = [&](const Value& v) {
        ++M.checked;
        if (v.is_infinite() || v.finite() > bound) return;
        const Rational& q = v.finite();
        if (!module_contains(M.base, M.module_gens, q))
            throw Error(ErrorCode::CoverageGapFound, "value " + to_string(q) + " is not in S + z");
        if (!module_contains(M.base, M.small_gens, q)) M.small_gens_cover = false;
        if (std::find(M.observed.begin(), M.observed.end(), q) == M.observed.end()) M.observed.push_back(q);
    };
    auto reduced_value = [&](const Poly& g) { return w.value(poly_divmod(g, f).second); };

    const auto gens = maximal_ideal_generators(A, K);
    std::vector<Rational> gen_values;
    for (const auto& g : gens) gen_values.push_back(F->value(g).finite());

    // ring monomials Π gen^a with value ≤ bound
    std::vector<Rational> ring_values;
    std::vector<long> a(gens.size(), 0);
    std::function<void(size_t, Rational)> ring = [&](size_t i, Rational acc) {
        if (i == gens.size()) {
            ring_values.push_back(acc);
            return;
        }
        for (a[i] = 0; acc + gen_values[i] * a[i] <= bound; ++a[i]) ring(i + 1, acc + gen_values[i] * a[i]);
        a[i] = 0;
    };
    ring(0, Rational(0));

    // base monomials: x^j and Π φ_i^{j_i} with j_i ≤ m_i
    std::vector<Poly> base;
    const Poly x = Poly::variable(K, f.var());
    for (long j = 0; j < 3 * f.degree(); ++j) base.push_back(x.pow(static_cast<unsigned>(j)));
    std::function<void(int, const Poly&)> phis = [&](int i, const Poly& acc) {
        if (i == n) {
            base.push_back(acc);
            return;
        }
        Poly p = acc;
        for (long j = 0; j <= gs.m[i]; ++j) {
            phis(i + 1, p);
            p = poly_divmod(p * gs.phis[i], f).second;
        }
    };
    phis(0, Poly::constant(K->one(), f.var()));
    for (const auto& b : base) {
        Value vb = reduced_value(b);
        for (const auto& rv : ring_values) record(vb + Value(rv));
    }

    std::mt19937_64 rng(seed);
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    auto random_ring_elem = [&]() {
        Elem c = K->zero();
        for (long t = pick(1, 3); t > 0; --t) {
            Elem m = K->from_int(pick(-4, 4));
            for (const auto& g : gens) m = m * g.pow(pick(0, 3));
            c = c + m;
        }
        return c;
    };
    for (long s = 0; s < samples; ++s) {
        Poly g(K, f.var());
        for (long t = pick(1, 4); t > 0; --t) {
            const Poly& b = base[static_cast<size_t>(pick(0, static_cast<long>(base.size()) - 1))];
            g = g + b * random_ring_elem();
        }
        g = poly_divmod(g, f).second;
        if (g.is_zero()) {
            ++M.checked;
            continue;
        }
        record(w.value(g));
    }
    std::sort(M.observed.begin(), M.observed.end());
    return M;
}

}  // namespace keypoly
