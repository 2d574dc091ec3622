#include "keypoly/factor.hpp"

#include "keypoly/error.hpp"

#include <algorithm>
#include <random>

namespace keypoly {

namespace {

Poly one_poly(const Poly& like) { return Poly::constant(like.field()->one(), like.var()); }

Poly exact_div(const Poly& a, const Poly& b) { return divmod(a, b).first; }

void sort_factors(Factorization& fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.str() < b.first.str();
    });
}

Elem random_elem(const FieldPtr& F, std::mt19937_64& rng) {
    if (F->kind() == Field::Kind::Prime)
        return F->from_int(static_cast<long>(rng() % static_cast<unsigned long>(F->characteristic())));
    std::vector<Elem> cs;
    for (int i = 0; i < F->extension_degree(); ++i) cs.push_back(random_elem(F->base(), rng));
    return F->make_alg(Poly(F->base(), cs, F->var()));
}

long prime_power_exponent(const FieldPtr& F) {
    long k = 1;
    for (const Field* f = F.get(); f->kind() == Field::Kind::Algebraic; f = f->base().get())
        k *= f->extension_degree();
    return k;
}

Poly pth_root(const Poly& c) {
    const FieldPtr& F = c.field();
    const long p = F->characteristic();
    const long q = F->order();
    std::vector<Elem> out;
    for (int i = 0; i <= c.degree(); i += p) out.push_back(c.coeff(i).pow(q / p));
    return Poly(F, out, c.var());
}

void squarefree_into(const Poly& f, int scale, Factorization& out) {
    const long p = f.field()->characteristic();
    Poly c = gcd(f, f.derivative());
    Poly w = exact_div(f, c);
    int i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = exact_div(w, y);
        if (fac.degree() > 0) out.emplace_back(fac.monic(), i * scale);
        w = y;
        c = exact_div(c, y);
        ++i;
    }
    if (c.degree() > 0) {
        if (p == 0) throw Error(ErrorCode::InvalidInput, "squarefree decomposition did not terminate");
        squarefree_into(pth_root(c), scale * static_cast<int>(p), out);
    }
}

Factorization distinct_degree(Poly f) {
    Factorization res;
    const Poly x = Poly::variable(f.field(), f.var());
    const Integer q = f.field()->order();
    Poly h = divmod(x, f).second;
    int i = 1;
    while (f.degree() >= 2 * i) {
        h = powmod(h, q, f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            res.emplace_back(g, i);
            f = exact_div(f, g);
            h = divmod(h, f).second;
        }
        ++i;
    }
    if (f.degree() > 0) res.emplace_back(f.monic(), f.degree());
    return res;
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == d) {
        out.push_back(g.monic());
        return;
    }
    const FieldPtr& F = g.field();
    const long q = F->order();
    while (true) {
        std::vector<Elem> cs;
        for (int i = 0; i < g.degree(); ++i) cs.push_back(random_elem(F, rng));
        Poly a(F, cs, g.var());
        if (a.degree() < 1) continue;
        Poly b(F, g.var());
        if (q % 2 == 1) {
            Integer e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            b = powmod(a, e, g) - one_poly(g);
        } else {
            const long steps = prime_power_exponent(F) * d;
            Poly s = a;
            b = a;
            for (long j = 1; j < steps; ++j) {
                s = divmod(s * s, g).second;
                b = b + s;
            }
        }
        Poly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(exact_div(g, h), d, rng, out);
            return;
        }
    }
}

std::vector<Integer> divisors(Integer n) {
    if (n < 0) n = -n;
    if (n > Integer("1000000000000"))
        throw Error(ErrorCode::UnsupportedResidueFactorization, "coefficient too large for the rational root test");
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

Factorization factor_over_rationals(const Poly& g) {
    Factorization out;
    for (auto& [part, mult] : squarefree_decomposition(g)) {
        Poly rest = part;
        for (const auto& r : rational_roots(part)) {
            Poly lin = Poly::variable(g.field(), g.var()) - Poly::constant(g.field()->from_rational(r), g.var());
            out.emplace_back(lin, mult);
            rest = exact_div(rest, lin);
        }
        if (rest.degree() <= 0) continue;
        if (rest.degree() > 3)
            throw Error(ErrorCode::UnsupportedResidueFactorization,
                        "cannot decide irreducibility of " + rest.str() + " over Q");
        out.emplace_back(rest.monic(), mult);
    }
    return out;
}

}  // namespace

Poly powmod(const Poly& a, const Integer& n, const Poly& m) {
    Poly result = divmod(one_poly(a), m).second;
    Poly base = divmod(a, m).second;
    const size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = divmod(result * result, m).second;
        if (mpz_tstbit(n.get_mpz_t(), i)) result = divmod(result * base, m).second;
    }
    return result;
}

Factorization squarefree_decomposition(const Poly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree decomposition of zero");
    Factorization out;
    if (g.degree() == 0) return out;
    squarefree_into(g.monic(), 1, out);
    return out;
}

Factorization factor_over_prime_field(const Poly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero");
    if (!g.field()->is_finite()) throw Error(ErrorCode::FieldMismatch, "coefficient field is not finite");
    std::mt19937_64 rng(0x6b657970);
    Factorization out;
    for (auto& [part, mult] : squarefree_decomposition(g)) {
        for (auto& [block, d] : distinct_degree(part)) {
            std::vector<Poly> irr;
            equal_degree(block, d, rng, irr);
            for (auto& h : irr) out.emplace_back(h, mult);
        }
    }
    sort_factors(out);
    return out;
}

Factorization factor(const Poly& g) {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factorization of zero");
    if (g.degree() == 0) return {};
    const FieldPtr& F = g.field();
    if (F->is_finite()) return factor_over_prime_field(g);
    if (g.degree() == 1) return {{g.monic(), 1}};
    Factorization out;
    switch (F->kind()) {
        case Field::Kind::Rationals: out = factor_over_rationals(g); break;
        case Field::Kind::RationalFunctions: {
            std::vector<Elem> cs;
            for (const auto& c : g.coeffs()) {
                if (c.num().degree() > 0 || c.den().degree() > 0)
                    throw Error(ErrorCode::UnsupportedResidueFactorization,
                                "coefficients of " + g.str() + " are not constant in " + F->var());
                cs.push_back(c.num().coeff(0) / c.den().coeff(0));
            }
            for (auto& [h, m] : factor(Poly(F->base(), cs, g.var())))
                out.emplace_back(h.map(F, [&](const Elem& e) { return F->embed(e); }), m);
            break;
        }
        default:
            throw Error(ErrorCode::UnsupportedResidueFactorization, "factorization over " + F->name());
    }
    sort_factors(out);
    return out;
}

bool is_irreducible(const Poly& g) {
    if (g.degree() < 1) return false;
    auto fs = factor(g);
    return fs.size() == 1 && fs[0].second == 1;
}

std::vector<Rational> rational_roots(const Poly& g) {
    if (g.field()->kind() != Field::Kind::Rationals)
        throw Error(ErrorCode::FieldMismatch, "rational roots need a polynomial over Q");
    std::vector<Rational> roots;
    if (g.degree() < 1) return roots;
    Integer L = 1;
    for (const auto& c : g.coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.rational().get_den().get_mpz_t());
    std::vector<Integer> ic;
    for (const auto& c : g.coeffs()) ic.push_back(Integer(c.rational() * L));
    size_t low = 0;
    while (ic[low] == 0) ++low;
    if (low > 0) roots.push_back(Rational(0));
    if (low + 1 == ic.size()) return roots;
    auto eval = [&](const Rational& r) {
        Rational acc = 0;
        for (size_t i = ic.size(); i-- > low;) acc = acc * r + ic[i];
        return acc == 0;
    };
    for (const auto& a : divisors(ic[low]))
        for (const auto& b : divisors(ic.back()))
            for (int sign : {1, -1}) {
                Rational r(a * sign, b);
                r.canonicalize();
                if (eval(r) && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace keypoly
