#include "keypoly/descent.hpp"

#include <functional>
#include <sstream>

namespace keypoly {

namespace {

Integer content(const std::vector<Integer>& cs) {
    Integer g = 0;
    for (const auto& c : cs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

/// Variables of the rational-function chain of K, innermost first, and the
/// prime field at the bottom.
std::pair<std::vector<std::string>, FieldPtr> chain_vars(const FieldPtr& K) {
    std::vector<std::string> vars;
    FieldPtr F = K;
    while (F->kind() == Field::Kind::RationalFunctions) {
        vars.insert(vars.begin(), F->var());
        F = F->base();
    }
    return {vars, F};
}

bool member_one_var_field(const Elem& a) { return !a.den().coeff(0).is_zero(); }

bool member_one_var_integers(const Elem& a, long p) {
    if (a.is_zero()) return true;
    Integer L = 1;
    for (const Poly* q : {&a.num(), &a.den()})
        for (const auto& c : q->coeffs()) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), c.rational().get_den().get_mpz_t());
    auto scaled = [&](const Poly& q) {
        std::vector<Integer> out;
        for (const auto& c : q.coeffs()) out.push_back(Integer(c.rational() * L));
        return out;
    };
    auto N = scaled(a.num()), D = scaled(a.den());
    Integer g;
    Integer cn = content(N), cd = content(D);
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    Integer d0 = D[0] / g;
    return d0 % p != 0;
}

bool member_two_var_field(const Elem& a) {
    if (a.is_zero()) return true;
    const FieldPtr& inner = a.num().field();
    const FieldPtr& k = inner->base();
    const std::string s = inner->var();
    Poly L = Poly::constant(k->one(), s);
    for (const Poly* q : {&a.num(), &a.den()})
        for (const auto& c : q->coeffs()) {
            const Poly& d = c.den();
            L = divmod(L * d, gcd(L, d)).first;
        }
    auto scaled = [&](const Poly& q) {
        std::vector<Poly> out;
        for (const auto& c : q.coeffs()) {
            Elem m = c * inner->make_frac(L, Poly::constant(k->one(), s));
            out.push_back(m.num());
        }
        return out;
    };
    auto N = scaled(a.num()), D = scaled(a.den());
    Poly g(k, s);
    for (const auto& c : N) g = gcd(g, c);
    for (const auto& c : D) g = gcd(g, c);
    Poly d0 = divmod(D[0], g).first;
    return !d0.coeff(0).is_zero();
}

Elem generator_of(const FieldPtr& K, const std::string& var) {
    for (FieldPtr F = K; F->kind() == Field::Kind::RationalFunctions; F = F->base())
        if (F->var() == var) return K->embed(F->generator());
    throw Error(ErrorCode::UnsupportedRing, "variable " + var + " is not in " + K->name());
}

/// Sum over (l_{lo}..l_r) with Σ l = e and Σ m·l_m = target of
/// multinomial(e; l) · Π u_m^{l_m}, reduced mod φ.
Poly power_sum(const std::vector<Poly>& u, long lo, long e, long target, const Poly& phi) {
    const long r = static_cast<long>(u.size()) - 1;
    const FieldPtr& F = phi.field();
    Poly total(F, phi.var());
    std::vector<long> l(u.size(), 0);
    std::function<void(long, long, long)> rec = [&](long m, long count, long weight) {
        if (m < lo) {
            if (count != 0 || weight != 0) return;
            Integer coef;
            mpz_fac_ui(coef.get_mpz_t(), static_cast<unsigned long>(e));
            Poly prod = Poly::constant(F->one(), phi.var());
            for (long j = lo; j <= r; ++j) {
                Integer f;
                mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(l[j]));
                coef /= f;
                for (long t = 0; t < l[j]; ++t) prod = poly_divmod(prod * u[j], phi).second;
            }
            total = total + prod * F->from_integer(coef);
            return;
        }
        for (long k = 0; k <= count && k * m <= weight; ++k) {
            l[m] = k;
            rec(m - 1, count - k, weight - k * m);
        }
        l[m] = 0;
    };
    rec(r, e, target);
    return total;
}

}  // namespace

LocalRing LocalRing::localized_integers(long p) {
    LocalRing A;
    A.kind = Kind::IntegersLocalized;
    A.coefficients = Coefficients::Z;
    A.p = p;
    return A;
}

LocalRing LocalRing::localized_polynomials(Coefficients c, std::vector<std::string> vars, long p) {
    LocalRing A;
    A.kind = Kind::PolyLocalized;
    A.coefficients = c;
    A.vars = std::move(vars);
    A.p = p;
    return A;
}

std::string LocalRing::describe() const {
    std::ostringstream os;
    if (kind == Kind::IntegersLocalized) {
        os << "Z_(" << p << ")";
        return os.str();
    }
    os << (coefficients == Coefficients::Q ? "Q" : coefficients == Coefficients::Z ? "Z" : "F_" + std::to_string(p));
    os << "[";
    for (size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
    os << "]_(";
    bool first = true;
    if (coefficients == Coefficients::Z) {
        os << p;
        first = false;
    }
    for (const auto& v : vars) {
        os << (first ? "" : ",") << v;
        first = false;
    }
    os << ")";
    return os.str();
}

void check_ring(const LocalRing& A, const FieldPtr& K) {
    auto fail = [&](const std::string& why) {
        throw Error(ErrorCode::UnsupportedRing, A.describe() + " in " + K->name() + ": " + why);
    };
    auto [vars, bottom] = chain_vars(K);
    if (A.kind == LocalRing::Kind::IntegersLocalized) {
        if (K->kind() != Field::Kind::Rationals) fail("quotient field must be Q");
        if (A.p < 2) fail("p must be a prime");
        return;
    }
    if (vars != A.vars) fail("variables do not match the field");
    if (vars.empty()) fail("no variables");
    switch (A.coefficients) {
        case LocalRing::Coefficients::Q:
            if (bottom->kind() != Field::Kind::Rationals) fail("coefficients must be Q");
            if (vars.size() > 2) fail("at most two variables");
            break;
        case LocalRing::Coefficients::Fp:
            if (bottom->kind() != Field::Kind::Prime || bottom->characteristic() != A.p)
                fail("coefficients must be F_" + std::to_string(A.p));
            if (vars.size() > 2) fail("at most two variables");
            break;
        case LocalRing::Coefficients::Z:
            if (bottom->kind() != Field::Kind::Rationals) fail("coefficients must be Z");
            if (A.p < 2) fail("p must be a prime");
            if (vars.size() > 1) fail("at most one variable over Z");
            break;
    }
}

bool membership(const LocalRing& A, const Elem& a) {
    const FieldPtr& K = a.field();
    check_ring(A, K);
    if (A.kind == LocalRing::Kind::IntegersLocalized) return a.rational().get_den() % A.p != 0;
    if (A.coefficients == LocalRing::Coefficients::Z) return member_one_var_integers(a, A.p);
    if (A.vars.size() == 1) return member_one_var_field(a);
    return member_two_var_field(a);
}

bool poly_in(const LocalRing& A, const Poly& g) {
    for (const auto& c : g.coeffs())
        if (!membership(A, c)) return false;
    return true;
}

std::vector<Elem> maximal_ideal_generators(const LocalRing& A, const FieldPtr& K) {
    check_ring(A, K);
    std::vector<Elem> out;
    if (A.coefficients == LocalRing::Coefficients::Z) out.push_back(K->from_int(A.p));
    for (const auto& v : A.vars) out.push_back(generator_of(K, v));
    return out;
}

ValueSemigroup semigroup_of_ring(const LocalRing& A, const ValuedFieldPtr& F) {
    std::vector<Rational> gens;
    for (const auto& g : maximal_ideal_generators(A, F->field())) {
        Value v = F->value(g);
        if (!v.is_finite() || v.finite() <= 0)
            throw Error(ErrorCode::UnsupportedRing,
                        "the valuation does not dominate " + A.describe() + ": v(" + g.str() + ") = " + v.str());
        gens.push_back(v.finite());
    }
    return ValueSemigroup(gens);
}

PowerDigits power_digits(const InductiveValuation& v, const Poly& g, long e) {
    if (e < 1) throw Error(ErrorCode::InvalidInput, "power must be positive");
    PowerDigits out;
    out.e = e;
    out.a = v.phi_expand(v.height(), g).digits;
    if (!out.a.back().is_monic() || out.a.back().degree() != 0)
        throw Error(ErrorCode::MonicRequired, "top digit of " + g.str() + " is not 1");
    const long r = static_cast<long>(out.a.size()) - 1;
    const FieldPtr& F = v.field();
    out.c.assign(1, v.constant(F->one()));
    for (long t = 0; t < e; ++t) {
        std::vector<Poly> next(out.c.size() + r, Poly(F, v.var()));
        for (size_t i = 0; i < out.c.size(); ++i)
            for (long j = 0; j <= r; ++j) next[i + j] = next[i + j] + out.c[i] * out.a[j];
        out.c = std::move(next);
    }
    out.provenance.assign(out.c.size(), {});
    std::vector<long> l(r + 1, 0);
    std::function<void(long, long)> rec = [&](long j, long left) {
        if (j == r) {
            l[r] = left;
            long i = 0;
            for (long m = 0; m <= r; ++m) i += m * l[m];
            out.provenance[i].push_back(l);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            l[j] = k;
            rec(j + 1, left - k);
        }
    };
    rec(0, e);
    return out;
}

std::pair<Poly, DescentTrace> descend_key(const InductiveValuation& v, const Poly& g, const Poly& f,
                                          const LocalRing& A) {
    const FieldPtr& K = v.field();
    check_ring(A, K);
    const int k = v.height();
    if (k < 1 || v.is_pseudo()) throw Error(ErrorCode::InvalidInput, "descent needs a finite tower of height >= 1");
    for (int i = 1; i <= k; ++i)
        if (!poly_in(A, v.phi(i)))
            throw Error(ErrorCode::InvalidInput, "key " + v.phi(i).str() + " is not in " + A.describe() + "[x]");
    if (!poly_in(A, f) || !f.is_monic())
        throw Error(ErrorCode::InvalidInput, f.str() + " is not monic in " + A.describe() + "[x]");
    if (!v.is_key(g)) throw Error(ErrorCode::KeyConditionViolated, g.str() + " is not a key of " + v.str());
    if (f.degree() % g.degree() != 0)
        throw Error(ErrorCode::NotEquivalentPower, "deg " + g.str() + " does not divide deg " + f.str());
    const long e = f.degree() / g.degree();
    if (!membership(A, K->from_rational(Rational(1, e))))
        throw Error(ErrorCode::ResidueCharDividesDegree, "1/" + std::to_string(e) + " is not in " + A.describe());

    const Poly gh = v.homogenize(g);
    if (!v.is_equivalent(f, gh.pow(static_cast<unsigned>(e))))
        throw Error(ErrorCode::NotEquivalentPower,
                    f.str() + " is not equivalent to (" + g.str() + ")^" + std::to_string(e));
    const Poly& phi = v.phi(k);
    const Rational mu = v.mu(k).finite();

    DescentTrace tr;
    PowerDigits pd = power_digits(v, gh, e);
    tr.e = e;
    tr.a = pd.a;
    tr.r = static_cast<long>(tr.a.size()) - 1;
    const long r = tr.r;
    tr.b = v.phi_expand(k, v.homogenize(f)).digits;
    tr.b.resize(r * e + 1, Poly(K, v.var()));
    for (long i = 0; i <= r * e; ++i) {
        tr.alpha.push_back(poly_divmod(pd.c[i], phi).second);
        tr.power_margin.push_back(v.value(tr.alpha[i] - tr.b[i]) - Value(mu * (r * e - i)));
    }

    tr.u.assign(r + 1, Poly(K, v.var()));
    tr.H.assign(r, Poly(K, v.var()));
    tr.u_margin.assign(r, Value());
    tr.u[r] = v.constant(K->one());
    const Elem inv_e = K->from_rational(Rational(1, e));
    for (long j = r - 1; j >= 0; --j) {
        const long i = (e - 1) * r + j;
        tr.H[j] = power_sum(tr.u, j + 1, e, i, phi);
        tr.u[j] = (tr.b[i] - tr.H[j]) * inv_e;
        tr.u_margin[j] = v.value(tr.a[j] - tr.u[j]) - Value(mu * (r - j));
        if (tr.u_margin[j] <= Value(0))
            throw Error(ErrorCode::MembershipFailure,
                        "digit " + std::to_string(j) + " of the descended key is too far from " + tr.a[j].str());
    }
    Poly acc(K, v.var());
    for (long j = r; j >= 0; --j) acc = acc * phi + tr.u[j];
    tr.phi = v.homogenize(acc);
    return {tr.phi, tr};
}

namespace {

GeneratingSequence fill_sequence(const LocalRing& A, InductiveValuation tower, const Poly& f,
                                 std::vector<DescentTrace> traces) {
    GeneratingSequence gs{{}, {}, {}, {}, std::move(tower), std::move(traces), true};
    const int n = gs.tower.height();
    for (int i = 1; i < n; ++i) {
        gs.phis.push_back(gs.tower.phi(i));
        gs.values.push_back(gs.tower.mu(i));
        gs.n.push_back(f.degree() / gs.tower.phi(i).degree());
        gs.m.push_back(gs.tower.phi(i + 1).degree() / gs.tower.phi(i).degree());
        gs.all_in_A = gs.all_in_A && poly_in(A, gs.tower.phi(i));
    }
    return gs;
}

const ApproximantChain& unique_chain(const Resolution& r) {
    if (!uniqueness_certificate(r).verdict)
        throw HypothesisViolation("nonUnique", "the extension of v0 to K[x]/(" + r.f.str() + ") is not certified unique");
    return r.branches.front();
}

}  // namespace

GeneratingSequence generating_sequence(const LocalRing& A, const ValuedFieldPtr& F, const Poly& f, int stage_bound) {
    check_ring(A, F->field());
    if (!f.is_monic() || !poly_in(A, f))
        throw HypothesisViolation("notInA", f.str() + " is not monic in " + A.describe() + "[x]");
    const long p = F->residue_characteristic();
    if (p > 0 && f.degree() % p == 0)
        throw HypothesisViolation("pDividesDeg",
                                  "residue characteristic " + std::to_string(p) + " divides deg " + f.str());
    Resolution res = resolve(F, f, stage_bound);
    const ApproximantChain& chain = unique_chain(res);
    const InductiveValuation& g = chain.tower;
    const int n = g.height();
    InductiveValuation T(F, f.var());
    std::vector<DescentTrace> traces;
    if (n >= 2) {
        if (!poly_in(A, g.phi(1)))
            throw Error(ErrorCode::MembershipFailure, "first key " + g.phi(1).str() + " is not in A[x]");
        T = T.augment(g.phi(1), g.mu(1));
    }
    for (int i = 2; i < n; ++i) {
        auto [phi, tr] = descend_key(T, g.phi(i), f, A);
        T = T.augment(phi, g.mu(i));
        traces.push_back(std::move(tr));
    }
    T = T.augment_unchecked(f, Value::infinity());
    return fill_sequence(A, std::move(T), f, std::move(traces));
}

GeneratingSequence sequence_from_chain(const LocalRing& A, const Resolution& r) {
    const ApproximantChain& chain = unique_chain(r);
    check_ring(A, chain.tower.field());
    for (int i = 1; i <= chain.tower.height(); ++i)
        if (!poly_in(A, chain.tower.phi(i)))
            throw HypothesisViolation("keysNotInA", "key " + chain.tower.phi(i).str() + " is not in A[x]");
    return fill_sequence(A, chain.tower, r.f, {});
}

}  // namespace keypoly
