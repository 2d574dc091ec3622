#include "keypoly/inductive_valuation.hpp"

#include "keypoly/error.hpp"
#include "keypoly/parser.hpp"

#include <algorithm>
#include <map>

namespace keypoly {

namespace {

std::vector<Poly> digits_of(const Poly& g, const Poly& phi) {
    std::vector<Poly> out;
    Poly rest = g;
    while (!rest.is_zero()) {
        auto [q, r] = poly_divmod(rest, phi);
        out.push_back(std::move(r));
        rest = std::move(q);
    }
    return out;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw Error(ErrorCode::InvalidInput, "expected a machine integer, got " + to_string(q));
    return q.get_num().get_si();
}

long floor_mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

InductiveValuation::InductiveValuation(ValuedFieldPtr base, std::string var)
    : base_(std::move(base)), var_(std::move(var)) {}

const InductiveValuation::Stage& InductiveValuation::stage(int i) const {
    if (i < 1 || i > height()) throw Error(ErrorCode::InvalidInput, "no stage " + std::to_string(i));
    return *stages_[i - 1];
}

bool InductiveValuation::is_pseudo() const { return !stages_.empty() && stages_.back()->mu.is_infinite(); }

int InductiveValuation::top_finite() const { return is_pseudo() ? height() - 1 : height(); }

InductiveValuation InductiveValuation::prefix(int k) const {
    if (k < 0 || k > height()) throw Error(ErrorCode::InvalidInput, "bad prefix length");
    InductiveValuation v(base_, var_);
    v.stages_.assign(stages_.begin(), stages_.begin() + k);
    return v;
}

Poly InductiveValuation::poly(const std::string& text) const { return parse_poly(text, field(), var_); }

InductiveValuation::Stage InductiveValuation::make_stage(const Poly& phi, const Value& mu) const {
    if (is_pseudo()) throw Error(ErrorCode::KeyConditionViolated, "cannot augment a pseudo-valuation");
    const int k = height();
    Stage st;
    st.phi = phi.with_var(var_);
    st.mu = mu;
    const Rational prev_unit = k == 0 ? Rational(1, base_->value_denominator()) : stage(k).unit;
    if (mu.is_finite()) {
        Rational q = mu.finite() / prev_unit;
        st.h = q.get_num().get_si();
        st.e = q.get_den().get_si();
        if (st.e == 1) {
            st.a = 1;
            st.b = 0;
        } else {
            Integer g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), Integer(st.e).get_mpz_t(),
                       Integer(st.h).get_mpz_t());
            st.a = s.get_si();
            st.b = t.get_si();
        }
        st.unit = prev_unit / st.e;
    } else {
        st.unit = prev_unit;
    }
    st.yvar = var_ + "_Y" + std::to_string(k + 1);
    if (k == 0) {
        st.coeffs = base_->residue_field();
        st.uniformizer = {1};
    } else {
        const Stage& top = stage(k);
        Residual R = residual(phi);
        if (R.poly.degree() < 1)
            throw Error(ErrorCode::KeyConditionViolated, "residual polynomial of " + phi.str() + " is constant");
        st.psi = R.poly.monic();
        if (st.psi.degree() == 1) {
            st.coeffs = top.coeffs;
            st.z = -st.psi.coeff(0);
        } else {
            st.coeffs = Field::algebraic(top.coeffs, st.psi, top.yvar);
            st.z = st.coeffs->generator();
        }
        st.uniformizer = top.uniformizer;
    }
    st.uniformizer.push_back(0);
    if (mu.is_finite()) {
        for (auto& x : st.uniformizer) x *= st.a;
        st.uniformizer.back() += st.b;
    }
    return st;
}

InductiveValuation InductiveValuation::augment_unchecked(const Poly& phi, const Value& mu) const {
    if (height() == 0 && (phi.degree() != 1 || !phi.is_monic()))
        throw Error(ErrorCode::KeyConditionViolated, "first key must be monic linear");
    InductiveValuation v = *this;
    v.stages_.push_back(std::make_shared<const Stage>(make_stage(phi, mu)));
    return v;
}

InductiveValuation InductiveValuation::augment(const Poly& phi, const Value& mu) const {
    if (height() > 0) {
        if (is_pseudo()) throw Error(ErrorCode::KeyConditionViolated, "cannot augment a pseudo-valuation");
        KeyCheck kc = key_check(phi);
        if (!kc) throw Error(ErrorCode::KeyConditionViolated, kc.reason);
        Value cur = value(phi);
        if (mu <= cur)
            throw Error(ErrorCode::KeyValueTooSmall, "value " + mu.str() + " does not exceed " + cur.str());
        const Poly& prev = stage(height()).phi;
        if (phi.degree() < prev.degree())
            throw Error(ErrorCode::KeyConditionViolated, "degree below the previous key");
        if (is_equivalent(phi, prev))
            throw Error(ErrorCode::KeyConditionViolated, "equivalent to the previous key");
    }
    return augment_unchecked(phi, mu);
}

Value InductiveValuation::value_at(int k, const Poly& g) const {
    if (g.is_zero()) return Value::infinity();
    if (k == 0) {
        if (g.degree() > 0) throw Error(ErrorCode::InvalidInput, "level-0 value of a non-constant");
        return base_->value(g.coeff(0));
    }
    const Stage& st = stage(k);
    if (g.degree() < st.phi.degree()) return value_at(k - 1, g);
    Value best = Value::infinity();
    auto ds = digits_of(g, st.phi);
    for (size_t j = 0; j < ds.size(); ++j) {
        if (ds[j].is_zero()) continue;
        Value t = value_at(k - 1, ds[j]) + st.mu * static_cast<long>(j);
        if (t < best) best = t;
    }
    return best;
}

PhiExpansion InductiveValuation::phi_expand(int k, const Poly& g) const {
    const Stage& st = stage(k);
    PhiExpansion ex;
    ex.pivot = st.phi;
    ex.digits = digits_of(g, st.phi);
    for (size_t j = 0; j < ex.digits.size(); ++j) {
        Value dv = value_at(k - 1, ex.digits[j]);
        ex.digit_values.push_back(dv);
        ex.term_values.push_back(ex.digits[j].is_zero() ? Value::infinity() : dv + st.mu * static_cast<long>(j));
    }
    return ex;
}

std::vector<MultiTerm> InductiveValuation::multi_expand(const Poly& g) const {
    std::vector<MultiTerm> out;
    const int n = height();
    std::vector<long> exps(n, 0);
    auto rec = [&](auto&& self, int k, const Poly& p) -> void {
        if (p.is_zero()) return;
        if (k == 0) {
            Value v = base_->value(p.coeff(0));
            for (int i = 0; i < n; ++i) v = v + stages_[i]->mu * exps[i];
            out.push_back({p.coeff(0), exps, v});
            return;
        }
        auto ds = digits_of(p, stage(k).phi);
        for (size_t j = 0; j < ds.size(); ++j) {
            exps[k - 1] = static_cast<long>(j);
            self(self, k - 1, ds[j]);
        }
        exps[k - 1] = 0;
    };
    rec(rec, n, g);
    return out;
}

Value InductiveValuation::value_by_multi_expansion(const Poly& g) const {
    Value best = Value::infinity();
    for (const auto& t : multi_expand(g)) best = min(best, t.value);
    return best;
}

Poly InductiveValuation::homogenize(const Poly& g) const {
    auto terms = multi_expand(g);
    Value best = Value::infinity();
    for (const auto& t : terms) best = min(best, t.value);
    std::vector<std::vector<Poly>> powers(height());
    auto power = [&](int i, long m) -> const Poly& {
        auto& ps = powers[i];
        if (ps.empty()) ps.push_back(constant(field()->one()));
        while (static_cast<long>(ps.size()) <= m) ps.push_back(ps.back() * stages_[i]->phi);
        return ps[m];
    };
    Poly out(field(), var_);
    for (const auto& t : terms) {
        if (!(t.value == best)) continue;
        Poly term = constant(t.coeff);
        for (int i = 0; i < height(); ++i)
            if (t.exponents[i] > 0) term = term * power(i, t.exponents[i]);
        out = out + term;
    }
    return out;
}

bool InductiveValuation::is_homogeneous(const Poly& g) const {
    auto terms = multi_expand(g);
    for (const auto& t : terms)
        if (!(t.value == terms.front().value)) return false;
    return true;
}

bool InductiveValuation::is_equivalent(const Poly& g, const Poly& h) const {
    Value vg = value(g), vh = value(h);
    if (vg.is_infinite() && vh.is_infinite()) return true;
    return value(g - h) > min(vg, vh);
}

Elem InductiveValuation::base_class(const Elem& a, const Rational& gamma) const {
    const FieldPtr& k0 = base_->residue_field();
    if (a.is_zero()) return k0->zero();
    Value v = base_->value(a);
    if (v > Value(gamma)) return k0->zero();
    if (v < Value(gamma)) throw Error(ErrorCode::InvalidInput, "element value below the class degree");
    long m = to_long(gamma * base_->value_denominator());
    return base_->residue(a / base_->uniformizer().pow(m));
}

Elem InductiveValuation::evaluate_class(int i, const Laurent& c) const {
    const Stage& st = stage(i);
    const FieldPtr& C = st.coeffs;
    if (c.is_zero()) return C->zero();
    Elem zp = st.z.pow(c.low);
    Elem acc = C->zero();
    for (const auto& coef : c.poly.coeffs()) {
        if (!coef.is_zero()) acc = acc + C->embed(coef) * zp;
        zp = zp * st.z;
    }
    return acc;
}

Laurent InductiveValuation::graded_class(int i, const Poly& g, const Rational& gamma) const {
    const Stage& st = stage(i);
    if (st.mu.is_infinite()) throw Error(ErrorCode::InvalidInput, "graded class at an infinite stage");
    const long n = to_long(gamma / st.unit);
    const long nb = n * st.b;
    const Rational prev_unit = i == 1 ? Rational(1, base_->value_denominator()) : stage(i - 1).unit;
    std::map<long, Elem> acc;
    auto ds = digits_of(g, st.phi);
    for (size_t j = 0; j < ds.size(); ++j) {
        if (ds[j].is_zero()) continue;
        Rational delta = gamma - st.mu.finite() * static_cast<long>(j);
        if (!is_integer(delta / prev_unit)) continue;
        Elem c = i == 1 ? base_class(ds[j].coeff(0), delta) : evaluate_class(i, graded_class(i - 1, ds[j], delta));
        if (c.is_zero()) continue;
        long num = static_cast<long>(j) - nb;
        if (num % st.e != 0) throw Error(ErrorCode::InvalidInput, "graded exponent mismatch");
        long k = num / st.e;
        auto it = acc.find(k);
        if (it == acc.end()) acc.emplace(k, c);
        else it->second = it->second + c;
    }
    Laurent L{0, Poly(st.coeffs, st.yvar)};
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    if (acc.empty()) return L;
    L.low = acc.begin()->first;
    std::vector<Elem> cs(acc.rbegin()->first - L.low + 1, st.coeffs->zero());
    for (const auto& [k, c] : acc) cs[k - L.low] = c;
    L.poly = Poly(st.coeffs, cs, st.yvar);
    return L;
}

Residual InductiveValuation::residual(const Poly& g) const {
    if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "residual polynomial of zero");
    if (height() == 0 || is_pseudo())
        throw Error(ErrorCode::InvalidInput, "residual polynomials need a finite top stage");
    const int k = height();
    PhiExpansion ex = phi_expand(k, g);
    Residual R;
    R.value = *std::min_element(ex.term_values.begin(), ex.term_values.end());
    R.m0 = -1;
    for (size_t j = 0; j < ex.term_values.size(); ++j) {
        if (ex.digits[j].is_zero() || !(ex.term_values[j] == R.value)) continue;
        if (R.m0 < 0) R.m0 = static_cast<long>(j);
        R.D = static_cast<long>(j);
    }
    R.poly = graded_class(k, g, R.value.finite()).poly;
    return R;
}

bool InductiveValuation::equiv_divides(const Poly& h, const Poly& g) const {
    if (g.is_zero()) return true;
    if (h.is_zero()) return false;
    Residual rh = residual(h), rg = residual(g);
    return rh.m0 <= rg.m0 && divmod(rg.poly, rh.poly).second.is_zero();
}

bool InductiveValuation::is_minimal(const Poly& g) const {
    if (g.is_zero()) return false;
    PhiExpansion ex = phi_expand(height(), g);
    const size_t m = ex.digits.size() - 1;
    return ex.digits[m].degree() == 0 && ex.term_values[m] == value(g);
}

KeyCheck InductiveValuation::key_check(const Poly& phi) const {
    if (!phi.is_monic()) return {false, "not monic"};
    if (phi.degree() < 1) return {false, "degree zero"};
    if (height() == 0) {
        if (phi.degree() != 1) return {false, "first key must be linear"};
        return {};
    }
    if (is_pseudo()) return {false, "tower is a pseudo-valuation"};
    if (!is_minimal(phi)) return {false, "not minimal"};
    Residual R = residual(phi);
    if (R.m0 == 1 && R.poly.degree() == 0) return {};
    if (R.m0 == 0 && R.poly.degree() > 0 && is_irreducible(R.poly)) return {};
    return {false, "not equivalence-irreducible"};
}

long InductiveValuation::effective_degree(const Poly& g) const {
    PhiExpansion ex = phi_expand(height(), g);
    Value best = *std::min_element(ex.term_values.begin(), ex.term_values.end());
    long D = 0;
    for (size_t j = 0; j < ex.term_values.size(); ++j)
        if (!ex.digits[j].is_zero() && ex.term_values[j] == best) D = static_cast<long>(j);
    return D;
}

long InductiveValuation::projection(const Poly& g) const {
    PhiExpansion ex = phi_expand(height(), g);
    Value best = *std::min_element(ex.term_values.begin(), ex.term_values.end());
    long lo = -1, hi = 0;
    for (size_t j = 0; j < ex.term_values.size(); ++j) {
        if (ex.digits[j].is_zero() || !(ex.term_values[j] == best)) continue;
        if (lo < 0) lo = static_cast<long>(j);
        hi = static_cast<long>(j);
    }
    return hi - lo;
}

Poly InductiveValuation::lift_to_level(int l, const Elem& c, const Rational& delta) const {
    if (c.is_zero()) return Poly(field(), var_);
    if (l == 0) {
        long m = to_long(delta * base_->value_denominator());
        return constant(base_->lift(c) * base_->uniformizer().pow(m));
    }
    const Stage& st = stage(l);
    const Stage& next = stage(l + 1);
    const long n = to_long(delta / st.unit);
    const long nb = n * st.b;
    const long r = floor_mod(nb, st.e);
    const long s = (r - nb) / st.e;
    Elem target = next.coeffs->embed(c) * next.z.pow(-s);
    std::vector<Elem> cs;
    if (next.psi.degree() > 1) cs = target.alg().coeffs();
    else cs = {target};
    Poly A(field(), var_);
    Poly phi_e = st.phi.pow(static_cast<unsigned>(st.e));
    Poly phi_j = st.phi.pow(static_cast<unsigned>(r));
    for (size_t t = 0; t < cs.size(); ++t) {
        long j = r + static_cast<long>(t) * st.e;
        A = A + lift_to_level(l - 1, cs[t], delta - st.mu.finite() * j) * phi_j;
        phi_j = phi_j * phi_e;
    }
    return A;
}

Poly InductiveValuation::lift_class(const Laurent& L, const Rational& delta) const {
    const int k = top_finite();
    const Stage& st = stage(k);
    const long n = to_long(delta / st.unit);
    Poly A(field(), var_);
    for (int t = 0; t <= L.poly.degree(); ++t) {
        const Elem& c = L.poly.coeffs()[t];
        if (c.is_zero()) continue;
        long j = st.e * (L.low + t) + n * st.b;
        if (j < 0) throw Error(ErrorCode::InvalidInput, "class has no polynomial lift");
        Poly Aj = lift_to_level(k - 1, c, delta - st.mu.finite() * j);
        A = A + Aj * st.phi.pow(static_cast<unsigned>(j));
    }
    return A;
}

Poly InductiveValuation::lift_residual_factor(const Poly& rho) const {
    if (height() == 0 || is_pseudo()) throw Error(ErrorCode::InvalidInput, "lifting needs a finite top stage");
    if (rho.degree() < 1 || rho.coeff(0).is_zero())
        throw Error(ErrorCode::InvalidInput, "residual factor must have positive degree and nonzero constant term");
    const Stage& st = stage(height());
    Poly m = rho.monic().with_var(st.yvar);
    const long d = m.degree();
    Rational delta = st.mu.finite() * (d * st.e);
    return lift_class(Laurent{-d * st.h * st.b, m}, delta);
}

EquivalenceFactorization InductiveValuation::equivalence_factor(const Poly& f) const {
    Residual R = residual(f);
    const int k = height();
    const Stage& st = stage(k);
    EquivalenceFactorization out;
    out.m0 = R.m0;
    Poly h = st.phi.pow(static_cast<unsigned>(R.m0));
    auto rs = factor(R.poly);
    for (auto& [rho, mult] : rs) {
        Poly psi = lift_residual_factor(rho);
        if (rs.size() == 1 && mult == 1 && R.m0 == 0 && f.is_monic() && f.degree() == psi.degree() &&
            is_equivalent(f, psi))
            psi = f;
        out.factors.emplace_back(psi, mult);
        h = h * psi.pow(static_cast<unsigned>(mult));
    }
    Value vh = value(h);
    Rational delta = R.value.finite() - vh.finite();
    Laurent Lf = graded_class(k, f, R.value.finite());
    Laurent Lh = graded_class(k, h, vh.finite());
    Elem c = Lf.poly.lc() / Lh.poly.lc();
    out.unit = lift_to_level(k - 1, c, delta);
    return out;
}

long InductiveValuation::value_denominator() const {
    if (height() == 0) return base_->value_denominator();
    return stage(height()).unit.get_den().get_si();
}

FieldPtr InductiveValuation::stage_residue_field() const {
    if (height() == 0) return base_->residue_field();
    return stage(height()).coeffs;
}

std::pair<Poly, Poly> InductiveValuation::uniformizer_fraction() const {
    const FieldPtr& K = field();
    Poly num = constant(K->one()), den = constant(K->one());
    const std::vector<long> exps = height() == 0 ? std::vector<long>{1} : stage(height()).uniformizer;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        Poly base = i == 0 ? constant(base_->uniformizer()) : stage(static_cast<int>(i)).phi;
        Poly p = base.pow(static_cast<unsigned>(std::labs(exps[i])));
        if (exps[i] > 0) num = num * p;
        else den = den * p;
    }
    return {num, den};
}

std::string InductiveValuation::str() const {
    std::string s = "[v0";
    for (const auto& st : stages_) s += "; v(" + st->phi.str() + ")=" + st->mu.str();
    return s + "]";
}

}  // namespace keypoly
