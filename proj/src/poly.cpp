#include "keypoly/poly.hpp"

#include "keypoly/error.hpp"

namespace keypoly {

Poly::Poly(FieldPtr field, std::string var) : field_(std::move(field)), var_(std::move(var)) {}

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs, std::string var)
    : field_(std::move(field)), c_(std::move(coeffs)), var_(std::move(var)) {
    for (auto& c : c_)
        if (c.field().get() != field_.get()) c = field_->embed(c);
    normalize();
}

Poly Poly::constant(const Elem& c, std::string var) { return Poly(c.field(), {c}, std::move(var)); }

Poly Poly::monomial(const Elem& c, int degree, std::string var) {
    if (degree < 0) throw Error(ErrorCode::InvalidInput, "negative monomial degree");
    std::vector<Elem> cs(degree + 1, c.field()->zero());
    cs[degree] = c;
    return Poly(c.field(), std::move(cs), std::move(var));
}

Poly Poly::variable(FieldPtr field, std::string var) {
    auto one = field->one();
    return monomial(one, 1, std::move(var));
}

Poly Poly::with_var(std::string var) const {
    Poly r = *this;
    r.var_ = std::move(var);
    return r;
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Elem Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return field_->zero();
    return c_[i];
}

Elem Poly::lc() const {
    if (c_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return Poly(field_, std::move(r), var_);
}

Poly Poly::operator-() const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(-c);
    return Poly(field_, std::move(r), var_);
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_, var_);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r), var_);
}

Poly Poly::operator*(const Elem& c) const {
    std::vector<Elem> r;
    r.reserve(c_.size());
    for (const auto& a : c_) r.push_back(a * c);
    return Poly(field_, std::move(r), var_);
}

Poly Poly::pow(unsigned n) const {
    Poly result = constant(field_->one(), var_), base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

Elem Poly::eval(const Elem& a) const {
    Elem r = field_->zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + *it;
    return r;
}

Poly Poly::compose(const Poly& inner) const {
    Poly r(inner.field(), inner.var());
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*it, inner.var());
    return r;
}

Poly Poly::derivative() const {
    std::vector<Elem> r;
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_->from_int(static_cast<long>(i)));
    return Poly(field_, std::move(r), var_);
}

Poly Poly::monic() const { return *this * lc().inverse(); }

Poly Poly::shift(int k) const {
    if (is_zero()) return *this;
    if (k < 0) throw Error(ErrorCode::InvalidInput, "negative shift");
    std::vector<Elem> r(k, field_->zero());
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(r), var_);
}

bool Poly::operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

namespace {

bool has_inner_sign(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        else if (c == ')') --depth;
        else if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
    }
    return false;
}

}  // namespace

std::string Poly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        std::string s = c_[k].str();
        bool compound = has_inner_sign(s);
        bool negative = !compound && !s.empty() && s[0] == '-';
        std::string mag = negative ? s.substr(1) : s;
        if (compound) mag = "(" + mag + ")";
        if (first) out += negative ? "-" : "";
        else out += negative ? "-" : "+";
        first = false;
        if (k == 0) {
            out += mag;
            continue;
        }
        if (mag != "1") out += mag + "*";
        out += var_;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const FieldPtr& F = a.field();
    if (a.degree() < b.degree()) return {Poly(F, a.var()), a};
    std::vector<Elem> r = a.coeffs();
    std::vector<Elem> q(a.degree() - b.degree() + 1, F->zero());
    Elem inv = b.lc().inverse();
    bool monic = b.lc().is_one();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (r[i].is_zero()) continue;
        Elem c = monic ? r[i] : r[i] * inv;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - c * b.coeffs()[j];
    }
    r.resize(db);
    return {Poly(F, std::move(q), a.var()), Poly(F, std::move(r), a.var())};
}

std::pair<Poly, Poly> poly_divmod(const Poly& g, const Poly& phi) {
    if (!phi.is_monic()) throw Error(ErrorCode::MonicRequired, "divisor " + phi.str() + " is not monic");
    return divmod(g, phi);
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    const FieldPtr& F = a.field();
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(F->one(), a.var()), s1(F, a.var());
    Poly t0(F, a.var()), t1 = Poly::constant(F->one(), a.var());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        Poly s2 = s0 - q * s1;
        s0 = std::exchange(s1, s2);
        Poly t2 = t0 - q * t1;
        t0 = std::exchange(t1, t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Elem inv = r0.lc().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

Elem resultant(const Poly& f, const Poly& g) {
    const FieldPtr& F = f.field();
    if (f.is_zero() || g.is_zero()) return F->zero();
    const int m = f.degree(), n = g.degree();
    if (n == 0) return g.lc().pow(m);
    Poly r = divmod(f, g).second;
    if (r.is_zero()) return F->zero();
    Elem sign = ((m * n) % 2 == 1) ? -F->one() : F->one();
    return sign * g.lc().pow(m - r.degree()) * resultant(g, r);
}

}  // namespace keypoly
