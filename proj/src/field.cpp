#include "keypoly/field.hpp"

#include "keypoly/error.hpp"
#include "keypoly/poly.hpp"

namespace keypoly {

struct FracRep {
    Poly num, den;
};

struct AlgRep {
    Poly rep;
};

namespace {

long mod_inverse(long a, long p) {
    long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw Error(ErrorCode::DivisionByZero, "no inverse modulo " + std::to_string(p));
    return ((t % p) + p) % p;
}

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------- Field

FieldPtr Field::rationals() {
    static const FieldPtr q = [] {
        auto f = std::shared_ptr<Field>(new Field());
        f->kind_ = Kind::Rationals;
        return FieldPtr(f);
    }();
    return q;
}

FieldPtr Field::prime(long p) {
    if (!is_prime(p) || p > 46337)
        throw Error(ErrorCode::InvalidInput, "unsupported prime field characteristic " + std::to_string(p));
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Prime;
    f->characteristic_ = p;
    return f;
}

FieldPtr Field::rational_functions(FieldPtr base, std::string var) {
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::RationalFunctions;
    f->characteristic_ = base->characteristic();
    f->base_ = std::move(base);
    f->var_ = std::move(var);
    return f;
}

FieldPtr Field::algebraic(FieldPtr base, const Poly& modulus, std::string var) {
    if (modulus.degree() < 1 || !modulus.is_monic())
        throw Error(ErrorCode::InvalidInput, "algebraic extension needs a monic modulus of positive degree");
    auto f = std::shared_ptr<Field>(new Field());
    f->kind_ = Kind::Algebraic;
    f->characteristic_ = base->characteristic();
    f->base_ = base;
    f->var_ = std::move(var);
    f->modulus_ = std::make_shared<const Poly>(modulus.with_var(f->var_));
    return f;
}

const Poly& Field::modulus() const {
    if (!modulus_) throw Error(ErrorCode::InvalidInput, "field has no modulus");
    return *modulus_;
}

int Field::extension_degree() const { return kind_ == Kind::Algebraic ? modulus_->degree() : 1; }

bool Field::is_finite() const {
    if (kind_ == Kind::Prime) return true;
    if (kind_ == Kind::Algebraic) return base_->is_finite();
    return false;
}

long Field::order() const {
    if (kind_ == Kind::Prime) return characteristic_;
    if (kind_ == Kind::Algebraic && base_->is_finite()) {
        long q = 1;
        for (int i = 0; i < modulus_->degree(); ++i) q *= base_->order();
        return q;
    }
    throw Error(ErrorCode::InvalidInput, "field " + name() + " is infinite");
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out;
    if (kind_ == Kind::Prime) {
        for (long i = 0; i < characteristic_; ++i) out.push_back(Elem(self(), i));
        return out;
    }
    if (kind_ != Kind::Algebraic || !base_->is_finite())
        throw Error(ErrorCode::InvalidInput, "cannot enumerate " + name());
    const auto base_elems = base_->elements();
    const int d = modulus_->degree();
    std::vector<size_t> idx(d, 0);
    while (true) {
        std::vector<Elem> cs;
        for (int i = 0; i < d; ++i) cs.push_back(base_elems[idx[i]]);
        out.push_back(make_alg(Poly(base_, cs, var_)));
        int i = 0;
        while (i < d && ++idx[i] == base_elems.size()) idx[i++] = 0;
        if (i == d) break;
    }
    return out;
}

Elem Field::zero() const { return from_int(0); }
Elem Field::one() const { return from_int(1); }
Elem Field::from_int(long n) const { return from_rational(Rational(n)); }
Elem Field::from_integer(const Integer& n) const { return from_rational(Rational(n)); }

Elem Field::from_rational(const Rational& q) const {
    switch (kind_) {
        case Kind::Rationals: return Elem(self(), q);
        case Kind::Prime: {
            long p = characteristic_;
            long num = mpz_class(q.get_num() % p).get_si();
            long den = mpz_class(q.get_den() % p).get_si();
            if (den == 0) throw Error(ErrorCode::DivisionByZero, to_string(q) + " in F_" + std::to_string(p));
            long v = ((num % p + p) % p) * mod_inverse(den, p) % p;
            return Elem(self(), v);
        }
        case Kind::RationalFunctions:
        case Kind::Algebraic: return embed(base_->from_rational(q));
    }
    return {};
}

Elem Field::generator() const {
    if (kind_ == Kind::RationalFunctions)
        return make_frac(Poly::variable(base_, var_), Poly::constant(base_->one(), var_));
    if (kind_ == Kind::Algebraic) return make_alg(Poly::variable(base_, var_));
    throw Error(ErrorCode::InvalidInput, name() + " has no generator");
}

bool Field::is_subfield(const Field& sub) const {
    for (const Field* f = this; f; f = f->base_.get())
        if (f->same_as(sub)) return true;
    return false;
}

Elem Field::embed(const Elem& a) const {
    if (!a.valid()) throw Error(ErrorCode::InvalidInput, "uninitialised element");
    if (a.field().get() == this || same_as(*a.field())) return Elem(self(), a.rep_);
    if (base_ && base_->is_subfield(*a.field())) {
        Elem b = base_->embed(a);
        if (kind_ == Kind::RationalFunctions)
            return make_frac(Poly::constant(b, var_), Poly::constant(base_->one(), var_));
        return make_alg(Poly::constant(b, var_));
    }
    throw Error(ErrorCode::FieldMismatch, "cannot embed element of " + a.field()->name() + " into " + name());
}

Elem Field::make_frac(const Poly& num, const Poly& den) const {
    if (kind_ != Kind::RationalFunctions) throw Error(ErrorCode::FieldMismatch, "not a rational function field");
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
    Poly n = num.with_var(var_), d = den.with_var(var_);
    if (n.is_zero()) return Elem(self(), std::make_shared<const FracRep>(FracRep{n, Poly::constant(base_->one(), var_)}));
    if (d.degree() > 0 && n.degree() >= 0) {
        Poly g = gcd(n, d);
        if (g.degree() > 0) {
            n = divmod(n, g).first;
            d = divmod(d, g).first;
        }
    }
    Elem inv = d.lc().inverse();
    n = n * inv;
    d = d * inv;
    return Elem(self(), std::make_shared<const FracRep>(FracRep{std::move(n), std::move(d)}));
}

Elem Field::make_alg(const Poly& rep) const {
    if (kind_ != Kind::Algebraic) throw Error(ErrorCode::FieldMismatch, "not an algebraic extension");
    Poly r = rep.with_var(var_);
    if (r.degree() >= modulus_->degree()) r = divmod(r, *modulus_).second;
    return Elem(self(), std::make_shared<const AlgRep>(AlgRep{std::move(r)}));
}

bool Field::same_as(const Field& o) const {
    if (this == &o) return true;
    if (kind_ != o.kind_ || characteristic_ != o.characteristic_) return false;
    switch (kind_) {
        case Kind::Rationals:
        case Kind::Prime: return true;
        case Kind::RationalFunctions: return var_ == o.var_ && base_->same_as(*o.base_);
        case Kind::Algebraic:
            return var_ == o.var_ && base_->same_as(*o.base_) && *modulus_ == *o.modulus_;
    }
    return false;
}

std::string Field::name() const {
    switch (kind_) {
        case Kind::Rationals: return "Q";
        case Kind::Prime: return "F_" + std::to_string(characteristic_);
        case Kind::RationalFunctions: return base_->name() + "(" + var_ + ")";
        case Kind::Algebraic: return base_->name() + "[" + var_ + "]/(" + modulus_->str() + ")";
    }
    return "?";
}

bool same_field(const FieldPtr& a, const FieldPtr& b) { return a == b || (a && b && a->same_as(*b)); }

// ---------------------------------------------------------------- Elem

namespace {

// Bring two operands into a common field, embedding the smaller one.
std::pair<Elem, Elem> unify(const Elem& a, const Elem& b) {
    if (!a.valid() || !b.valid()) throw Error(ErrorCode::InvalidInput, "uninitialised element");
    if (a.field() == b.field() || a.field()->same_as(*b.field())) return {a, b};
    if (a.field()->is_subfield(*b.field())) return {a, a.field()->embed(b)};
    if (b.field()->is_subfield(*a.field())) return {b.field()->embed(a), b};
    throw Error(ErrorCode::FieldMismatch, a.field()->name() + " vs " + b.field()->name());
}

}  // namespace

bool Elem::is_zero() const {
    switch (rep_.index()) {
        case 1: return sgn(std::get<1>(rep_)) == 0;
        case 2: return std::get<2>(rep_) == 0;
        case 3: return std::get<3>(rep_)->num.is_zero();
        case 4: return std::get<4>(rep_)->rep.is_zero();
    }
    throw Error(ErrorCode::InvalidInput, "uninitialised element");
}

bool Elem::is_one() const { return *this == field_->one(); }

Elem Elem::operator+(const Elem& o) const {
    auto [a, b] = unify(*this, o);
    const Field& F = *a.field_;
    switch (F.kind()) {
        case Field::Kind::Rationals: return Elem(a.field_, Rational(a.rational() + b.rational()));
        case Field::Kind::Prime: return Elem(a.field_, (a.residue() + b.residue()) % F.characteristic());
        case Field::Kind::RationalFunctions:
            if (a.den() == b.den()) return F.make_frac(a.num() + b.num(), a.den());
            return F.make_frac(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
        case Field::Kind::Algebraic: return F.make_alg(a.alg() + b.alg());
    }
    return {};
}

Elem Elem::operator-() const {
    const Field& F = *field_;
    switch (F.kind()) {
        case Field::Kind::Rationals: return Elem(field_, Rational(-rational()));
        case Field::Kind::Prime: return Elem(field_, (F.characteristic() - residue()) % F.characteristic());
        case Field::Kind::RationalFunctions:
            return Elem(field_, std::make_shared<const FracRep>(FracRep{-num(), den()}));
        case Field::Kind::Algebraic: return Elem(field_, std::make_shared<const AlgRep>(AlgRep{-alg()}));
    }
    return {};
}

Elem Elem::operator-(const Elem& o) const { return *this + (-o); }

Elem Elem::operator*(const Elem& o) const {
    auto [a, b] = unify(*this, o);
    const Field& F = *a.field_;
    switch (F.kind()) {
        case Field::Kind::Rationals: return Elem(a.field_, Rational(a.rational() * b.rational()));
        case Field::Kind::Prime: return Elem(a.field_, a.residue() * b.residue() % F.characteristic());
        case Field::Kind::RationalFunctions:
            if (a.is_zero() || b.is_zero()) return F.zero();
            return F.make_frac(a.num() * b.num(), a.den() * b.den());
        case Field::Kind::Algebraic: return F.make_alg(a.alg() * b.alg());
    }
    return {};
}

Elem Elem::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const Field& F = *field_;
    switch (F.kind()) {
        case Field::Kind::Rationals: return Elem(field_, Rational(1 / rational()));
        case Field::Kind::Prime: return Elem(field_, mod_inverse(residue(), F.characteristic()));
        case Field::Kind::RationalFunctions: return F.make_frac(den(), num());
        case Field::Kind::Algebraic: {
            auto eg = extended_gcd(alg(), F.modulus());
            if (eg.g.degree() != 0) throw Error(ErrorCode::DivisionByZero, "modulus is not irreducible");
            return F.make_alg(eg.s);
        }
    }
    return {};
}

Elem Elem::operator/(const Elem& o) const {
    auto [a, b] = unify(*this, o);
    return a * b.inverse();
}

Elem Elem::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Elem result = field_->one(), base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

bool Elem::operator==(const Elem& o) const {
    auto [a, b] = unify(*this, o);
    switch (a.rep_.index()) {
        case 1: return a.rational() == b.rational();
        case 2: return a.residue() == b.residue();
        case 3: return a.num() == b.num() && a.den() == b.den();
        case 4: return a.alg() == b.alg();
    }
    return false;
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

std::string Elem::str() const {
    switch (rep_.index()) {
        case 1: return to_string(rational());
        case 2: return std::to_string(residue());
        case 3: {
            std::string n = num().str();
            if (den().degree() == 0) return n;
            std::string d = den().str();
            if (has_inner_sign(n)) n = "(" + n + ")";
            if (has_inner_sign(d) || d.find_first_of("*/") != std::string::npos) d = "(" + d + ")";
            return n + "/" + d;
        }
        case 4: return alg().str();
    }
    return "<null>";
}

const Rational& Elem::rational() const { return std::get<1>(rep_); }
long Elem::residue() const { return std::get<2>(rep_); }
const Poly& Elem::num() const { return std::get<3>(rep_)->num; }
const Poly& Elem::den() const { return std::get<3>(rep_)->den; }
const Poly& Elem::alg() const { return std::get<4>(rep_)->rep; }

}  // namespace keypoly
