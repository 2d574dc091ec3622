#include "keypoly/valued_field.hpp"

#include "keypoly/error.hpp"
#include "keypoly/inductive_valuation.hpp"

#include <numeric>

namespace keypoly {

namespace {

long ord_p(Integer n, long p) {
    long k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    return k;
}

long ord_0(const Poly& g) {
    long k = 0;
    while (g.coeffs()[k].is_zero()) ++k;
    return k;
}

void require_unit(const ValuedField& F, const Elem& a) {
    Value v = F.value(a);
    if (!(v == Value(0))) throw Error(ErrorCode::NotAUnit, a.str() + " has value " + v.str());
}

class PAdicBase final : public ValuedField {
public:
    explicit PAdicBase(long p) : p_(p), K_(Field::rationals()), k_(Field::prime(p)) {}

    const FieldPtr& field() const override { return K_; }
    const FieldPtr& residue_field() const override { return k_; }

    Value value(const Elem& a) const override {
        Elem b = K_->embed(a);
        if (b.is_zero()) return Value::infinity();
        return Value(ord_p(b.rational().get_num(), p_) - ord_p(b.rational().get_den(), p_));
    }

    Elem residue(const Elem& a) const override {
        require_unit(*this, a);
        return k_->from_rational(K_->embed(a).rational());
    }

    Elem lift(const Elem& r) const override { return K_->from_int(k_->embed(r).residue()); }
    Elem uniformizer() const override { return K_->from_int(p_); }
    long value_denominator() const override { return 1; }
    std::string describe() const override { return "Q_" + std::to_string(p_); }

private:
    long p_;
    FieldPtr K_, k_;
};

class OrderBase final : public ValuedField {
public:
    OrderBase(FieldPtr k, const std::string& var) : K_(Field::rational_functions(k, var)), k_(std::move(k)) {
        if (k_->kind() != Field::Kind::Rationals && k_->kind() != Field::Kind::Prime)
            throw Error(ErrorCode::InvalidInput, "order valuation needs Q or a prime field");
    }

    const FieldPtr& field() const override { return K_; }
    const FieldPtr& residue_field() const override { return k_; }

    Value value(const Elem& a) const override {
        Elem b = K_->embed(a);
        if (b.is_zero()) return Value::infinity();
        return Value(ord_0(b.num()) - ord_0(b.den()));
    }

    Elem residue(const Elem& a) const override {
        require_unit(*this, a);
        Elem b = K_->embed(a);
        return b.num().coeff(0) / b.den().coeff(0);
    }

    Elem lift(const Elem& r) const override { return K_->embed(k_->embed(r)); }
    Elem uniformizer() const override { return K_->generator(); }
    long value_denominator() const override { return 1; }
    std::string describe() const override { return K_->name() + " with the " + K_->var() + "-adic valuation"; }

private:
    FieldPtr K_, k_;
};

class ExtensionField final : public ValuedField {
public:
    explicit ExtensionField(const InductiveValuation& tower)
        : tower_(tower), K_(Field::rational_functions(tower.field(), tower.var())) {
        if (tower.height() == 0) throw Error(ErrorCode::InvalidInput, "extension tower has no stages");
        for (int i = 1; i <= tower.height(); ++i)
            if (tower.mu(i).is_infinite())
                throw Error(ErrorCode::PseudoValuationNotAField, "tower has an infinite key value");
        const auto& top = tower.stage(tower.height());
        residue_ = Field::rational_functions(top.coeffs, top.yvar);
        auto [num, den] = tower.uniformizer_fraction();
        pi_ = K_->make_frac(num, den);
    }

    const FieldPtr& field() const override { return K_; }
    const FieldPtr& residue_field() const override { return residue_; }

    Value value(const Elem& a) const override {
        Elem b = K_->embed(a);
        if (b.is_zero()) return Value::infinity();
        return tower_.value(b.num()) - tower_.value(b.den());
    }

    Elem residue(const Elem& a) const override {
        require_unit(*this, a);
        Elem b = K_->embed(a);
        Rational gamma = tower_.value(b.num()).finite();
        Laurent n = tower_.graded_class(tower_.height(), b.num(), gamma);
        Laurent d = tower_.graded_class(tower_.height(), b.den(), gamma);
        long shift = n.low - d.low;
        Poly pn = shift > 0 ? n.poly.shift(static_cast<int>(shift)) : n.poly;
        Poly pd = shift < 0 ? d.poly.shift(static_cast<int>(-shift)) : d.poly;
        return residue_->make_frac(pn, pd);
    }

    Elem lift(const Elem& r) const override {
        Elem b = residue_->embed(r);
        if (b.is_zero()) return K_->zero();
        Poly n = tower_.lift_class(Laurent{0, b.num()}, 0);
        Poly d = tower_.lift_class(Laurent{0, b.den()}, 0);
        return K_->make_frac(n, d);
    }

    Elem uniformizer() const override { return pi_; }
    long value_denominator() const override { return tower_.value_denominator(); }
    std::string describe() const override { return K_->name() + " valued by " + tower_.str(); }

private:
    InductiveValuation tower_;
    FieldPtr K_, residue_;
    Elem pi_;
};

}  // namespace

ValuedFieldPtr padic_field(long p) { return std::make_shared<PAdicBase>(p); }

ValuedFieldPtr order_field(FieldPtr k, const std::string& var) { return std::make_shared<OrderBase>(std::move(k), var); }

ValuedFieldPtr extend_by_tower(const InductiveValuation& tower) { return std::make_shared<ExtensionField>(tower); }

ValueSemigroup::ValueSemigroup(std::vector<Rational> generators) {
    for (auto& g : generators) {
        if (g < 0) throw Error(ErrorCode::InvalidInput, "negative semigroup generator");
        if (g == 0) continue;
        if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) gens_.push_back(g);
    }
    std::sort(gens_.begin(), gens_.end());
    for (const auto& g : gens_) d_ = std::lcm(d_, g.get_den().get_si());
}

bool ValueSemigroup::contains(const Rational& q) const {
    if (q < 0) return false;
    if (q == 0) return true;
    Rational scaled = q * d_;
    if (scaled.get_den() != 1) return false;
    const long N = scaled.get_num().get_si();
    std::vector<char> reach(N + 1, 0);
    reach[0] = 1;
    std::vector<long> steps;
    for (const auto& g : gens_) steps.push_back(Rational(g * d_).get_num().get_si());
    for (long i = 1; i <= N; ++i)
        for (long s : steps)
            if (s <= i && reach[i - s]) {
                reach[i] = 1;
                break;
            }
    return reach[N];
}

Rational ValueSemigroup::min_positive() const { return gens_.empty() ? Rational(0) : gens_.front(); }

std::string ValueSemigroup::str() const {
    std::string s = "<";
    for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + to_string(gens_[i]);
    return s + ">";
}

}  // namespace keypoly
