#include "keypoly/approximants.hpp"

#include "keypoly/error.hpp"

#include <algorithm>
#include <deque>

namespace keypoly {

namespace {

void require_integral_monic(const ValuedFieldPtr& F, const Poly& f) {
    if (f.degree() < 1 || !f.is_monic()) throw Error(ErrorCode::InvalidInput, f.str() + " is not monic of positive degree");
    for (const auto& c : f.coeffs())
        if (!c.is_zero() && F->value(c) < Value(0))
            throw Error(ErrorCode::InvalidInput, "coefficient " + c.str() + " has negative value");
}

ApproximantStage make_record(const InductiveValuation& v, const Poly& f, long n, bool single) {
    ApproximantStage s;
    s.phi = v.phi(v.height());
    s.mu = v.mu(v.height());
    s.proj = v.projection(f);
    s.n = n;
    s.vf = v.value(f);
    s.single_factor = single;
    return s;
}

}  // namespace

std::vector<std::pair<Rational, long>> first_approximants(const ValuedFieldPtr& F, const Poly& f) {
    require_integral_monic(F, f);
    InductiveValuation v0(F, f.var());
    NewtonPolygon N = polygon(v0, Poly::variable(F->field(), f.var()), f);
    std::vector<std::pair<Rational, long>> out;
    for (const auto& s : N.segments)
        if (s.slope >= 0) out.emplace_back(s.slope, s.length);
    return out;
}

std::vector<ApproximantChain> next_approximants(const ApproximantChain& chain, const Poly& f) {
    const InductiveValuation& v = chain.tower;
    if (chain.terminal || v.is_pseudo()) throw Error(ErrorCode::InvalidInput, "chain is already terminal");
    if (v.is_key(f)) {
        ApproximantChain t = chain;
        t.tower = v.augment_unchecked(f, Value::infinity());
        t.terminal = true;
        return {t};
    }
    Residual R = v.residual(f);
    auto factors = factor(R.poly);
    struct Candidate {
        Poly psi;
        Segment seg;
    };
    std::vector<Candidate> cands;
    size_t segment_count = 0;
    for (const auto& [rho, mult] : factors) {
        Poly psi = v.lift_residual_factor(rho);
        if (psi.degree() < f.degree() && divmod(f, psi).second.is_zero())
            throw Error(ErrorCode::ReducibleInput, psi.str() + " divides " + f.str());
        auto segs = principal_part(polygon(v, psi, f), v.value(psi));
        segment_count += segs.size();
        for (const auto& s : segs) cands.push_back({psi, s});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.psi.degree() != b.psi.degree()) return a.psi.degree() < b.psi.degree();
        if (a.seg.slope != b.seg.slope) return a.seg.slope < b.seg.slope;
        return a.psi.str() < b.psi.str();
    });
    const bool single = factors.size() == 1 && R.m0 == 0 && segment_count == 1;
    std::vector<ApproximantChain> out;
    for (const auto& c : cands) {
        ApproximantChain child = chain;
        child.tower = v.augment(c.psi, Value(c.seg.slope));
        child.stages.push_back(make_record(child.tower, f, c.seg.length, single));
        out.push_back(std::move(child));
    }
    return out;
}

Resolution resolve(const ValuedFieldPtr& F, const Poly& f, int stage_bound) {
    require_integral_monic(F, f);
    Resolution res{f, {}};
    const Poly x = Poly::variable(F->field(), f.var());
    InductiveValuation v0(F, f.var());
    if (f == x) {
        ApproximantChain c{v0.augment_unchecked(x, Value::infinity()), {}, true, false};
        res.branches.push_back(c);
        return res;
    }
    if (f.coeff(0).is_zero()) throw Error(ErrorCode::ReducibleInput, "x divides " + f.str());

    std::deque<ApproximantChain> queue;
    auto first = first_approximants(F, f);
    for (const auto& [mu, len] : first) {
        ApproximantChain c{v0.augment(x, Value(mu)), {}, false, false};
        bool single = first.size() == 1 && len == f.degree();
        c.stages.push_back(make_record(c.tower, f, len, single));
        queue.push_back(std::move(c));
    }
    while (!queue.empty()) {
        ApproximantChain c = std::move(queue.front());
        queue.pop_front();
        const auto& last = c.stages.back();
        if (last.proj * last.phi.degree() < f.degree()) {
            c.open = true;
            res.branches.push_back(std::move(c));
            continue;
        }
        if (c.tower.height() >= stage_bound)
            throw Error(ErrorCode::StageBoundExceeded,
                        "no terminal stage within " + std::to_string(stage_bound) + " stages; a limit key is required");
        auto next = next_approximants(c, f);
        if (next.empty())
            throw Error(ErrorCode::LimitRequired, "no finite continuation after " + c.tower.str());
        for (auto& n : next) {
            if (n.terminal) res.branches.push_back(std::move(n));
            else queue.push_back(std::move(n));
        }
    }
    return res;
}

UniquenessCertificate uniqueness_certificate(const Resolution& r) {
    UniquenessCertificate cert;
    if (r.branches.empty()) return cert;
    const ApproximantChain& c = r.branches.front();
    const Poly& f = r.f;
    bool ok = r.branches.size() == 1 && c.terminal;
    for (size_t k = 0; k < c.stages.size(); ++k) {
        const auto& s = c.stages[k];
        StageCertificate sc;
        sc.single_factor = s.single_factor;
        sc.degree_identity = s.proj * s.phi.degree() == f.degree();
        if (k == 0) {
            sc.equivalent_power = true;
        } else {
            InductiveValuation prev = c.tower.prefix(static_cast<int>(k));
            Residual rf = prev.residual(f);
            Residual rp = prev.residual(s.phi.pow(static_cast<unsigned>(s.n)));
            sc.equivalent_power = rf.m0 == rp.m0 && rf.poly * rp.poly.lc() == rp.poly * rf.poly.lc();
        }
        ok = ok && sc.single_factor && sc.degree_identity && sc.equivalent_power;
        cert.stages.push_back(sc);
    }
    cert.verdict = ok;
    return cert;
}

ExtensionInvariants extension_invariants(const ApproximantChain& chain, const Poly& f, bool unique) {
    ExtensionInvariants inv;
    const InductiveValuation& t = chain.tower;
    for (int i = 1; i <= t.height(); ++i) {
        const auto& st = t.stage(i);
        if (st.mu.is_finite()) inv.e *= st.e;
        if (i >= 2) inv.f *= st.psi.degree();
    }
    if (unique) {
        if (!chain.terminal) throw Error(ErrorCode::NonUniqueExtension, "chain is not terminal");
        inv.defect = f.degree() / (inv.e * inv.f);
    }
    return inv;
}

}  // namespace keypoly
