#pragma once

#include "keypoly/newton_polygon.hpp"

#include <optional>
#include <vector>

namespace keypoly {

struct ApproximantStage {
    Poly phi;
    Value mu;
    long proj = 0;             ///< projection of f in this stage
    long n = 0;                ///< length of the polygon segment that produced the stage
    Value vf;                  ///< value of f in this stage
    bool single_factor = true; ///< the step that produced this stage had one factor and one segment
};

struct ApproximantChain {
    InductiveValuation tower;
    std::vector<ApproximantStage> stages;
    bool terminal = false;  ///< tower ends with v(f) = ∞
    bool open = false;      ///< branch follows a proper factor over the completion and cannot terminate
};

struct Resolution {
    Poly f;
    std::vector<ApproximantChain> branches;
};

struct StageCertificate {
    bool single_factor = false;
    bool degree_identity = false;   ///< proj · deg φ_k = deg f
    bool equivalent_power = false;  ///< f ∼ φ_k^{n_k} in the previous stage (vacuous at stage 1)
};

struct UniquenessCertificate {
    std::vector<StageCertificate> stages;
    bool verdict = false;
};

struct ExtensionInvariants {
    long e = 1;
    long f = 1;
    std::optional<long> defect;
};

constexpr int kDefaultStageBound = 64;

/// First-stage key values: slopes of the polygon of f in x, with segment lengths.
std::vector<std::pair<Rational, long>> first_approximants(const ValuedFieldPtr& F, const Poly& f);

/// Continuations of a non-terminal chain; a single terminal chain when f is a
/// key polynomial of the current stage.
std::vector<ApproximantChain> next_approximants(const ApproximantChain& chain, const Poly& f);

Resolution resolve(const ValuedFieldPtr& F, const Poly& f, int stage_bound = kDefaultStageBound);

UniquenessCertificate uniqueness_certificate(const Resolution& r);

/// e, f and, for a certified unique extension, the defect deg f / (e·f).
ExtensionInvariants extension_invariants(const ApproximantChain& chain, const Poly& f, bool unique);

}  // namespace keypoly
