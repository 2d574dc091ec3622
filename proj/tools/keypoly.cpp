#include "keypoly/config.hpp"
#include "keypoly/error.hpp"
#include "keypoly/graded.hpp"
#include "keypoly/parser.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <random>

using namespace keypoly;
using json = nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitHypothesis = 3;
constexpr int kExitLimit = 4;
constexpr int kExitOracle = 5;

struct Options {
    std::string input;
    bool json = false;
    bool verbose = false;
    std::optional<unsigned long> seed;
    std::optional<long> samples;
    std::optional<int> stage_bound;
    std::optional<std::string> bound;
    std::string g;
    int stage = 1;
};

int exit_code(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError: return kExitParse;
        case ErrorCode::HypothesisViolated:
        case ErrorCode::NonUniqueExtension:
        case ErrorCode::ResidueCharDividesDegree: return kExitHypothesis;
        case ErrorCode::LimitRequired:
        case ErrorCode::StageBoundExceeded: return kExitLimit;
        default: return 1;
    }
}

ScenarioConfig load(const Options& o) {
    if (o.input.empty()) throw Error(ErrorCode::InvalidInput, "--input is required");
    ScenarioConfig cfg = load_config(o.input);
    if (o.seed) cfg.seed = *o.seed;
    if (o.samples) cfg.samples = *o.samples;
    if (o.stage_bound) cfg.stage_bound = *o.stage_bound;
    if (o.bound) cfg.bound = parse_rational(*o.bound);
    return cfg;
}

const LocalRing& ring_of(const ScenarioConfig& cfg) {
    if (!cfg.ring) throw Error(ErrorCode::InvalidInput, "this command needs a \"ring\" in the config");
    return *cfg.ring;
}

InductiveValuation unique_tower(const Resolution& r) {
    if (!uniqueness_certificate(r).verdict)
        throw HypothesisViolation("nonUnique", std::to_string(r.branches.size()) + " branches for " + r.f.str());
    return r.branches.front().tower;
}

/// Generating sequence by descent; when the residue characteristic divides
/// deg f and the chain keys already lie in A[x], the chain itself.
GeneratingSequence sequence_for(const ScenarioConfig& cfg, bool& descended) {
    const LocalRing& A = ring_of(cfg);
    try {
        descended = true;
        return generating_sequence(A, cfg.field, cfg.f, cfg.stage_bound);
    } catch (const HypothesisViolation& e) {
        if (e.kind() != "pDividesDeg") throw;
        GeneratingSequence gs = sequence_from_chain(A, resolve(cfg.field, cfg.f, cfg.stage_bound));
        std::cerr << "note: residue characteristic divides deg f; keys taken from the approximant chain without "
                     "descent\n";
        descended = false;
        return gs;
    }
}

Elem random_elem(const FieldPtr& K, std::mt19937_64& rng) {
    auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
    switch (K->kind()) {
        case Field::Kind::Rationals: {
            Rational q(pick(-20, 20), pick(1, 6));
            q.canonicalize();
            return K->from_rational(q);
        }
        case Field::Kind::Prime: return K->from_int(pick(0, K->characteristic() - 1));
        case Field::Kind::RationalFunctions: {
            std::vector<Elem> num, den;
            for (long i = pick(0, 2); i >= 0; --i) num.push_back(random_elem(K->base(), rng));
            den.push_back(random_elem(K->base(), rng));
            if (pick(0, 2) == 0) den.push_back(K->base()->one());
            Poly d(K->base(), den, K->var());
            if (d.is_zero()) d = Poly::constant(K->base()->one(), K->var());
            return K->make_frac(Poly(K->base(), num, K->var()), d);
        }
        case Field::Kind::Algebraic: {
            std::vector<Elem> cs;
            for (int i = 0; i < K->extension_degree(); ++i) cs.push_back(random_elem(K->base(), rng));
            return K->make_alg(Poly(K->base(), cs, K->var()));
        }
    }
    return K->zero();
}

int cmd_value(const Options& o) {
    ScenarioConfig cfg = load(o);
    const InductiveValuation w = unique_tower(resolve(cfg.field, cfg.f, cfg.stage_bound));
    Poly g = parse_poly(o.g, cfg.field->field(), cfg.var);
    Value v = w.value(divmod(g, cfg.f).second);
    if (o.json) std::cout << json{{"value", v.str()}}.dump(2) << "\n";
    else std::cout << v.str() << "\n";
    return 0;
}

int cmd_approximate(const Options& o) {
    ScenarioConfig cfg = load(o);
    Resolution r = resolve(cfg.field, cfg.f, cfg.stage_bound);
    auto cert = uniqueness_certificate(r);
    json out;
    out["branches"] = json::array();
    for (size_t b = 0; b < r.branches.size(); ++b) {
        const auto& c = r.branches[b];
        if (r.branches.size() > 1 && !o.json) std::cout << "branch " << b + 1 << ":\n";
        json stages = json::array();
        for (int k = 1; k <= c.tower.height(); ++k) {
            json s{{"phi", c.tower.phi(k).str()}, {"mu", c.tower.mu(k).str()}};
            std::string line = "(" + c.tower.phi(k).str() + ", " + c.tower.mu(k).str() + ")";
            if (k <= static_cast<int>(c.stages.size())) {
                const auto& st = c.stages[k - 1];
                s["proj"] = st.proj;
                s["n"] = st.n;
                if (o.verbose) line += " proj=" + std::to_string(st.proj) + " n=" + std::to_string(st.n) + " v(f)=" + st.vf.str();
            }
            stages.push_back(s);
            if (!o.json) std::cout << line << "\n";
        }
        if (c.open && !o.json) std::cout << "open: follows a proper factor of f over the completion\n";
        out["branches"].push_back({{"stages", stages}, {"terminal", c.terminal}, {"open", c.open}});
    }
    out["unique"] = cert.verdict;
    if (cert.verdict) {
        auto inv = extension_invariants(r.branches.front(), r.f, true);
        out["e"] = inv.e;
        out["f"] = inv.f;
        out["defect"] = inv.defect ? json(*inv.defect) : json(nullptr);
        if (!o.json)
            std::cout << "unique: yes; e=" << inv.e << " f=" << inv.f
                      << " defect=" << (inv.defect ? std::to_string(*inv.defect) : "?") << "\n";
    } else if (!o.json) {
        std::cout << "unique: no; " << r.branches.size() << " branches\n";
    }
    if (o.json) std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_descend(const Options& o) {
    ScenarioConfig cfg = load(o);
    bool descended = false;
    GeneratingSequence gs = sequence_for(cfg, descended);
    if (o.json) {
        json phis = json::array();
        for (size_t i = 0; i < gs.phis.size(); ++i)
            phis.push_back({{"name", "phi_" + std::to_string(i + 1)}, {"poly", gs.phis[i].str()}, {"value", gs.values[i].str()}});
        std::cout << json{{"phis", phis}, {"all_in_A", gs.all_in_A}, {"descended", descended}}.dump(2) << "\n";
        return 0;
    }
    for (size_t i = 0; i < gs.phis.size(); ++i)
        std::cout << "phi_" << i + 1 << " = " << gs.phis[i].str() << " (v=" << gs.values[i].str() << ")\n";
    std::cout << "all coefficients in A: " << (gs.all_in_A ? "yes" : "no") << "\n";
    if (o.verbose) {
        for (size_t t = 0; t < gs.traces.size(); ++t) {
            const auto& tr = gs.traces[t];
            std::cout << "descent " << t + 2 << ": r=" << tr.r << " e=" << tr.e << " phi=" << tr.phi.str() << "\n";
            for (long j = 0; j < tr.r; ++j)
                std::cout << "  u_" << j << " = " << tr.u[j].str() << " margin " << tr.u_margin[j].str() << "\n";
        }
    }
    return 0;
}

int cmd_graded(const Options& o) {
    ScenarioConfig cfg = load(o);
    const LocalRing& A = ring_of(cfg);
    bool descended = false;
    GeneratingSequence gs = sequence_for(cfg, descended);
    GradedPresentation P = presentation(A, gs, cfg.f);
    auto report = relation_check(P);
    SemigroupModule M = semigroup_module(A, gs, cfg.f, cfg.bound, std::max<long>(cfg.samples, 500), cfg.seed);

    if (o.json) {
        std::cout << presentation_json(P, M) << "\n";
        return 0;
    }
    std::cout << "generators:";
    for (size_t i = 0; i < P.names.size(); ++i)
        std::cout << (i ? ", " : " ") << P.names[i] << " (degree " << P.degrees[i].str() << ")";
    std::cout << "\n";
    for (size_t i = 0; i < P.relations.size(); ++i) {
        std::cout << "relation: " << relation_str(P.relations[i], P.names);
        if (o.verbose) std::cout << "  [lift value " << report[i].lift_value.str() << " > " << report[i].degree.str() << "]";
        std::cout << "\n";
    }
    std::cout << "semigroup: S = " << M.base.str() << ", z = {";
    for (size_t i = 0; i < M.module_gens.size(); ++i) std::cout << (i ? ", " : "") << to_string(M.module_gens[i]);
    std::cout << "}\n";
    std::cout << "coverage up to " << to_string(M.bound) << ": ok (" << M.checked << " elements)\n";
    std::cout << "0 and the v(phi_i) alone cover: " << (M.small_gens_cover ? "yes" : "no") << "\n";
    return 0;
}

int cmd_polygon(const Options& o) {
    ScenarioConfig cfg = load(o);
    Resolution r = resolve(cfg.field, cfg.f, cfg.stage_bound);
    const InductiveValuation& T = r.branches.front().tower;
    if (o.stage < 1 || o.stage > T.height())
        throw Error(ErrorCode::InvalidInput, "stage must lie in 1.." + std::to_string(T.height()));
    InductiveValuation v = T.prefix(o.stage - 1);
    const Poly& phi = T.phi(o.stage);
    NewtonPolygon N = polygon(v, phi, cfg.f);
    const bool first = o.stage == 1;
    const Value threshold = first ? Value(0) : v.value(phi);
    json pts = json::array(), segs = json::array();
    for (const auto& p : N.points) {
        pts.push_back({{"abscissa", p.abscissa}, {"value", to_string(p.ordinate)}});
        if (!o.json) std::cout << "(" << p.abscissa << ", " << to_string(p.ordinate) << ")\n";
    }
    for (const auto& s : N.segments) {
        bool principal = first ? Value(s.slope) >= threshold : Value(s.slope) > threshold;
        segs.push_back({{"slope", to_string(s.slope)}, {"length", s.length}, {"principal", principal}});
        if (!o.json)
            std::cout << "slope=" << to_string(s.slope) << " length=" << s.length
                      << " principal=" << (principal ? "true" : "false") << "\n";
    }
    if (o.json) std::cout << json{{"points", pts}, {"segments", segs}, {"phi", phi.str()}}.dump(2) << "\n";
    return 0;
}

int cmd_oracle(const Options& o) {
    ScenarioConfig cfg = load(o);
    const InductiveValuation w = unique_tower(resolve(cfg.field, cfg.f, cfg.stage_bound));
    const FieldPtr& K = cfg.field->field();
    std::mt19937_64 rng(cfg.seed);
    long agree = 0, total = 0;
    while (total < cfg.samples) {
        std::vector<Elem> cs;
        long d = std::uniform_int_distribution<long>(0, cfg.f.degree() - 1)(rng);
        for (long i = 0; i <= d; ++i) cs.push_back(random_elem(K, rng));
        Poly g(K, cs, cfg.var);
        if (g.is_zero()) continue;
        ++total;
        Value lhs = w.value(g) * cfg.f.degree();
        Value rhs = cfg.field->value(resultant(cfg.f, g));
        if (lhs == rhs) ++agree;
        else if (o.verbose) std::cerr << "disagree: g = " << g.str() << " " << lhs.str() << " vs " << rhs.str() << "\n";
    }
    if (o.json) std::cout << json{{"agree", agree}, {"samples", total}}.dump(2) << "\n";
    else std::cout << agree << "/" << total << " agree\n";
    return agree == total ? 0 : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MacLane key polynomials, approximants and integral descent"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--input", o.input, "scenario config (JSON)");
    app.add_flag("--json", o.json, "JSON output");
    app.add_flag("--verbose", o.verbose, "more detail");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--samples", o.samples, "number of random samples");
    app.add_option("--stage-bound", o.stage_bound, "maximum number of stages");
    app.add_option("--bound", o.bound, "value bound for semigroup coverage");

    auto* value = app.add_subcommand("value", "value of g modulo f");
    value->add_option("g", o.g, "polynomial")->required();
    app.add_subcommand("approximate", "approximant chains and extension invariants");
    app.add_subcommand("descend", "generating sequence with coefficients in A");
    app.add_subcommand("graded", "graded presentation and value semigroup");
    auto* poly = app.add_subcommand("polygon", "Newton polygon of f at a stage of the chain");
    poly->add_option("stage", o.stage, "stage (default 1)");
    app.add_subcommand("oracle", "compare values with the resultant oracle");
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        if (name == "value") return cmd_value(o);
        if (name == "approximate") return cmd_approximate(o);
        if (name == "descend") return cmd_descend(o);
        if (name == "graded") return cmd_graded(o);
        if (name == "polygon") return cmd_polygon(o);
        return cmd_oracle(o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.code());
    }
}
