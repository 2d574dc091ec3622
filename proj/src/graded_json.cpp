#include "keypoly/graded.hpp"

#include <json.hpp>

namespace keypoly {

std::string presentation_json(const GradedPresentation& P, const SemigroupModule& M) {
    using json = nlohmann::json;
    json gens = json::array(), rels = json::array(), base = json::array(), mods = json::array();
    for (size_t i = 0; i < P.names.size(); ++i) gens.push_back({{"name", P.names[i]}, {"degree", P.degrees[i].str()}});
    for (const auto& rel : P.relations) {
        json terms = json::array();
        for (const auto& t : rel.terms)
            terms.push_back(
                {{"coeff", t.coeff.str()}, {"monomial", monomial_str(t.exponents, P.names)}, {"value", t.value.str()}});
        rels.push_back({{"lead", {{"gen", P.names[rel.gen - 1]}, {"power", rel.power}}}, {"terms", terms}});
    }
    for (const auto& g : M.base.generators()) base.push_back(to_string(g));
    for (const auto& z : M.module_gens) mods.push_back(to_string(z));
    json out{{"generators", gens}, {"relations", rels}, {"semigroup", {{"base_gens", base}, {"module_gens", mods}}}};
    return out.dump(2);
}

}  // namespace keypoly
