#include "keypoly/config.hpp"

#include "keypoly/error.hpp"
#include "keypoly/parser.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace keypoly {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw Error(ErrorCode::ParseError, where + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object()) bad(where, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) bad(where, "missing \"" + key + "\"");
    return *it;
}

std::string text_of(const json& j, const std::string& where) {
    if (!j.is_string()) bad(where, "expected a string");
    return j.get<std::string>();
}

Poly poly_at(const std::string& text, const FieldPtr& K, const std::string& var, const std::string& where) {
    try {
        return parse_poly(text, K, var);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ParseError) throw;
        std::string what = e.what();
        const std::string prefix = std::string(to_string(ErrorCode::ParseError)) + ": ";
        bad(where, what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what);
    }
}

long integer_of(const json& j, const std::string& where) {
    if (!j.is_number_integer()) bad(where, "expected an integer");
    return j.get<long>();
}

Rational rational_of(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) bad(where, "expected an integer or a fraction string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const std::exception& e) {
        bad(where, e.what());
    }
}

long prime_of(const json& j, const std::string& where) {
    long p = integer_of(j, where);
    if (p < 2) bad(where, "expected a prime");
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) bad(where, std::to_string(p) + " is not prime");
    return p;
}

FieldPtr coefficient_field(const json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
    if (j.is_object()) return Field::prime(prime_of(member(j, "prime", where), where + ".prime"));
    bad(where, "expected \"Q\" or {\"prime\": p}");
}

ValuedFieldPtr field_of(const json& j, const std::string& where) {
    const std::string type = text_of(member(j, "type", where), where + ".type");
    if (type == "padic") return padic_field(prime_of(member(j, "p", where), where + ".p"));
    if (type == "order")
        return order_field(coefficient_field(member(j, "coefficients", where), where + ".coefficients"),
                           text_of(member(j, "var", where), where + ".var"));
    if (type == "extension") {
        ValuedFieldPtr base = field_of(member(j, "base", where), where + ".base");
        InductiveValuation T(base, text_of(member(j, "var", where), where + ".var"));
        const json& tower = member(j, "tower", where);
        if (!tower.is_array() || tower.empty()) bad(where + ".tower", "expected a nonempty array");
        for (size_t i = 0; i < tower.size(); ++i) {
            const std::string at = where + ".tower[" + std::to_string(i) + "]";
            Poly phi = poly_at(text_of(member(tower[i], "phi", at), at + ".phi"), base->field(), T.var(), at + ".phi");
            T = T.augment(phi, Value(rational_of(member(tower[i], "mu", at), at + ".mu")));
        }
        return extend_by_tower(T);
    }
    bad(where + ".type", "unknown field type \"" + type + "\"");
}

LocalRing ring_of(const json& j, const std::string& where) {
    const std::string type = text_of(member(j, "type", where), where + ".type");
    if (type == "localized_integers") return LocalRing::localized_integers(prime_of(member(j, "p", where), where + ".p"));
    if (type != "localized_polynomials") bad(where + ".type", "unknown ring type \"" + type + "\"");
    const json& c = member(j, "coefficients", where);
    std::vector<std::string> vars;
    const json& vs = member(j, "vars", where);
    if (!vs.is_array()) bad(where + ".vars", "expected an array of names");
    for (const auto& v : vs) vars.push_back(text_of(v, where + ".vars"));
    if (c.is_string() && c.get<std::string>() == "Q")
        return LocalRing::localized_polynomials(LocalRing::Coefficients::Q, vars);
    if (c.is_string() && c.get<std::string>() == "Z")
        return LocalRing::localized_polynomials(LocalRing::Coefficients::Z, vars,
                                                prime_of(member(j, "p", where), where + ".p"));
    if (c.is_object())
        return LocalRing::localized_polynomials(LocalRing::Coefficients::Fp, vars,
                                                prime_of(member(c, "prime", where), where + ".coefficients.prime"));
    bad(where + ".coefficients", "expected \"Q\", \"Z\" or {\"prime\": p}");
}

std::pair<long, long> line_column(const std::string& text, size_t byte) {
    long line = 1, col = 1;
    for (size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

ScenarioConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw Error(ErrorCode::ParseError,
                    "line " + std::to_string(line) + " column " + std::to_string(col) + ": malformed JSON");
    }
    ScenarioConfig cfg;
    cfg.field = field_of(member(j, "field", "config"), "field");
    if (j.contains("ring")) cfg.ring = ring_of(j["ring"], "ring");
    if (j.contains("var")) cfg.var = text_of(j["var"], "var");
    cfg.f = poly_at(text_of(member(j, "f", "config"), "f"), cfg.field->field(), cfg.var, "f");
    if (!cfg.f.is_monic()) throw Error(ErrorCode::InvalidInput, "f = " + cfg.f.str() + " is not monic");
    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) bad("options", "expected an object");
        if (o.contains("stage_bound")) cfg.stage_bound = static_cast<int>(integer_of(o["stage_bound"], "options.stage_bound"));
        if (o.contains("samples")) cfg.samples = integer_of(o["samples"], "options.samples");
        if (o.contains("seed")) cfg.seed = static_cast<unsigned long>(integer_of(o["seed"], "options.seed"));
        if (o.contains("bound")) cfg.bound = rational_of(o["bound"], "options.bound");
    }
    if (cfg.ring) check_ring(*cfg.ring, cfg.field->field());
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace keypoly
