#pragma once

#include "keypoly/descent.hpp"

#include <optional>
#include <string>

namespace keypoly {

/// One scenario: a valued field, an optional local ring A, and f.
///
/// JSON shape:
///   {"field": {"type": "padic", "p": 2}
///           | {"type": "order", "coefficients": "Q" | {"prime": p}, "var": "t"}
///           | {"type": "extension", "base": <field>, "var": "t", "tower": [{"phi": "t", "mu": "3/2"}]},
///    "ring": {"type": "localized_integers", "p": 2}
///          | {"type": "localized_polynomials", "coefficients": "Q" | "Z" | {"prime": p}, "vars": ["s", "t"], "p": 3},
///    "f": "x^2+1", "var": "x",
///    "options": {"stage_bound": 64, "samples": 200, "seed": 7, "bound": "20"}}
struct ScenarioConfig {
    ValuedFieldPtr field;
    std::optional<LocalRing> ring;
    std::string var = "x";
    Poly f;
    int stage_bound = kDefaultStageBound;
    long samples = 200;
    unsigned long seed = 7;
    Rational bound = 20;
};

/// Throws ParseError with a line and column for malformed JSON, or naming the
/// offending key otherwise.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

}  // namespace keypoly
