#pragma once

#include "keypoly/poly.hpp"

#include <string>

namespace keypoly {

/// Parse a polynomial in `var` over K. Other identifiers must name the
/// adjoined variables of K or of its base fields. Division is allowed by
/// nonzero constants only. Errors carry the 1-based column.
Poly parse_poly(const std::string& text, const FieldPtr& K, const std::string& var = "x");

/// Parse an element of K (no polynomial variable).
Elem parse_elem(const std::string& text, const FieldPtr& K);

}  // namespace keypoly
