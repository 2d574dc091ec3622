#pragma once

#include "keypoly/poly.hpp"

#include <utility>
#include <vector>

namespace keypoly {

using Factorization = std::vector<std::pair<Poly, int>>;

/// a^n mod m.
Poly powmod(const Poly& a, const Integer& n, const Poly& m);

/// Squarefree decomposition: pairs (squarefree monic part, multiplicity).
Factorization squarefree_decomposition(const Poly& g);

/// Monic irreducible factors with multiplicities over a finite field,
/// ordered by degree and then by printed form.
Factorization factor_over_prime_field(const Poly& g);

/// Factorization over any supported residue field. Over Q only linear factors
/// are split off; a remaining part of degree above 3 raises
/// UnsupportedResidueFactorization.
Factorization factor(const Poly& g);

bool is_irreducible(const Poly& g);

/// Rational roots of a polynomial over Q.
std::vector<Rational> rational_roots(const Poly& g);

}  // namespace keypoly
