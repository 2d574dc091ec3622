#include <doctest.h>

#include "support.hpp"

#include "keypoly/error.hpp"

using namespace keypoly;
using namespace keypoly::testing;

TEST_CASE("poly_divmod examples") {
    auto Q = Field::rationals();
    auto [q1, r1] = poly_divmod(P("x^2+1", Q), P("x+1", Q));
    CHECK(q1 == P("x-1", Q));
    CHECK(r1 == P("2", Q));
    auto [q2, r2] = poly_divmod(P("x", Q), P("x", Q));
    CHECK(q2 == P("1", Q));
    CHECK(r2.is_zero());
    auto [q3, r3] = poly_divmod(P("x^3-2", Q), P("x", Q));
    CHECK(q3 == P("x^2", Q));
    CHECK(r3 == P("-2", Q));
    CHECK_THROWS_AS(poly_divmod(P("x^2", Q), P("2*x+1", Q)), Error);
}

TEST_CASE("poly_divmod reconstruction on random input") {
    std::mt19937_64 rng(11);
    for (auto K : {Field::rationals(), Field::prime(5), Field::rational_functions(Field::rationals(), "t")}) {
        for (int n = 0; n < 60; ++n) {
            Poly g = random_poly(K, rng, 7);
            Poly phi = random_monic(K, rng, static_cast<int>(uniform(rng, 1, 3)));
            auto [q, r] = poly_divmod(g, phi);
            CHECK(q * phi + r == g);
            CHECK(r.degree() < phi.degree());
        }
    }
}

TEST_CASE("resultant examples") {
    auto Q = Field::rationals();
    CHECK(resultant(P("x^2+1", Q), P("x+1", Q)) == Q->from_int(2));
    Elem r = resultant(P("x^3-2", Q), P("x", Q));
    CHECK((r == Q->from_int(2) || r == Q->from_int(-2)));
    CHECK(resultant(P("x^2+1", Q), P("x^2+1", Q)).is_zero());
}

namespace {

// Resultant as the product of g over the roots of f, computed through the
// norm of g in Q[x]/(f): the determinant of multiplication by g.
Elem resultant_by_norm(const Poly& f, const Poly& g) {
    const auto& K = f.field();
    const int n = f.degree();
    std::vector<std::vector<Elem>> M(n, std::vector<Elem>(n, K->zero()));
    for (int j = 0; j < n; ++j) {
        Poly col = divmod(g * Poly::monomial(K->one(), j), f).second;
        for (int i = 0; i < n; ++i) M[i][j] = col.coeff(i);
    }
    Elem det = K->one();
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!M[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return K->zero();
        if (piv != c) {
            std::swap(M[piv], M[c]);
            det = -det;
        }
        det = det * M[c][c];
        for (int r = c + 1; r < n; ++r) {
            Elem m = M[r][c] / M[c][c];
            for (int k = c; k < n; ++k) M[r][k] = M[r][k] - m * M[c][k];
        }
    }
    return det;
}

}  // namespace

TEST_CASE("resultant properties") {
    std::mt19937_64 rng(5);
    auto Q = Field::rationals();
    for (int n = 0; n < 60; ++n) {
        Poly f = random_monic(Q, rng, static_cast<int>(uniform(rng, 1, 4)));
        Poly g = random_poly(Q, rng, 4);
        Poly h = random_poly(Q, rng, 3);
        if (g.is_zero() || h.is_zero()) continue;
        long sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
        CHECK(resultant(f, g) == resultant(g, f) * Q->from_int(sign));
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
        CHECK(resultant(f, g) == resultant_by_norm(f, g));
    }
}

TEST_CASE("factor_over_prime_field examples") {
    auto F2 = Field::prime(2), F3 = Field::prime(3);
    auto a = factor_over_prime_field(P("x^2+1", F2));
    REQUIRE(a.size() == 1);
    CHECK(a[0].first == P("x+1", F2));
    CHECK(a[0].second == 2);
    auto b = factor_over_prime_field(P("x^2+1", F3));
    REQUIRE(b.size() == 1);
    CHECK(b[0].first == P("x^2+1", F3));
    CHECK(b[0].second == 1);
    auto c = factor_over_prime_field(P("x^2+x+1", F2));
    REQUIRE(c.size() == 1);
    CHECK(c[0].first == P("x^2+x+1", F2));
}

TEST_CASE("factor_over_prime_field product and irreducibility") {
    std::mt19937_64 rng(17);
    for (long p : {2L, 3L, 5L, 7L}) {
        auto F = Field::prime(p);
        for (int n = 0; n < 40; ++n) {
            Poly g = random_monic(F, rng, static_cast<int>(uniform(rng, 1, 7)));
            auto fs = factor_over_prime_field(g);
            Poly prod = Poly::constant(F->one());
            for (auto& [h, m] : fs) {
                CHECK(h.is_monic());
                CHECK(irreducible_by_search(h));
                prod = prod * h.pow(m);
            }
            CHECK(prod == g);
        }
    }
}

TEST_CASE("factorization over an extension of a prime field") {
    auto F2 = Field::prime(2);
    auto F4 = Field::algebraic(F2, P("a^2+a+1", F2, "a"), "a");
    auto fs = factor(P("x^2+x+1", F4));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first.degree() == 1);
    std::mt19937_64 rng(3);
    for (int n = 0; n < 20; ++n) {
        Poly g = random_monic(F4, rng, static_cast<int>(uniform(rng, 1, 4)));
        Poly prod = Poly::constant(F4->one());
        for (auto& [h, m] : factor(g)) {
            CHECK(irreducible_by_search(h));
            prod = prod * h.pow(m);
        }
        CHECK(prod == g);
    }
}

TEST_CASE("factorization over Q and Q(y)") {
    auto Q = Field::rationals();
    auto fs = factor(P("x^3-x", Q));
    CHECK(fs.size() == 3);
    CHECK(is_irreducible(P("x^2+1", Q)));
    CHECK_FALSE(is_irreducible(P("x^2-4", Q)));
    CHECK_THROWS_AS(factor(P("x^4+4", Q)), Error);
    auto Qy = Field::rational_functions(Q, "y");
    CHECK(is_irreducible(P("x^2+1", Qy)));
    CHECK(is_irreducible(P("x+y", Qy)));
    CHECK_THROWS_AS(factor(P("x^2+y", Qy)), Error);
}

TEST_CASE("rational functions stay normalized") {
    auto Q = Field::rationals();
    auto Qs = Field::rational_functions(Q, "s");
    auto Qst = Field::rational_functions(Qs, "t");
    Elem a = parse_elem("t^2/s^3", Qst);
    Elem b = parse_elem("s^3/t^2", Qst);
    CHECK((a * b).is_one());
    Elem c = parse_elem("(s^2-1)/(2*s-2)", Qs);
    CHECK(c.den().is_monic());
    CHECK(c == parse_elem("s/2+1/2", Qs));
    CHECK(parse_elem(a.str(), Qst) == a);
}

TEST_CASE("parser errors carry columns") {
    auto Q = Field::rationals();
    CHECK_THROWS_WITH(parse_poly("x+*2", Q), doctest::Contains("column 3"));
    CHECK_THROWS_AS(parse_poly("x/(x+1)", Q), Error);
    CHECK_THROWS_AS(parse_poly("y+1", Q), Error);
    CHECK(parse_poly("(x+1)^2", Q).str() == "x^2+2*x+1");
    CHECK(parse_poly("3/4*x - 1/2", Q).str() == "3/4*x-1/2");
}
