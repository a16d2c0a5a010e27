#include <doctest.h>
#include <qfusion/poly.hpp>
#include <qfusion/qchar.hpp>

#include <stdexcept>

using namespace qfusion;

namespace {
EPoly var(int m, int i) { return EPoly::variable(m, i); }
}

TEST_CASE("products and bidegrees") {
    EPoly p = var(2, 0) * var(2, 1);
    CHECK(bidegree(p) == Bidegree{2, 1});

    EPoly sq = (var(2, 0) + var(2, 1)) * (var(2, 0) + var(2, 1));
    EPoly expect = var(2, 0) * var(2, 0) + var(2, 0) * var(2, 1) * EPoly::constant(2, 2) +
                   var(2, 1) * var(2, 1);
    CHECK(sq == expect);

    CHECK(EPoly::constant(2, 1) * p == p);
}

TEST_CASE("bihomogeneous components") {
    EPoly p = var(2, 0) + var(2, 1) * var(2, 1);
    CHECK(bihomogeneous_component(p, {2, 2}) == var(2, 1) * var(2, 1));
    CHECK(bihomogeneous_component(var(2, 0), {1, 1}).is_zero());

    // z^2 coefficient of (e_0 + e_1 z)^2 is e_1^2, of bidegree (2,2).
    EPoly ez2 = var(2, 1) * var(2, 1);
    CHECK(bidegree(ez2) == Bidegree{2, 2});
    CHECK_THROWS_AS((void)bidegree(p), std::logic_error);
}

TEST_CASE("monomial bases in a bidegree") {
    auto b1 = monomial_basis(2, {2, 1});
    REQUIRE(b1.size() == 1);
    CHECK(b1[0] == Exps{1, 1});

    auto b2 = monomial_basis(2, {2, 2});
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == Exps{0, 2});

    auto b3 = monomial_basis(3, {2, 2});
    REQUIRE(b3.size() == 2);
    CHECK(b3[0] == Exps{0, 2, 0});
    CHECK(b3[1] == Exps{1, 0, 1});
}

TEST_CASE("coefficient vectors") {
    auto basis = monomial_basis(3, {2, 2});
    EPoly p = var(3, 0) * var(3, 2) * EPoly::constant(3, 2) - var(3, 1) * var(3, 1);
    auto v = coefficient_vector(p, basis);
    REQUIRE(v.size() == 2);
    CHECK(v[0] == -1);
    CHECK(v[1] == 2);

    auto z = coefficient_vector(EPoly(3), basis);
    CHECK(z == std::vector<Rat>{Rat(0), Rat(0)});

    auto u = coefficient_vector(var(3, 1) * var(3, 1), basis);
    CHECK(u == std::vector<Rat>{Rat(1), Rat(0)});
}

TEST_CASE("component dimensions match Gaussian binomial coefficients") {
    // dim of bidegree (k,s) of C[e_0..e_{m-1}] = #partitions of s into at
    // most k parts each at most m-1 = [q^s] qbinomial(k+m-1, k).
    for (int m = 2; m <= 4; ++m)
        for (long long k = 0; k <= 3; ++k) {
            QPoly gb = qbinomial((int)(k + m - 1), (int)k);
            for (long long s = 0; s <= k * (m - 1); ++s)
                CHECK((long long)monomial_basis(m, {k, s}).size() == gb.coeff(s));
        }
}

TEST_CASE("widening preserves terms") {
    EPoly p = var(2, 0) * var(2, 1);
    EPoly w = widen(p, 4);
    CHECK(w.nvars() == 4);
    CHECK(bidegree(w) == Bidegree{2, 1});
    CHECK(coefficient_vector(w, monomial_basis(4, {2, 1}))[0] == 1);
}

TEST_CASE("ring axioms on fixed small polynomials") {
    EPoly a = var(3, 0) + var(3, 2) * EPoly::constant(3, 3);
    EPoly b = var(3, 1) - EPoly::constant(3, 5);
    EPoly c = var(3, 0) * var(3, 1) + EPoly::constant(3, 1);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
}
