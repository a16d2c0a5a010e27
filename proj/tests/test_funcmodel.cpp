#include <doctest.h>
#include <qfusion/funcmodel.hpp>
#include <qfusion/ideals.hpp>
#include <qfusion/qchar.hpp>

#include <stdexcept>

using namespace qfusion;

namespace {

Matrix mul(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            for (std::size_t t = 0; t < b.rows(); ++t) c(i, j) += a(i, t) * b(t, j);
    return c;
}

Matrix sub(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

Matrix scale(const Matrix& a, long s) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * Rat(s);
    return c;
}

Matrix form_matrix(int a) {
    auto beta = invariant_form(a);
    Matrix B((std::size_t)a, (std::size_t)a);
    for (int r = 0; r < a; ++r) B(r, a - 1 - r) = beta[r];
    return B;
}

}  // namespace

TEST_CASE("weight basis action satisfies the bracket relations") {
    for (int a = 2; a <= 4; ++a) {
        Matrix e = sl2_e(a), f = sl2_f(a), h = sl2_h(a);
        CHECK(sub(mul(e, f), mul(f, e)) == h);
        CHECK(sub(mul(h, e), mul(e, h)) == scale(e, 2));
        CHECK(sub(mul(h, f), mul(f, h)) == scale(f, -2));
    }
    Matrix e2 = sl2_e(2);
    CHECK(e2(0, 1) == 1);
    CHECK(e2(0, 0) == 0);
    Matrix h2 = sl2_h(2);
    CHECK(h2(0, 0) == 1);
    CHECK(h2(1, 1) == -1);
}

TEST_CASE("bilinear form is invariant") {
    for (int a = 2; a <= 4; ++a) {
        Matrix B = form_matrix(a);
        for (const Matrix& X : {sl2_e(a), sl2_f(a), sl2_h(a)}) {
            Matrix lhs = mul(X.transposed(), B);
            Matrix rhs = scale(mul(B, X), -1);
            CHECK(lhs == rhs);
        }
    }
    auto beta = invariant_form(2);
    CHECK(beta[0] == 1);
    CHECK(beta[1] == -1);
}

TEST_CASE("pair decomposition into irreducible summands") {
    PairFiltration p22 = pair_filtration(2, 2);
    REQUIRE(p22.summands.size() == 2);
    CHECK(p22.summands[0].rows() == 3);
    CHECK(p22.summands[1].rows() == 1);
    // The 1-dim summand is u_0 v_1 - u_1 v_0 up to scale.
    const Matrix& s = p22.summands[1];
    CHECK(s(0, 0) == 0);
    CHECK(s(0, 3) == 0);
    CHECK(s(0, 1) == -s(0, 2));
    CHECK(s(0, 1) != 0);

    PairFiltration p23 = pair_filtration(2, 3);
    REQUIRE(p23.summands.size() == 2);
    CHECK(p23.summands[0].rows() == 4);
    CHECK(p23.summands[1].rows() == 2);
}

TEST_CASE("condition-cut layers") {
    TruncatedFc fc = fc_truncated({2, 2}, 3);
    REQUIRE(fc.layers.size() == 4);
    CHECK(fc.layers[0].dim == 3);
    CHECK(fc.layers[1].dim == 7);
}

TEST_CASE("graded quotient at the origin matches the zero-point ideal") {
    MtReport rep = mt_character({2, 2}, {Rat(0), Rat(0)}, 6);
    CHECK(rep.certified);
    CHECK(rep.total == 4);
    CHECK(rep.table == quotient_char(build_I0({2, 2}), 2));
}

TEST_CASE("graded quotient totals away from the origin") {
    MtReport d = mt_character({2, 2}, {Rat(1), Rat(-1)}, 6);
    CHECK(d.certified);
    CHECK(d.total == 4);

    MtReport c = mt_character({1, 2}, {Rat(1), Rat(1)}, 5);
    CHECK(c.certified);
    CHECK(c.total == 2);
}

TEST_CASE("degree cap and coincidence guards") {
    CHECK_THROWS_AS((void)mt_character({2, 2}, {Rat(0), Rat(0)}, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)mt_character({1, 1, 1}, {Rat(1), Rat(1), Rat(1)}, 9),
                    std::invalid_argument);
}

TEST_CASE("pairing between the two filtrations is nondegenerate") {
    CHECK(pairing_gram_rank({2, 2}, {Rat(1), Rat(-1)}, 4) == 4);
    CHECK(pairing_gram_rank({1, 2}, {Rat(1), Rat(-1)}, 3) == 2);
}
