#include <doctest.h>
#include <qfusion/matrix.hpp>

using namespace qfusion;

namespace {

Matrix from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols) {
    Matrix m(0, cols);
    for (const auto& r : rows) {
        std::vector<Rat> row;
        for (long v : r) row.push_back(Rat(v));
        m.append_row(row);
    }
    return m;
}

}  // namespace

TEST_CASE("rref ranks and pivots") {
    auto r1 = rref(from_rows({{1, 2}, {2, 4}}, 2));
    CHECK(r1.rank == 1);
    REQUIRE(r1.pivot_cols.size() == 1);
    CHECK(r1.pivot_cols[0] == 0);

    auto r0 = rref(from_rows({{0}}, 1));
    CHECK(r0.rank == 0);

    Matrix id = Matrix::identity(2);
    auto ri = rref(id);
    CHECK(ri.rank == 2);
    CHECK(ri.m == id);
}

TEST_CASE("rref is idempotent") {
    Matrix m = from_rows({{2, 4, 1}, {1, 2, 3}, {3, 6, 4}}, 3);
    auto r = rref(m);
    auto rr = rref(r.m);
    CHECK(r.m == rr.m);
    CHECK(r.rank == rr.rank);
}

TEST_CASE("kernel bases") {
    Matrix a = from_rows({{1, 1}}, 2);
    Matrix ka = kernel_basis(a);
    REQUIRE(ka.rows() == 1);
    CHECK(ka(0, 0) == -ka(0, 1));
    CHECK(ka(0, 0) != 0);

    CHECK(kernel_basis(Matrix::identity(3)).rows() == 0);

    Matrix b = from_rows({{1, 2, 3}}, 3);
    Matrix kb = kernel_basis(b);
    REQUIRE(kb.rows() == 2);
    for (std::size_t i = 0; i < kb.rows(); ++i) {
        Rat dot = 0;
        for (std::size_t j = 0; j < 3; ++j) dot += b(0, j) * kb(i, j);
        CHECK(dot == 0);
    }
}

TEST_CASE("rank plus kernel dimension equals column count") {
    Matrix m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 0, 1}}, 4);
    CHECK(rank_of(m) + kernel_basis(m).rows() == 4);
}

TEST_CASE("subspace intersection") {
    Matrix id = Matrix::identity(2);
    CHECK(rank_of(subspace_intersection(id, id)) == 2);

    Matrix ex = from_rows({{1, 0}}, 2);
    Matrix ey = from_rows({{0, 1}}, 2);
    CHECK(subspace_intersection(ex, ey).rows() == 0);

    Matrix diag = from_rows({{1, 1}}, 2);
    Matrix inter = subspace_intersection(id, diag);
    REQUIRE(rank_of(inter) == 1);
    CHECK(inter(0, 0) == inter(0, 1));
}

TEST_CASE("span membership agrees with rank comparison") {
    Matrix m = from_rows({{1, 0, 1}, {0, 1, 1}}, 3);
    auto red = rref(m);
    CHECK(row_span_contains(red, {Rat(2), Rat(3), Rat(5)}));
    CHECK_FALSE(row_span_contains(red, {Rat(0), Rat(0), Rat(1)}));
    CHECK(same_row_span(m, red.m));
}

TEST_CASE("incremental echelon rejects dependent rows") {
    IncrementalEchelon ech(2);
    CHECK(ech.add({Rat(1), Rat(2)}));
    CHECK_FALSE(ech.add({Rat(2), Rat(4)}));
    CHECK(ech.add({Rat(0), Rat(1)}));
    CHECK(ech.rank() == 2);
}
