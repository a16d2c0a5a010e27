#include <doctest.h>
#include <qfusion/dualmodel.hpp>
#include <qfusion/qchar.hpp>

using namespace qfusion;

TEST_CASE("box partition counts match component dimensions") {
    for (int k = 0; k <= 3; ++k)
        for (int b = 1; b <= 3; ++b) {
            QPoly gb = qbinomial(k + b, k);
            for (long long s = 0; s <= (long long)k * b + 1; ++s)
                CHECK((long long)box_partitions(k, b, s).size() == gb.coeff(s));
        }
}

TEST_CASE("merges of symmetric polynomials") {
    MultiPoly f = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1);
    MultiPoly m2 = merge_expand(f, 2);
    CHECK(m2 == MultiPoly::variable(1, 0) * MultiPoly::constant(1, 2));

    MultiPoly g = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
    CHECK(merge_expand(g, 2) == MultiPoly::variable(1, 0) * MultiPoly::variable(1, 0));

    MultiPoly m1 = merge_expand(msym({1, 0}, 2), 1);
    CHECK(m1 == MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1));
}

TEST_CASE("limit constraint dimensions") {
    CHECK(dual_dimension_limit({1, 1}, 1, 0) == 0);
    CHECK(dual_dimension_limit({1, 1}, 1, 1) == 0);
    CHECK(dual_dimension_limit({2, 2}, 1, 0) == 1);
    CHECK(dual_dimension_limit({2, 2}, 1, 1) == 1);
    CHECK(dual_dimension_limit({2, 2}, 1, 2) == 0);
    CHECK(dual_dimension_limit({2, 3}, 0, 0) == 1);
}

TEST_CASE("point constraint dimensions") {
    CHECK(dual_dimension_at_T({1, 1}, {Rat(0), Rat(1)}, 1) == 0);
    long long total = 0;
    for (int k = 0; k <= 2; ++k) total += dual_dimension_at_T({2, 2}, {Rat(0), Rat(1)}, k);
    CHECK(total == 4);
}

TEST_CASE("graded dimensions degenerate to the point form") {
    std::vector<int> A{2, 2};
    std::vector<Rat> T{Rat(0), Rat(1)};
    for (int k = 0; k <= 2; ++k) {
        long long graded = 0;
        for (long long s = 0; s <= (long long)k * ((long long)A.size() - 1); ++s)
            graded += dual_dimension_limit(A, k, s);
        CHECK(graded == dual_dimension_at_T(A, T, k));
    }
}

TEST_CASE("dual table equals the recurrence") {
    CHECK(dual_char({2, 2}, 2) == char_recurrence({2, 2}));
    CHECK(dual_char({1, 2}, 1) == char_recurrence({1, 2}));
    CHECK(dual_char({2, 3}, 3) == char_recurrence({2, 3}));
}
