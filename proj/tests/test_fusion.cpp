#include <doctest.h>
#include <qfusion/fusion.hpp>
#include <qfusion/ideals.hpp>
#include <qfusion/qchar.hpp>

#include <stdexcept>

using namespace qfusion;

TEST_CASE("evaluation operators act by weighted sums") {
    auto ops = evaluation_operators({2}, {Rat(5)});
    REQUIRE(ops.size() == 1);
    REQUIRE(ops[0].rows() == 2);
    // 1 -> y_1, y_1 -> 0 on the basis {1, y_1}.
    CHECK(ops[0](1, 0) == 1);
    CHECK(ops[0](0, 0) == 0);
    CHECK(ops[0](0, 1) == 0);
    CHECK(ops[0](1, 1) == 0);

    auto triv = evaluation_operators({1, 1}, {Rat(0), Rat(1)});
    for (const Matrix& m : triv)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) CHECK(m(i, j) == 0);
}

TEST_CASE("evaluation operators commute") {
    auto ops = evaluation_operators({2, 3}, {Rat(1), Rat(-2)});
    REQUIRE(ops.size() == 2);
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i + 1; j < ops.size(); ++j) {
            Matrix ab(ops[i].rows(), ops[j].cols());
            Matrix ba(ops[i].rows(), ops[j].cols());
            for (std::size_t r = 0; r < ab.rows(); ++r)
                for (std::size_t c = 0; c < ab.cols(); ++c)
                    for (std::size_t t = 0; t < ops[j].rows(); ++t) {
                        ab(r, c) += ops[i](r, t) * ops[j](t, c);
                        ba(r, c) += ops[j](r, t) * ops[i](t, c);
                    }
            CHECK(ab == ba);
        }
}

TEST_CASE("filtration characters") {
    CharTable one = fusion_character({2}, {Rat(7)});
    CHECK(one.total() == 2);
    CHECK(one.at(0, 0) == 1);
    CHECK(one.at(1, 0) == 1);

    CHECK(fusion_character({2, 2}, {Rat(1), Rat(-1)}) ==
          quotient_char(build_I0({2, 2}), 2));

    CharTable ones = fusion_character({1, 1, 1}, {Rat(0), Rat(1), Rat(2)});
    CHECK(ones.total() == 1);
    CHECK(ones.at(0, 0) == 1);

    CHECK_THROWS_AS((void)fusion_character({2, 2}, {Rat(1), Rat(1)}),
                    std::invalid_argument);
}

TEST_CASE("filtration verdicts") {
    CHECK(verify_filtration({2, 2}, {Rat(1), Rat(-1)}).ok);
    CHECK(verify_filtration({1, 2}, {Rat(0), Rat(1)}).ok);
    FiltrationReport rep = verify_filtration({3, 2, 2}, {Rat(1), Rat(2), Rat(3)});
    CHECK(rep.ok);
    CHECK(rep.char_match);
    CHECK(rep.annihilator_match);
    CHECK(rep.table.total() == 12);
}

TEST_CASE("filtration characters do not depend on the points") {
    std::vector<int> A{2, 3};
    CharTable a = fusion_character(A, {Rat(1), Rat(2)});
    CharTable b = fusion_character(A, {Rat(-4), make_rat(1, 2)});
    CharTable c = fusion_character(A, {Rat(0), Rat(9)});
    CHECK(a == b);
    CHECK(a == c);
}
