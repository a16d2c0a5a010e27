#include <doctest.h>
#include <qfusion/qchar.hpp>

using namespace qfusion;

namespace {

QPoly qmon(long long s, long long c = 1) {
    QPoly p;
    p.add(s, c);
    return p;
}

}  // namespace

TEST_CASE("q-factorials") {
    CHECK(qfactorial(0) == QPoly::one());
    CHECK(qfactorial(1) == qmon(0) + qmon(1, -1));
    QPoly f3 = (qmon(0) + qmon(1, -1)) * (qmon(0) + qmon(2, -1)) * (qmon(0) + qmon(3, -1));
    CHECK(qfactorial(3) == f3);
}

TEST_CASE("Gaussian binomials") {
    CHECK(qbinomial(2, 1) == qmon(0) + qmon(1));
    CHECK(qbinomial(4, 2) == qmon(0) + qmon(1) + qmon(2, 2) + qmon(3) + qmon(4));
    CHECK(qbinomial(5, 0) == QPoly::one());
    CHECK(qbinomial(2, 3) == QPoly{});
}

TEST_CASE("q-binomial laws") {
    for (int m = 1; m <= 8; ++m)
        for (int k = 0; k <= m; ++k) {
            QPoly b = qbinomial(m, k);
            CHECK(b == qbinomial(m, m - k));
            QPoly left = k > 0 ? qbinomial(m - 1, k - 1) : QPoly{};
            CHECK(b == qmon(k) * qbinomial(m - 1, k) + left);
            CHECK(b == qbinomial(m - 1, k) + qmon(m - k) * left);
            CHECK(b * qfactorial(k) * qfactorial(m - k) == qfactorial(m));
        }
}

TEST_CASE("character recurrence base tables") {
    CharTable t2 = char_recurrence({2});
    CHECK(t2.total() == 2);
    CHECK(t2.at(0, 0) == 1);
    CHECK(t2.at(1, 0) == 1);

    CharTable t12 = char_recurrence({1, 2});
    CHECK(t12.total() == 2);
    CHECK(t12.at(0, 0) == 1);
    CHECK(t12.at(1, 1) == 1);

    CharTable t22 = char_recurrence({2, 2});
    CHECK(t22.total() == 4);
    CHECK(t22.at(0, 0) == 1);
    CHECK(t22.at(1, 0) == 1);
    CHECK(t22.at(1, 1) == 1);
    CHECK(t22.at(2, 2) == 1);
    CHECK(t22.e.size() == 4);
}

TEST_CASE("recurrence mass equals the product of parts") {
    CHECK(char_recurrence({2, 3}).total() == 6);
    CHECK(char_recurrence({2, 2, 3}).total() == 12);
    CHECK(char_recurrence({1, 1, 4}).total() == 4);
}

TEST_CASE("closed form matches the recurrence after reindexing") {
    CHECK(char_closed_form(profile({1, 1, 1})) == char_recurrence({1, 1, 1}));
    CHECK(char_closed_form(profile({1, 2})) == char_recurrence({1, 2}));
    CHECK(char_closed_form(profile({2, 2})) == char_recurrence({2, 2}));
    CHECK(char_closed_form(profile({2, 3, 3})) == char_recurrence({2, 3, 3}));
}

TEST_CASE("level truncation agrees with long equal-part products") {
    // On a window small enough that extra factors no longer contribute, the
    // infinite-product series equals the finite character.
    CharTable g = gordon_truncated(2, 3, 9);
    CHECK(g.at(0, 0) == 1);
    CharTable w =
        char_recurrence({2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}).window(3, 9);
    CHECK(g == w);
}

TEST_CASE("table window and tsv are canonical") {
    CharTable t = char_recurrence({2, 2});
    CHECK(t.max_z() == 2);
    CHECK(t.window(1, 0).total() == 2);
    CHECK(t.to_tsv() == "k\ts\tdim\n0\t0\t1\n1\t0\t1\n1\t1\t1\n2\t2\t1\n");
}
