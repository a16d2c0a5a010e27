#include <doctest.h>
#include <qfusion/ideals.hpp>
#include <qfusion/matrix.hpp>
#include <qfusion/qchar.hpp>

#include <algorithm>
#include <stdexcept>

using namespace qfusion;

namespace {

EPoly var(int m, int i) { return EPoly::variable(m, i); }

bool has_gen(const IdealSpec& spec, const EPoly& g) {
    return std::find(spec.gens.begin(), spec.gens.end(), g) != spec.gens.end();
}

// Same span of the zdeg-k component, compared through trimmed echelon forms.
bool zlayer_equal(const IdealSpec& a, const IdealSpec& b, long long k) {
    ZLayer la = ideal_zlayer(a, k);
    ZLayer lb = ideal_zlayer(b, k);
    if (la.red.rank != lb.red.rank) return false;
    for (int r = 0; r < (int)la.red.rank; ++r)
        for (std::size_t c = 0; c < la.red.m.cols(); ++c)
            if (la.red.m(r, c) != lb.red.m(r, c)) return false;
    return true;
}

}  // namespace

TEST_CASE("current ideals from explicit points") {
    IdealSpec j11 = gens_JA_T({1, 1}, {Rat(0), Rat(1)});
    CHECK(j11.gens.size() == 2);
    CHECK(has_gen(j11, var(2, 0)));
    CHECK(has_gen(j11, var(2, 0) + var(2, 1)));

    IdealSpec j2 = gens_JA_T({2}, {Rat(0)});
    REQUIRE(j2.gens.size() == 1);
    CHECK(j2.gens[0] == var(1, 0) * var(1, 0));

    IdealSpec j22 = gens_JA_T({2, 2}, {Rat(1), Rat(-1)});
    EPoly p = var(2, 0) + var(2, 1);
    EPoly m = var(2, 0) - var(2, 1);
    CHECK(j22.gens.size() == 2);
    CHECK(has_gen(j22, p * p));
    CHECK(has_gen(j22, m * m));
}

TEST_CASE("limit ideal generators") {
    IdealSpec g1 = gens_JA_limit({1});
    REQUIRE(g1.gens.size() == 1);
    CHECK(g1.gens[0] == var(1, 0));

    IdealSpec g12 = gens_JA_limit({1, 2});
    CHECK(has_gen(g12, var(2, 0)));
    CHECK(has_gen(g12, var(2, 0) * var(2, 0)));
    CHECK(has_gen(g12, var(2, 0) * var(2, 1) * EPoly::constant(2, 2)));
    CHECK(has_gen(g12, var(2, 1) * var(2, 1)));

    IdealSpec g22 = gens_JA_limit({2, 2});
    CHECK(has_gen(g22, var(2, 0) * var(2, 0)));
    CHECK(has_gen(g22, var(2, 0) * var(2, 1) * EPoly::constant(2, 2)));
    for (const EPoly& g : g22.gens) CHECK(bidegree(g).z >= 2);
}

TEST_CASE("limit ideal components and quotient character") {
    GradedBasis c = ideal_component(gens_JA_limit({1, 2}), {1, 0});
    CHECK(c.reduced.rows() == 1);

    IdealSpec g22 = gens_JA_limit({2, 2});
    for (long long s = 0; s <= 3; ++s)
        CHECK(ideal_component(g22, {1, s}).reduced.rows() == 0);
    CHECK(ideal_component(g22, {0, 0}).reduced.rows() == 0);

    CharTable q = quotient_char(g22, 3);
    CHECK(q == char_recurrence({2, 2}));

    CHECK(quotient_char(gens_JA_limit({2, 2, 2}), 4).total() == 8);
    CHECK(quotient_char(gens_JA_limit({3, 3}), 5).total() == 9);
}

TEST_CASE("windowed limit ideal agrees below the cap") {
    std::vector<int> A{2, 3};
    CharTable full = quotient_char(gens_JA_limit(A), 4);
    CharTable win = quotient_char(gens_JA_limit_window(A, 2), 4, 2);
    CHECK(win == full.window(4, 2));
}

TEST_CASE("evaluation kernels at distinct points") {
    CHECK(quotient_zdims(gens_IZ({1, 1}, {Rat(0), Rat(1)}), 1) ==
          std::vector<long long>{1, 0});

    std::vector<long long> d22 = quotient_zdims(gens_IZ({2, 2}, {Rat(1), Rat(-1)}), 3);
    long long total = 0;
    for (long long d : d22) total += d;
    CHECK(total == 4);

    CHECK(quotient_zdims(gens_IZ({1, 2}, {Rat(0), Rat(1)}), 2) ==
          std::vector<long long>{1, 1, 0});
}

TEST_CASE("level window generators") {
    IdealSpec w = gens_Jk_window(2, 3, 2);
    CHECK(w.gens.size() == 3);
    CHECK(has_gen(w, var(3, 0) * var(3, 0)));
    CHECK(has_gen(w, var(3, 0) * var(3, 1) * EPoly::constant(3, 2)));
    CHECK(has_gen(w, var(3, 1) * var(3, 1) +
                         var(3, 0) * var(3, 2) * EPoly::constant(3, 2)));

    IdealSpec w3 = gens_Jk_window(3, 2, 0);
    REQUIRE(w3.gens.size() == 1);
    CHECK(w3.gens[0] == var(2, 0) * var(2, 0) * var(2, 0));

    CHECK(quotient_zdims(gens_Jk_window(1, 4, 3), 2) ==
          std::vector<long long>{1, 0, 0});
}

TEST_CASE("variable reversal is an involution with mirrored characters") {
    IdealSpec g = gens_JA_limit({1, 2});
    IdealSpec o = opp(g);
    CHECK(has_gen(o, var(2, 1)));
    IdealSpec oo = opp(o);
    for (const EPoly& gen : g.gens) CHECK(has_gen(oo, gen));

    CharTable direct = quotient_char(gens_JA_limit({2, 3}), 3);
    CharTable mirrored = quotient_char(build_I0({2, 3}), 3);
    CharTable expect;
    for (const auto& [ks, v] : direct.e)
        expect.add(ks.first, ks.first * 1 - ks.second, v);
    CHECK(mirrored == expect);
}

TEST_CASE("zero-point ideal realizes the mirrored limit") {
    IdealSpec i0 = build_I0({1, 2});
    CHECK(has_gen(i0, var(2, 1)));
    CHECK(has_gen(i0, var(2, 1) * var(2, 1)));
    CHECK(has_gen(i0, var(2, 0) * var(2, 1) * EPoly::constant(2, 2)));
    CHECK(has_gen(i0, var(2, 0) * var(2, 0)));
    CHECK(quotient_zdims(i0, 1) == std::vector<long long>{1, 1});

    CharTable c = quotient_char(build_I0({2, 2}), 2);
    CHECK(c.total() == 4);
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(1, 0) == 1);
    CHECK(c.at(1, 1) == 1);
    CHECK(c.at(2, 0) == 1);
}

TEST_CASE("shift transport") {
    IdealSpec i0 = build_I0({2, 2});
    IdealSpec same = shift_ideal(i0, Rat(0));
    CHECK(same.gens == i0.gens);

    IdealSpec there = shift_ideal(i0, Rat(-2));
    IdealSpec back = shift_ideal(there, Rat(2));
    CHECK(back.gens == i0.gens);

    for (const Rat& c : {Rat(1), Rat(-2), make_rat(1, 3)}) {
        std::vector<long long> zd = quotient_zdims(shift_ideal(i0, c), 2);
        long long total = 0;
        for (long long d : zd) total += d;
        CHECK(total == 4);
    }
}

TEST_CASE("point-grouped ideals match both degenerate descriptions") {
    std::vector<int> A{1, 2};
    IdealSpec distinct = ideal_at_point(A, {Rat(0), Rat(1)});
    IdealSpec kernel = gens_IZ(A, {Rat(0), Rat(1)});
    for (long long k = 1; k <= 2; ++k) CHECK(zlayer_equal(distinct, kernel, k));

    IdealSpec together = ideal_at_point(A, {Rat(3), Rat(3)});
    IdealSpec shifted = shift_ideal(build_I0(A), Rat(3));
    for (long long k = 1; k <= 2; ++k) CHECK(zlayer_equal(together, shifted, k));

    std::vector<long long> zd = quotient_zdims(ideal_at_point({2, 2}, {Rat(5), Rat(5)}), 3);
    long long total = 0;
    for (long long d : zd) total += d;
    CHECK(total == 4);
}

TEST_CASE("associated graded of the kernel matches the zero-point ideal") {
    std::vector<int> A{2, 2};
    IdealSpec iz = gens_IZ(A, {Rat(1), Rat(-1)});
    IdealSpec i0 = build_I0(A);
    for (long long k = 1; k <= 2; ++k) {
        auto layers = up_ideal_layer(iz, k);
        long long covered = 0;
        for (const auto& gb : layers) {
            GradedBasis want = ideal_component(i0, gb.d);
            CHECK(gb.reduced.rows() == want.reduced.rows());
            if (gb.reduced.rows() > 0)
                CHECK(same_row_span(gb.reduced, want.reduced));
            covered += gb.reduced.rows();
        }
        CHECK(covered == (long long)ideal_zlayer(i0, k).red.rank);
    }
}

TEST_CASE("loop scaling moves the points") {
    std::vector<int> A{1, 2};
    IdealSpec iz = gens_IZ(A, {Rat(2), Rat(4)});
    for (const Rat& t : {Rat(2), make_rat(1, 3)}) {
        IdealSpec flowed = st_flow(iz, t);
        IdealSpec target = gens_IZ(A, {Rat(2) / t, Rat(4) / t});
        for (long long k = 1; k <= 2; ++k) CHECK(zlayer_equal(flowed, target, k));
    }
}

TEST_CASE("partial fraction sums") {
    CHECK(rho_check({Rat(1), Rat(2)}, 0) == Rat(0));
    CHECK(rho_check({Rat(1), Rat(2)}, 1) == Rat(1));
    CHECK(rho_check({Rat(1), Rat(2), Rat(5)}, 3) == Rat(8));
    CHECK_THROWS_AS(rho_check({Rat(1), Rat(1)}, 0), std::invalid_argument);
}

TEST_CASE("generator dumps are canonical") {
    auto lines = ideal_dump(gens_JA_limit({1, 2}));
    REQUIRE(lines.size() == 8);
    CHECK(lines[0] == "1*e0");
    CHECK(lines[2] == "2*e0*e1");
}
