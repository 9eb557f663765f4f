#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

TEST_CASE("congruence_solution_count matches direct checks") {
    CHECK(congruence_solution_count(2, 4, 6) == 2);  // z in {2, 5}
    CHECK(congruence_solution_count(2, 3, 6) == 0);  // gcd(2,6) = 2 does not divide 3
    CHECK(congruence_solution_count(1, 7, 9) == 1);  // unique inverse
    CHECK(congruence_solutions(2, 4, 6) == std::vector<int64_t>{2, 5});
    CHECK(congruence_solutions(2, 3, 6).empty());
    CHECK_THROWS_AS(congruence_solution_count(2, 4, 0), std::domain_error);

    SplitMix64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        int64_t n = 1 + static_cast<int64_t>(rng.below(60));
        int64_t c = 1 + static_cast<int64_t>(rng.below(40));
        int64_t s = static_cast<int64_t>(rng.below(200));
        std::vector<int64_t> direct;
        for (int64_t z = 0; z < n; ++z)
            if ((c * z - s) % n == 0) direct.push_back(z);
        CHECK(congruence_solution_count(c, s, n) == static_cast<int64_t>(direct.size()));
        CHECK(congruence_solutions(c, s, n) == direct);
    }
}

TEST_CASE("enumerate_solutions: frozen examples") {
    CHECK(enumerate_solutions(LinearEquation(1, 1, 2), GroundSet(GroundKind::Interval, 10))
              .size() == 50);
    CHECK(enumerate_solutions(LinearEquation(1, 1, 2), GroundSet(GroundKind::Cyclic, 5)).size() ==
          25);
    std::vector<Triple> expected{{1, 2, 1}, {2, 1, 1}, {3, 3, 2}};
    CHECK(enumerate_solutions(LinearEquation(1, 1, 3), GroundSet(GroundKind::Interval, 3)) ==
          expected);
}

TEST_CASE("enumerate_solutions agrees with brute force and is ordered") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        int64_t n = 1 + static_cast<int64_t>(rng.below(24));
        LinearEquation eq(1 + static_cast<int64_t>(rng.below(5)),
                          1 + static_cast<int64_t>(rng.below(5)),
                          1 + static_cast<int64_t>(rng.below(5)));
        GroundSet ground(trial % 2 ? GroundKind::Cyclic : GroundKind::Interval, n);
        std::vector<Triple> got = enumerate_solutions(eq, ground);
        CHECK(std::is_sorted(got.begin(), got.end()));
        std::vector<Triple> expected = oracle::solutions(eq.a(), eq.b(), eq.c(), ground);
        std::sort(expected.begin(), expected.end());
        REQUIRE(got == expected);
        CHECK(count_total_solutions(eq, ground) == static_cast<int64_t>(expected.size()));
    }
}

TEST_CASE("count_by_class: frozen classification counts") {
    CountResult interval9 = count_by_class(LinearEquation(1, 1, 2), mod3_interval(9));
    CHECK(interval9.summary.total == 41);
    CHECK(interval9.summary.rainbow == 26);
    CHECK(interval9.summary.mono == 15);
    CHECK(interval9.summary.dichromatic == 0);

    CountResult cyclic9 = count_by_class(LinearEquation(1, 1, 2), mod3_cyclic(9));
    CHECK(cyclic9.summary.total == 81);
    CHECK(cyclic9.summary.rainbow == 54);
    CHECK(cyclic9.summary.rb() == Rational(2, 3));

    CountResult schur25 = count_by_class(LinearEquation(1, 1, 1), mod5_schur_cyclic(25));
    CHECK(schur25.summary.total == 625);
    CHECK(schur25.summary.mono == 25);
    CHECK(schur25.summary.mono_prop() == Rational(1, 25));
}

TEST_CASE("count_by_class matches the brute-force oracle on random colorings") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
        int64_t n = 3 + static_cast<int64_t>(rng.below(20));
        GroundSet ground(trial % 2 ? GroundKind::Cyclic : GroundKind::Interval, n);
        Coloring f = random_surjective_coloring(ground, rng.next());
        LinearEquation eq(1 + static_cast<int64_t>(rng.below(3)),
                          1 + static_cast<int64_t>(rng.below(3)),
                          1 + static_cast<int64_t>(rng.below(3)));
        CountResult got = count_by_class(eq, f);
        REQUIRE(got.matrix == oracle::classes(eq.a(), eq.b(), eq.c(), f));
        CHECK(got.summary.total ==
              got.summary.rainbow + got.summary.mono + got.summary.dichromatic);
    }
}

TEST_CASE("count_fast is bit-identical to count_by_class") {
    SplitMix64 rng(41);
    for (int64_t n = 3; n <= 64; ++n) {
        for (int rep = 0; rep < 3; ++rep) {
            GroundSet ground(rep % 2 ? GroundKind::Interval : GroundKind::Cyclic, n);
            Coloring f = random_surjective_coloring(ground, rng.next());
            LinearEquation eq(1, 1, 1 + static_cast<int64_t>(rng.below(4)));
            CountResult fast = count_fast(eq, f);
            CountResult slow = count_by_class(eq, f);
            REQUIRE(fast.matrix == slow.matrix);
            REQUIRE(fast.summary == slow.summary);
        }
    }
}

TEST_CASE("count_fast spot check at n = 512") {
    SplitMix64 rng(47);
    GroundSet ground(GroundKind::Cyclic, 512);
    LinearEquation eq(1, 1, 2);
    for (int rep = 0; rep < 3; ++rep) {
        Coloring f = random_surjective_coloring(ground, rng.next());
        REQUIRE(count_fast(eq, f).matrix == count_by_class(eq, f).matrix);
    }
}

TEST_CASE("count_fast: dominant-color coloring and unsupported coefficients") {
    // All color 1 except one element each of colors 2 and 3.
    std::vector<uint8_t> colors(12, 1);
    colors[5] = 2;
    colors[9] = 3;
    Coloring f(GroundSet(GroundKind::Cyclic, 12), colors);
    LinearEquation eq(1, 1, 1);
    CHECK(count_fast(eq, f).summary.rainbow == oracle::rainbow_count(1, 1, 1, f));

    CHECK_THROWS_AS(count_fast(LinearEquation(2, 1, 2), f), UnsupportedEquationError);
    CHECK_THROWS_AS(count_fast(LinearEquation(1, 3, 2), f), UnsupportedEquationError);
}

TEST_CASE("total_count_formula: cyclic exact, interval leading term") {
    TotalPrediction cyc = total_count_formula(LinearEquation(1, 1, 1),
                                              GroundSet(GroundKind::Cyclic, 7));
    CHECK(cyc.exact);
    CHECK(cyc.predicted == Rational(49));
    CHECK(count_total_solutions(LinearEquation(1, 1, 1), GroundSet(GroundKind::Cyclic, 7)) == 49);

    TotalPrediction cyc2 = total_count_formula(LinearEquation(2, 3, 5),
                                               GroundSet(GroundKind::Cyclic, 10));
    CHECK(cyc2.predicted == Rational(100));
    CHECK(count_total_solutions(LinearEquation(2, 3, 5), GroundSet(GroundKind::Cyclic, 10)) ==
          100);

    TotalPrediction i10 = total_count_formula(LinearEquation(1, 1, 2),
                                              GroundSet(GroundKind::Interval, 10));
    CHECK_FALSE(i10.exact);
    CHECK(i10.predicted == Rational(50));
    CHECK(count_total_solutions(LinearEquation(1, 1, 2), GroundSet(GroundKind::Interval, 10)) ==
          50);

    CHECK_THROWS_AS(
        total_count_formula(LinearEquation(1, 1, 1), GroundSet(GroundKind::Interval, 10)),
        UnsupportedEquationError);
    CHECK_THROWS_AS(
        total_count_formula(LinearEquation(2, 1, 2), GroundSet(GroundKind::Interval, 10)),
        UnsupportedEquationError);
}

TEST_CASE("density_profile: construction profiles") {
    CHECK(density_profile(mod3_cyclic(9)).counts == std::array<int64_t, 3>{3, 3, 3});
    CHECK(density_profile(mod5_schur_cyclic(25)).counts == std::array<int64_t, 3>{5, 10, 10});
    CHECK(density_profile(mod3_interval(10)).counts == std::array<int64_t, 3>{4, 3, 3});
}

TEST_CASE("exact_convolution: golden value and NTT/direct agreement") {
    std::vector<int64_t> a{1, 2}, b{3, 4};
    CHECK(exact_convolution(a, b) == std::vector<int64_t>{3, 10, 8});

    // Force the NTT path (300*300 > direct threshold) and compare with a
    // quadratic reference computed here.
    SplitMix64 rng(53);
    std::vector<int64_t> big_a(300), big_b(300);
    for (auto& v : big_a) v = static_cast<int64_t>(rng.below(2));
    for (auto& v : big_b) v = static_cast<int64_t>(rng.below(2));
    std::vector<int64_t> expected(big_a.size() + big_b.size() - 1, 0);
    for (size_t i = 0; i < big_a.size(); ++i)
        for (size_t j = 0; j < big_b.size(); ++j) expected[i + j] += big_a[i] * big_b[j];
    CHECK(exact_convolution(big_a, big_b) == expected);

    std::vector<int64_t> neg{-1};
    CHECK_THROWS_AS(exact_convolution(neg, b), std::domain_error);
}

TEST_CASE("recolor_delta equals a full recount difference") {
    SplitMix64 rng(61);
    const LinearEquation eqs[] = {LinearEquation(1, 1, 2), LinearEquation(1, 1, 1),
                                  LinearEquation(2, 3, 5)};
    for (int trial = 0; trial < 60; ++trial) {
        int64_t n = 3 + static_cast<int64_t>(rng.below(16));
        GroundSet ground(trial % 2 ? GroundKind::Cyclic : GroundKind::Interval, n);
        Coloring f = random_surjective_coloring(ground, rng.next());
        const LinearEquation& eq = eqs[trial % 3];
        std::vector<uint8_t> colors = f.colors();
        int64_t index = static_cast<int64_t>(rng.below(static_cast<uint64_t>(n)));
        int new_color = 1 + static_cast<int>(rng.below(3));

        ClassCountMatrix before = count_classes(eq, ground, colors);
        ClassDelta d = recolor_delta(eq, ground, colors, index, new_color);
        colors[static_cast<size_t>(index)] = static_cast<uint8_t>(new_color);
        ClassCountMatrix after = count_classes(eq, ground, colors);

        CHECK(d.rainbow == after.rainbow() - before.rainbow());
        CHECK(d.mono == after.mono() - before.mono());
        CHECK(d.dichromatic == after.dichromatic() - before.dichromatic());
    }
}

TEST_CASE("permuting color labels permutes the matrix axes") {
    const int perms[6][3] = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    SplitMix64 rng(71);
    LinearEquation eq(1, 1, 2);
    for (int trial = 0; trial < 10; ++trial) {
        GroundSet g(trial % 2 ? GroundKind::Cyclic : GroundKind::Interval,
                    4 + static_cast<int64_t>(rng.below(12)));
        Coloring f = random_surjective_coloring(g, rng.next());
        ClassCountMatrix base = count_by_class(eq, f).matrix;
        const auto& p = perms[rng.below(6)];
        std::vector<uint8_t> relabeled = f.colors();
        for (uint8_t& c : relabeled) c = static_cast<uint8_t>(p[c - 1]);
        ClassCountMatrix permuted = count_by_class(eq, Coloring(g, relabeled)).matrix;
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                for (int k = 1; k <= 3; ++k)
                    CHECK(permuted.at(p[i - 1], p[j - 1], p[k - 1]) == base.at(i, j, k));
        CHECK(permuted.rainbow() == base.rainbow());
        CHECK(permuted.mono() == base.mono());
        CHECK(permuted.dichromatic() == base.dichromatic());
    }
}

TEST_CASE("classify_triple carries the class with the triple") {
    Coloring f = mod3_cyclic(9);
    SolutionTriple st = classify_triple({0, 2, 1}, f); // 0 + 2 == 2*1 (mod 9)
    CHECK(st.cls == SolutionClass::Rainbow);
    CHECK(st.triple == Triple{0, 2, 1});
    CHECK(classify_triple({0, 0, 0}, f).cls == SolutionClass::Monochromatic);
}

TEST_CASE("O(n^2) paths refuse n beyond the guard") {
    GroundSet huge(GroundKind::Cyclic, (int64_t{1} << 20) + 1);
    CHECK_THROWS_AS(enumerate_solutions(LinearEquation(1, 1, 2), huge,
                                        [](int64_t, int64_t, int64_t) {}),
                    std::domain_error);
}
