#include <algorithm>

#include "doctest.h"
#include "oracle.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/search.hpp"

using namespace rainbow;

TEST_CASE("canonical_form relabels by first occurrence and is idempotent") {
    Coloring f(GroundSet(GroundKind::Cyclic, 4), {2, 3, 1, 2});
    Coloring canon = canonical_form(f);
    CHECK(canon.colors() == std::vector<uint8_t>{1, 2, 3, 1});
    CHECK(canonical_form(canon) == canon);

    Coloring already(GroundSet(GroundKind::Cyclic, 3), {1, 2, 3});
    CHECK(canonical_form(already) == already);

    // Class counts are invariant under the relabeling.
    SplitMix64 rng(7);
    LinearEquation eq(1, 1, 2);
    for (int trial = 0; trial < 20; ++trial) {
        GroundSet g(GroundKind::Cyclic, 5 + static_cast<int64_t>(rng.below(10)));
        Coloring r = random_surjective_coloring(g, rng.next());
        CountSummary a = count_by_class(eq, r).summary;
        CountSummary b = count_by_class(eq, canonical_form(r)).summary;
        CHECK(a.rainbow == b.rainbow);
        CHECK(a.mono == b.mono);
        CHECK(a.dichromatic == b.dichromatic);
    }
}

TEST_CASE("random_surjective_coloring is surjective and seed-deterministic") {
    GroundSet g(GroundKind::Interval, 12);
    Coloring a = random_surjective_coloring(g, 99);
    Coloring b = random_surjective_coloring(g, 99);
    CHECK(a == b);
    SplitMix64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        Coloring f = random_surjective_coloring(g, rng.next());
        DensityProfile p = density_profile(f);
        CHECK(p.counts[0] >= 1);
        CHECK(p.counts[1] >= 1);
        CHECK(p.counts[2] >= 1);
    }
}

TEST_CASE("exhaustive_search: known optima over Z_n") {
    LinearEquation eq(1, 1, 2);

    SearchRecord z3 = exhaustive_search(Objective::MaxRainbow, eq, GroundSet(GroundKind::Cyclic, 3));
    CHECK(z3.best_value == 6);
    CHECK(z3.complete);
    CHECK(count_by_class(eq, z3.witness).summary.rainbow == 6);

    SearchRecord z6 = exhaustive_search(Objective::MaxRainbow, eq, GroundSet(GroundKind::Cyclic, 6));
    CHECK(z6.best_value == 24); // (2/3) * 36, achieved by mod3_cyclic(6)

    SearchRecord mono5 = exhaustive_search(Objective::MinMono, LinearEquation(1, 1, 1),
                                           GroundSet(GroundKind::Cyclic, 5));
    CHECK(mono5.best_value == 1); // (0,0,0) is always monochromatic
    CHECK(count_by_class(LinearEquation(1, 1, 1), mono5.witness).summary.mono == 1);
}

TEST_CASE("exhaustive_search witness is the lex-smallest optimal canonical coloring") {
    LinearEquation eq(1, 1, 2);
    for (int64_t n = 4; n <= 5; ++n) {
        GroundSet g(GroundKind::Cyclic, n);
        SearchRecord rec = exhaustive_search(Objective::MaxRainbow, eq, g);
        CHECK(canonical_form(rec.witness) == rec.witness);

        // Reference: enumerate every surjective coloring directly.
        int64_t best = -1;
        std::vector<uint8_t> best_canonical;
        std::vector<uint8_t> colors(static_cast<size_t>(n), 1);
        for (;;) {
            bool s1 = false, s2 = false, s3 = false;
            for (uint8_t c : colors) (c == 1 ? s1 : c == 2 ? s2 : s3) = true;
            if (s1 && s2 && s3) {
                Coloring f(g, colors);
                int64_t r = oracle::rainbow_count(1, 1, 2, f);
                std::vector<uint8_t> canon = canonical_form(f).colors();
                if (r > best || (r == best && canon < best_canonical)) {
                    best = r;
                    best_canonical = canon;
                }
            }
            size_t i = 0;
            while (i < colors.size() && colors[i] == 3) colors[i++] = 1;
            if (i == colors.size()) break;
            ++colors[i];
        }
        CHECK(rec.best_value == best);
        CHECK(rec.witness.colors() == best_canonical);
    }
}

TEST_CASE("exhaustive_search: quotiented and unquotiented agree") {
    LinearEquation eq(1, 1, 2);
    for (int64_t n = 4; n <= 6; ++n) {
        GroundSet g(GroundKind::Cyclic, n);
        ExhaustiveOptions full;
        full.quotient_labels = false;
        SearchRecord a = exhaustive_search(Objective::MaxRainbow, eq, g);
        SearchRecord b = exhaustive_search(Objective::MaxRainbow, eq, g, full);
        CHECK(a.best_value == b.best_value);
        CHECK(a.explored * 6 == b.explored); // 3! label permutations
    }
}

TEST_CASE("exhaustive_search is independent of thread count") {
    LinearEquation eq(1, 1, 2);
    GroundSet g(GroundKind::Cyclic, 7);
    ExhaustiveOptions one, four;
    one.threads = 1;
    four.threads = 4;
    SearchRecord a = exhaustive_search(Objective::MaxRainbow, eq, g, one);
    SearchRecord b = exhaustive_search(Objective::MaxRainbow, eq, g, four);
    CHECK(a.best_value == b.best_value);
    CHECK(a.witness == b.witness);
    CHECK(a.explored == b.explored);
}

TEST_CASE("exhaustive_search: affine symmetry quotient preserves the outcome") {
    ExhaustiveOptions affine;
    affine.affine_symmetry = true;
    // x + y = 2z: translations and negation both sound.
    LinearEquation ap(1, 1, 2);
    for (int64_t n = 5; n <= 8; ++n) {
        GroundSet g(GroundKind::Cyclic, n);
        SearchRecord plain = exhaustive_search(Objective::MaxRainbow, ap, g);
        SearchRecord quotiented = exhaustive_search(Objective::MaxRainbow, ap, g, affine);
        CHECK(quotiented.best_value == plain.best_value);
        CHECK(quotiented.witness == plain.witness);
        CHECK(quotiented.explored < plain.explored);
    }
    // x + y = z: only negation is sound; the quotient must still be exact.
    LinearEquation schur(1, 1, 1);
    GroundSet z7(GroundKind::Cyclic, 7);
    SearchRecord plain = exhaustive_search(Objective::MinMono, schur, z7);
    SearchRecord quotiented = exhaustive_search(Objective::MinMono, schur, z7, affine);
    CHECK(quotiented.best_value == plain.best_value);
    CHECK(quotiented.witness == plain.witness);

    CHECK_THROWS_AS(exhaustive_search(Objective::MaxRainbow, ap,
                                      GroundSet(GroundKind::Interval, 6), affine),
                    UnsupportedEquationError);
    ExhaustiveOptions bad = affine;
    bad.quotient_labels = false;
    CHECK_THROWS_AS(exhaustive_search(Objective::MaxRainbow, ap, GroundSet(GroundKind::Cyclic, 6),
                                      bad),
                    std::invalid_argument);
}

TEST_CASE("exhaustive_search refuses n over the guard without the override") {
    LinearEquation eq(1, 1, 2);
    CHECK_THROWS_AS(exhaustive_search(Objective::MaxRainbow, eq, GroundSet(GroundKind::Cyclic, 17)),
                    SearchGuardError);
    ExhaustiveOptions opts;
    opts.guard_n = 5;
    CHECK_THROWS_AS(
        exhaustive_search(Objective::MaxRainbow, eq, GroundSet(GroundKind::Cyclic, 6), opts),
        SearchGuardError);
    opts.allow_large = true;
    CHECK(exhaustive_search(Objective::MaxRainbow, eq, GroundSet(GroundKind::Cyclic, 6), opts)
              .best_value == 24);
}

TEST_CASE("local_search: the mod-3 cyclic seed is locally optimal at n = 9") {
    LinearEquation eq(1, 1, 2);
    GroundSet g(GroundKind::Cyclic, 9);

    // Direct move evaluation: every single-element recoloring is non-improving.
    Coloring seed = mod3_cyclic(9);
    for (int64_t idx = 0; idx < 9; ++idx)
        for (int c = 1; c <= 3; ++c) {
            if (c == seed.color_at_index(idx)) continue;
            ClassDelta d = recolor_delta(eq, g, seed.colors(), idx, c);
            CHECK(d.rainbow <= 0);
        }

    // Budget 0: the seed is evaluated, no moves are taken, value 54 stands.
    LocalSearchOptions opts;
    opts.budget = 0;
    opts.restarts = 1;
    SearchRecord rec = local_search(Objective::MaxRainbow, eq, g, opts);
    CHECK(rec.best_value == 54);
    CHECK(rec.witness == seed);
    CHECK(rec.explored == 1);
    CHECK_FALSE(rec.complete);

    // A full sweep finds nothing better either.
    opts.budget = 1000;
    CHECK(local_search(Objective::MaxRainbow, eq, g, opts).best_value == 54);
}

TEST_CASE("local_search never falls below the construction seed") {
    LinearEquation eq(1, 1, 2);
    GroundSet g(GroundKind::Interval, 30);
    int64_t construction = count_by_class(eq, mod3_interval(30)).summary.rainbow;
    LocalSearchOptions opts;
    opts.seed = 42;
    opts.budget = 2000;
    opts.restarts = 8;
    SearchRecord rec = local_search(Objective::MaxRainbow, eq, g, opts);
    CHECK(rec.best_value >= construction);
    CHECK(count_by_class(eq, rec.witness).summary.rainbow == rec.best_value);
}

TEST_CASE("local_search is deterministic across thread counts and resumable") {
    LinearEquation eq(1, 1, 2);
    GroundSet g(GroundKind::Cyclic, 14);
    LocalSearchOptions base;
    base.seed = 7;
    base.budget = 400;
    base.restarts = 6;

    LocalSearchOptions threaded = base;
    threaded.threads = 4;
    SearchRecord a = local_search(Objective::MaxRainbow, eq, g, base);
    SearchRecord b = local_search(Objective::MaxRainbow, eq, g, threaded);
    CHECK(a.best_value == b.best_value);
    CHECK(a.witness == b.witness);
    CHECK(a.explored == b.explored);

    // Stop after 3 restarts, then resume: the final record is identical.
    LocalSearchOptions firstHalf = base;
    firstHalf.restarts = 6;
    std::optional<ResumeState> captured;
    firstHalf.on_restart = [&](const RestartOutcome& out, const SearchRecord& best) {
        if (out.index == 2)
            captured = ResumeState{3, best.best_value, best.witness.colors(), best.explored};
    };
    (void)local_search(Objective::MaxRainbow, eq, g, firstHalf);
    REQUIRE(captured.has_value());

    LocalSearchOptions resumed = base;
    resumed.resume = captured;
    SearchRecord c = local_search(Objective::MaxRainbow, eq, g, resumed);
    CHECK(c.best_value == a.best_value);
    CHECK(c.witness == a.witness);
    CHECK(c.explored == a.explored);
}

TEST_CASE("local_search MinMono stays at the floor on Z_5") {
    LinearEquation eq(1, 1, 1);
    GroundSet g(GroundKind::Cyclic, 5);
    LocalSearchOptions opts;
    opts.budget = 500;
    opts.restarts = 4;
    SearchRecord rec = local_search(Objective::MinMono, eq, g, opts);
    CHECK(rec.best_value == 1); // seed is the mod-5 coloring, already optimal
}
