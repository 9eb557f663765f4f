#include "rainbow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rainbow/constructions.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/search.hpp"

namespace rainbow {

namespace {

using json = nlohmann::ordered_json;

constexpr int64_t kErrorBudgetK = 10; // K in the K*n finite-n error budget

json summary_json(const CountSummary& s) {
    json j;
    j["total"] = s.total;
    j["rainbow"] = s.rainbow;
    j["mono"] = s.mono;
    j["dichromatic"] = s.dichromatic;
    return j;
}

// Smallest possible c1^2 + c2^2 + c3^2 with c1 + c2 + c3 = n.
int64_t balanced_square_floor(int64_t n) {
    int64_t q = n / 3, s = n % 3;
    if (s == 0) return 3 * q * q;
    if (s == 1) return 3 * q * q + 2 * q + 1;
    return 3 * q * q + 4 * q + 2;
}

} // namespace

CheckReport check_lemma_interval_total(int64_t c, int64_t n_max) {
    if (c < 2) throw std::domain_error("check_lemma_interval_total: c must be >= 2");
    CheckReport rep;
    rep.name = "lemma-interval-total-c" + std::to_string(c);
    LinearEquation eq(1, 1, c);
    double max_observed = 0.0;
    json failures = json::array();
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t total = count_total_solutions(eq, GroundSet(GroundKind::Interval, n));
        // |T - n^2/c| <= K*n, kept in integers as |c*T - n^2| <= K*c*n.
        int64_t lhs = std::abs(c * total - n * n);
        if (lhs > kErrorBudgetK * c * n) {
            rep.pass = false;
            failures.push_back({{"n", n}, {"total", total}});
        }
        max_observed = std::max(max_observed,
                                static_cast<double>(lhs) / static_cast<double>(c) / n);
    }
    rep.details["c"] = c;
    rep.details["n_max"] = n_max;
    rep.details["error_budget_K"] = kErrorBudgetK;
    rep.details["max_observed_error_over_n"] = max_observed;
    if (!failures.empty()) rep.details["failures"] = failures;
    return rep;
}

CheckReport check_cyclic_total(const LinearEquation& eq, int64_t n_max) {
    CheckReport rep;
    rep.name = "cyclic-total-" + std::to_string(eq.a()) + "," + std::to_string(eq.b()) +
               "," + std::to_string(eq.c());
    json failures = json::array();
    for (int64_t n = 1; n <= n_max; ++n) {
        int64_t total = count_total_solutions(eq, GroundSet(GroundKind::Cyclic, n));
        if (total != n * n) {
            rep.pass = false;
            failures.push_back({{"n", n}, {"total", total}, {"expected", n * n}});
        }
    }
    rep.details["eq"] = {eq.a(), eq.b(), eq.c()};
    rep.details["n_max"] = n_max;
    if (!failures.empty()) rep.details["failures"] = failures;
    return rep;
}

CheckReport check_no_dichromatic(int64_t n_max) {
    CheckReport rep;
    rep.name = "no-dichromatic";
    LinearEquation eq(1, 1, 2);
    json failures = json::array();
    int64_t checked = 0, cross_checked = 0;
    for (int64_t n = 3; n <= n_max; ++n) {
        Coloring f = mod3_interval(n);
        CountResult fast = count_fast(eq, f);
        ++checked;
        if (fast.summary.dichromatic != 0) {
            rep.pass = false;
            failures.push_back({{"n", n}, {"dichromatic", fast.summary.dichromatic}});
        }
        if (n <= 64) {
            ++cross_checked;
            CountResult oracle = count_by_class(eq, f);
            if (!(oracle.matrix == fast.matrix)) {
                rep.pass = false;
                failures.push_back({{"n", n}, {"error", "fast path disagrees with oracle"}});
            }
        }
    }
    rep.details["n_max"] = n_max;
    rep.details["colorings_checked"] = checked;
    rep.details["oracle_cross_checks"] = cross_checked;
    if (!failures.empty()) rep.details["failures"] = failures;
    return rep;
}

CheckReport check_main_theorem(int64_t n_max) {
    CheckReport rep;
    rep.name = "main-theorem";
    LinearEquation eq(1, 1, 2);
    json failures = json::array();
    auto fail = [&](int64_t n, const char* clause, const CountSummary& s) {
        rep.pass = false;
        failures.push_back({{"n", n}, {"clause", clause}, {"counts", summary_json(s)}});
    };

    Rational min_rb_interval(1), min_rb_cyclic(1);
    for (int64_t n = 3; n <= n_max; ++n) {
        Rational budget(kErrorBudgetK, n);

        // (i) interval: rb under mod3_interval >= 2/3 - 10/n.
        Coloring fi = mod3_interval(n);
        CountSummary si = count_by_class(eq, fi).summary;
        if (si.rb() < Rational(2, 3) - budget) fail(n, "interval-lower", si);
        min_rb_interval = std::min(min_rb_interval, si.rb());

        // (ii)/(iii) cyclic: rb == 2/3 exactly at multiples of 3,
        // rb >= 1/3 - 10/n otherwise.
        Coloring fc = mod3_cyclic(n);
        CountSummary sc = count_by_class(eq, fc).summary;
        if (n % 3 == 0) {
            if (sc.rb() != Rational(2, 3)) fail(n, "cyclic-exact-two-thirds", sc);
        } else {
            if (sc.rb() < Rational(1, 3) - budget) fail(n, "cyclic-lower", sc);
        }
        min_rb_cyclic = std::min(min_rb_cyclic, sc.rb());

        // (iv) universal bound via the color-count squares, for every
        // cyclic coloring this check touches.
        DensityProfile prof = density_profile(fc);
        if (sc.rainbow + prof.sum_of_squares() > n * n) fail(n, "universal-bound", sc);
        if (3 * sc.rainbow > 2 * n * n) fail(n, "two-thirds-cap", sc);
    }
    rep.details["n_max"] = n_max;
    rep.details["error_budget_K"] = kErrorBudgetK;
    // Both colorings stay far above the uniform-random rainbow proportion.
    rep.details["random_baseline_rb"] = kRandomRainbowBaseline.to_fraction_string();
    rep.details["min_observed_rb_interval"] = min_rb_interval.to_fraction_string();
    rep.details["min_observed_rb_cyclic"] = min_rb_cyclic.to_fraction_string();
    rep.details["rainbow_uncommon_evidence"] = min_rb_interval > kRandomRainbowBaseline &&
                                               min_rb_cyclic > kRandomRainbowBaseline;
    if (!failures.empty()) rep.details["failures"] = failures;
    return rep;
}

CheckReport check_nonrainbow_floor(int64_t n_max, int samples_per_n, uint64_t seed) {
    CheckReport rep;
    rep.name = "nonrainbow-floor";
    LinearEquation eq(1, 1, 2);
    json failures = json::array();
    int64_t checked = 0;
    for (int64_t n = 5; n <= n_max; ++n) {
        GroundSet ground(GroundKind::Cyclic, n);
        std::vector<Coloring> colorings;
        colorings.push_back(mod3_cyclic(n));
        colorings.push_back(mod5_schur_cyclic(n));
        SplitMix64 mix(seed ^ static_cast<uint64_t>(n));
        for (int i = 0; i < samples_per_n; ++i)
            colorings.push_back(random_surjective_coloring(ground, mix.next()));
        for (const Coloring& f : colorings) {
            ++checked;
            CountSummary s = count_by_class(eq, f).summary;
            DensityProfile prof = density_profile(f);
            int64_t nonrainbow = s.mono + s.dichromatic;
            int64_t floor_sq = prof.sum_of_squares();
            if (nonrainbow < floor_sq || floor_sq < balanced_square_floor(n)) {
                rep.pass = false;
                failures.push_back({{"n", n},
                                    {"nonrainbow", nonrainbow},
                                    {"sum_of_squares", floor_sq},
                                    {"counts", summary_json(s)}});
            }
        }
    }
    rep.details["n_max"] = n_max;
    rep.details["samples_per_n"] = samples_per_n;
    rep.details["colorings_checked"] = checked;
    if (!failures.empty()) rep.details["failures"] = failures;
    return rep;
}

CheckReport check_figure1_estimate(int64_t n_max) {
    CheckReport rep;
    rep.name = "figure1-estimate";
    LinearEquation eq(1, 1, 2);
    json failures = json::array();
    int64_t checked = 0;
    for (int64_t n = 4; n <= n_max; ++n) {
        if (n % 3 == 0) continue;
        ++checked;
        Coloring f = mod3_cyclic(n);
        int64_t direct = count_by_class(eq, f).summary.rainbow;

        // Recount through the progression picture: differences d <= floor(n/2)
        // with 3 not dividing d are rainbow exactly when x + 2d < n; double to
        // cover the mirrored differences, except d = n/2 which mirrors itself.
        int64_t param = 0;
        for (int64_t d = 1; d <= n / 2; ++d) {
            if (d % 3 == 0) continue;
            int64_t r = std::max<int64_t>(0, n - 2 * d);
            param += (2 * d == n) ? r : 2 * r;
        }
        if (param != direct) {
            rep.pass = false;
            failures.push_back(
                {{"n", n}, {"clause", "recount"}, {"direct", direct}, {"parameterized", param}});
        }
        // Third route: the convolution path must agree exactly as well.
        int64_t fast = count_fast(eq, f).summary.rainbow;
        if (fast != direct) {
            rep.pass = false;
            failures.push_back(
                {{"n", n}, {"clause", "fast-path"}, {"direct", direct}, {"fast", fast}});
        }
        // |rainbow - n^2/3| <= 10n, in integers: |3R - n^2| <= 30n.
        if (std::abs(3 * direct - n * n) > 3 * kErrorBudgetK * n) {
            rep.pass = false;
            failures.push_back({{"n", n}, {"clause", "estimate"}, {"rainbow", direct}});
        }
    }
    rep.details["n_max"] = n_max;
    rep.details["n_checked"] = checked;
    rep.details["analytic_estimate"] = "1/3";
    rep.details["error_budget_K"] = kErrorBudgetK;
    if (!failures.empty()) rep.details["failures"] = failures;
    return rep;
}

CheckReport check_schur_theorem(int64_t n_max) {
    CheckReport rep;
    rep.name = "schur-theorem";
    LinearEquation eq(1, 1, 1);
    json failures = json::array();
    for (int64_t n = 5; n <= n_max; ++n) {
        Coloring f = mod5_schur_cyclic(n);
        CountResult res = count_by_class(eq, f);
        int64_t mono = res.summary.mono;
        if (n % 5 == 0) {
            if (mono * 25 != n * n) {
                rep.pass = false;
                failures.push_back({{"n", n}, {"clause", "exact-n2-over-25"}, {"mono", mono}});
            }
            if (res.matrix.at(2, 2, 2) != 0 || res.matrix.at(3, 3, 3) != 0) {
                rep.pass = false;
                failures.push_back({{"n", n},
                                    {"clause", "mono-all-red"},
                                    {"blue", res.matrix.at(2, 2, 2)},
                                    {"green", res.matrix.at(3, 3, 3)}});
            }
        } else {
            // |mono - n^2/10| <= 10n, in integers: |10*mono - n^2| <= 100n.
            if (std::abs(10 * mono - n * n) > 10 * kErrorBudgetK * n) {
                rep.pass = false;
                failures.push_back({{"n", n}, {"clause", "near-n2-over-10"}, {"mono", mono}});
            }
        }
    }
    rep.details["n_max"] = n_max;
    rep.details["error_budget_K"] = kErrorBudgetK;
    if (!failures.empty()) rep.details["failures"] = failures;
    return rep;
}

int64_t rainbow_via_progressions(const Coloring& coloring) {
    const GroundSet& ground = coloring.ground();
    if (ground.kind() != GroundKind::Cyclic)
        throw std::domain_error("rainbow_via_progressions: cyclic ground required");
    int64_t n = ground.size();
    int64_t rainbow = 0;
    for (int64_t a = 0; a < n; ++a) {
        for (int64_t d = 0; d < n; ++d) {
            Triple t = progression_to_solution({a, d}, ground);
            if (classify(t.x, t.y, t.z, coloring) == SolutionClass::Rainbow) ++rainbow;
        }
    }
    return rainbow;
}

std::vector<std::string> suite_names() {
    return {"lemma-interval", "cyclic-total",    "no-dichromatic", "main-theorem",
            "figure1",        "nonrainbow-floor", "schur"};
}

std::vector<CheckReport> run_suite(const std::string& name, int64_t max_n, uint64_t seed) {
    auto cap = [&](int64_t dflt) { return max_n > 0 ? std::min(max_n, dflt) : dflt; };
    std::vector<CheckReport> out;
    if (name == "all") {
        for (const std::string& s : suite_names()) {
            std::vector<CheckReport> part = run_suite(s, max_n, seed);
            out.insert(out.end(), part.begin(), part.end());
        }
        return out;
    }
    if (name == "lemma-interval") {
        for (int64_t c = 2; c <= 5; ++c)
            out.push_back(check_lemma_interval_total(c, cap(500)));
    } else if (name == "cyclic-total") {
        out.push_back(check_cyclic_total(LinearEquation(1, 1, 2), cap(200)));
        out.push_back(check_cyclic_total(LinearEquation(1, 1, 1), cap(200)));
        out.push_back(check_cyclic_total(LinearEquation(2, 3, 5), cap(200)));
    } else if (name == "no-dichromatic") {
        out.push_back(check_no_dichromatic(cap(2000)));
    } else if (name == "main-theorem") {
        out.push_back(check_main_theorem(cap(300)));
    } else if (name == "figure1") {
        out.push_back(check_figure1_estimate(cap(100)));
    } else if (name == "nonrainbow-floor") {
        out.push_back(check_nonrainbow_floor(cap(40), 28, seed));
    } else if (name == "schur") {
        out.push_back(check_schur_theorem(cap(100)));
    } else {
        throw std::invalid_argument("unknown verify suite: " + name);
    }
    return out;
}

} // namespace rainbow
