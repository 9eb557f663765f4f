#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "rainbow/domain.hpp"

namespace rainbow {

// One finite-n check of a quantitative claim. Failing checks report and
// return; they never throw, so a suite always runs to completion.
struct CheckReport {
    std::string name;
    bool pass = true;
    nlohmann::ordered_json details;
};

// |T - n^2/c| <= 10n for x + y = cz over [n], c >= 2, n = 1..n_max.
CheckReport check_lemma_interval_total(int64_t c, int64_t n_max);

// Enumerated total == n^2 over Z_n for n = 1..n_max.
CheckReport check_cyclic_total(const LinearEquation& eq, int64_t n_max);

// Under mod3_interval and x + y = 2z there are no dichromatic solutions;
// swept with the fast path, cross-checked against the oracle for n <= 64.
CheckReport check_no_dichromatic(int64_t n_max);

// The main rainbow bounds: interval rb >= 2/3 - 10/n; cyclic rb == 2/3
// exactly at multiples of 3, rb >= 1/3 - 10/n otherwise; and the universal
// upper bound rainbow <= n^2 - (c1^2 + c2^2 + c3^2) for every tested coloring.
CheckReport check_main_theorem(int64_t n_max);

// Non-rainbow floor over Z_n for x + y = 2z: mono + dichromatic >=
// c1^2 + c2^2 + c3^2 on constructions plus seeded random colorings.
CheckReport check_nonrainbow_floor(int64_t n_max, int samples_per_n = 28,
                                   uint64_t seed = 0x5eed);

// For 3 not dividing n: the halved-difference recount of rainbow 3-APs
// equals the direct count, and rainbow stays within 10n of n^2/3.
CheckReport check_figure1_estimate(int64_t n_max);

// Schur equation under the mod-5 coloring: mono == n^2/25 exactly (and all
// mono solutions red) at multiples of 5; |mono - n^2/10| <= 10n otherwise.
CheckReport check_schur_theorem(int64_t n_max);

// Rainbow count obtained through the (first term, difference) progression
// parameterization instead of solving for z; cyclic ground only.
int64_t rainbow_via_progressions(const Coloring& coloring);

// Suite names: lemma-interval, cyclic-total, no-dichromatic, main-theorem,
// figure1, nonrainbow-floor, schur, all. max_n == 0 keeps each check's
// default range; otherwise ranges are capped at max_n.
std::vector<CheckReport> run_suite(const std::string& name, int64_t max_n = 0,
                                   uint64_t seed = 0x5eed);

std::vector<std::string> suite_names();

} // namespace rainbow
