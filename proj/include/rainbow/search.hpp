#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rainbow/counting.hpp"
#include "rainbow/domain.hpp"

namespace rainbow {

enum class Objective { MaxRainbow, MinMono };

inline int64_t objective_value(Objective obj, const CountSummary& s) {
    return obj == Objective::MaxRainbow ? s.rainbow : s.mono;
}

inline bool objective_improves(Objective obj, int64_t candidate, int64_t incumbent) {
    return obj == Objective::MaxRainbow ? candidate > incumbent : candidate < incumbent;
}

// Best-so-far state of a search run. The witness always re-verifies:
// count_by_class(eq, witness) reproduces best_value for the objective.
struct SearchRecord {
    Objective objective;
    LinearEquation eq;
    GroundSet ground;
    int64_t best_value;
    Coloring witness;
    int64_t explored; // colorings evaluated (seeds plus neighbor evaluations)
    uint64_t seed;    // 0 for exhaustive runs
    int64_t budget;   // move-evaluation cap per restart; 0 for exhaustive runs
    bool complete;    // true only when the quotiented space was fully enumerated
};

// Relabels colors by order of first occurrence (first distinct color seen
// becomes 1, then 2, then 3). Idempotent; class counts are invariant.
Coloring canonical_form(const Coloring& f);

// All search randomness flows through this deterministic generator.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound >= 1.
    uint64_t below(uint64_t bound) {
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

private:
    uint64_t state_;
};

// Uniform color per element, then every missing color is planted at a
// distinct uniformly chosen index; the whole draw is repeated if the repair
// itself destroyed a color. Deterministic given the seed.
Coloring random_surjective_coloring(const GroundSet& ground, uint64_t seed);

struct ExhaustiveOptions {
    bool quotient_labels = true; // enumerate canonical forms only
    // Opt-in extra quotient by the maps x -> sigma*x + t of Z_n that preserve
    // the solution set: negation is always sound over Z_n, translations only
    // when a + b - c == 0 (mod n), e.g. x + y = 2z. Cyclic ground and
    // quotient_labels required; unsound requests are rejected.
    bool affine_symmetry = false;
    int threads = 1;
    int64_t guard_n = 16;
    bool allow_large = false; // explicit override for n > guard_n
    // Called in deterministic order whenever the incumbent improves.
    std::function<void(const SearchRecord&)> on_improvement;
};

// True optimum over all surjective 3-colorings; the witness is the
// lexicographically smallest optimal coloring under canonical relabeling.
SearchRecord exhaustive_search(Objective obj, const LinearEquation& eq,
                               const GroundSet& ground, const ExhaustiveOptions& opts = {});

struct RestartOutcome {
    int index;
    int64_t value;
    std::vector<uint8_t> colors;
    int64_t explored;
};

struct ResumeState {
    int next_restart;                 // first restart still to run
    int64_t best_value;
    std::vector<uint8_t> best_colors; // best witness so far
    int64_t explored;                 // evaluations already spent
};

struct LocalSearchOptions {
    uint64_t seed = 0;
    int64_t budget = 100000; // move evaluations per restart
    int restarts = 1;
    int threads = 1;
    std::optional<ResumeState> resume;
    // Called once per computed restart, in restart order, with that restart's
    // outcome and the best record after folding it in.
    std::function<void(const RestartOutcome&, const SearchRecord&)> on_restart;
};

// Steepest-ascent hill climbing over single-element recolor moves (ties:
// smallest element index, then smallest color). Restart 0 seeds from the
// construction matching the objective, later restarts from random
// surjective colorings; restart streams derive from (seed, restart index),
// so results are bit-identical for any thread count.
SearchRecord local_search(Objective obj, const LinearEquation& eq,
                          const GroundSet& ground, const LocalSearchOptions& opts = {});

} // namespace rainbow
