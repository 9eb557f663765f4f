#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rainbow/domain.hpp"

namespace rainbow {

// Number of z in {0..n-1} with c*z == s (mod n): gcd(c, n) when that gcd
// divides s, else 0.
int64_t congruence_solution_count(int64_t c, int64_t s, int64_t n);

// The solutions themselves, ascending. Empty when unsolvable.
std::vector<int64_t> congruence_solutions(int64_t c, int64_t s, int64_t n);

// Streams every ordered solution (x, y, z) of the equation exactly once,
// in (x, y) lexicographic order with z ascending within a pair.
void enumerate_solutions(const LinearEquation& eq, const GroundSet& ground,
                         const std::function<void(int64_t, int64_t, int64_t)>& emit);

std::vector<Triple> enumerate_solutions(const LinearEquation& eq, const GroundSet& ground);

int64_t count_total_solutions(const LinearEquation& eq, const GroundSet& ground);

struct CountResult {
    ClassCountMatrix matrix;
    CountSummary summary;
};

// Classification tallies for a raw color array over a ground set. The array
// need not be surjective; entries must be in {1,2,3}. This is the O(n^2)
// reference path (n guarded at 2^20).
ClassCountMatrix count_classes(const LinearEquation& eq, const GroundSet& ground,
                               std::span<const uint8_t> colors);

// Reference counting path: enumerate every solution and classify it.
CountResult count_by_class(const LinearEquation& eq, const Coloring& coloring);

// Exact convolution-based path for equations x + y = cz (a = b = 1 only).
// Produces a CountResult bit-identical to count_by_class.
CountResult count_fast(const LinearEquation& eq, const Coloring& coloring);

// Exact linear convolution of two non-negative integer sequences
// (direct multiply for small inputs, NTT mod 998244353 above that;
// every coefficient must stay below the modulus).
std::vector<int64_t> exact_convolution(std::span<const int64_t> a,
                                       std::span<const int64_t> b);

struct TotalPrediction {
    Rational predicted; // n^2 (cyclic) or the leading term n^2/c (interval)
    bool exact;         // true for the cyclic case
    std::string note;
};

// Closed-form total validator. Interval branch requires a = b = 1 and c >= 2;
// the cyclic branch holds for every normalized equation.
TotalPrediction total_count_formula(const LinearEquation& eq, const GroundSet& ground);

DensityProfile density_profile(const Coloring& coloring);

// Exact change in class counts caused by recoloring the element at `index`
// to `new_color`, computed from the solutions incident to that element
// (O(n) per move, never a full recount).
struct ClassDelta {
    int64_t rainbow = 0;
    int64_t mono = 0;
    int64_t dichromatic = 0;
};

ClassDelta recolor_delta(const LinearEquation& eq, const GroundSet& ground,
                         std::span<const uint8_t> colors, int64_t index, int new_color);

} // namespace rainbow
