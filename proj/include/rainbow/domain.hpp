#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/rational.hpp"

namespace rainbow {

// A coloring that does not use every color. Kept distinct from plain
// invalid_argument so the search layer can quotient the space correctly.
class SurjectivityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised by operations that only support a subset of equations
// (e.g. the fast counting path, the closed-form total validators).
class UnsupportedEquationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when a search would exceed its size guard without an explicit override.
class SearchGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class GroundKind { Interval, Cyclic };

// The colored universe: the interval [n] = {1..n} or the cyclic group
// Z_n = {0..n-1}. Elements are plain int64 values in the stated range;
// canonical order is ascending, so index i holds element i+1 (interval)
// or i (cyclic).
class GroundSet {
public:
    GroundSet(GroundKind kind, int64_t n) : kind_(kind), n_(n) {
        if (n < 1) throw std::domain_error("GroundSet: n must be >= 1");
    }

    GroundKind kind() const { return kind_; }
    int64_t size() const { return n_; }
    bool is_cyclic() const { return kind_ == GroundKind::Cyclic; }

    bool contains(int64_t e) const {
        return kind_ == GroundKind::Interval ? (e >= 1 && e <= n_)
                                             : (e >= 0 && e < n_);
    }

    int64_t element_at(int64_t index) const {
        if (index < 0 || index >= n_)
            throw std::out_of_range("GroundSet: index out of range");
        return kind_ == GroundKind::Interval ? index + 1 : index;
    }

    int64_t index_of(int64_t e) const {
        require_element(e);
        return kind_ == GroundKind::Interval ? e - 1 : e;
    }

    void require_element(int64_t e) const {
        if (!contains(e))
            throw std::domain_error("GroundSet: element " + std::to_string(e) +
                                    " out of range");
    }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    GroundKind kind_;
    int64_t n_;
};

// Coefficients of ax + by = cz. Positive, and normalized so that
// gcd(a, b, c) = 1 (the constructor divides out the common gcd).
class LinearEquation {
public:
    LinearEquation(int64_t a, int64_t b, int64_t c) : a_(a), b_(b), c_(c) {
        if (a < 1 || b < 1 || c < 1)
            throw std::domain_error("LinearEquation: coefficients must be >= 1");
        int64_t g = std::gcd(a_, std::gcd(b_, c_));
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }

    int64_t a() const { return a_; }
    int64_t b() const { return b_; }
    int64_t c() const { return c_; }

    friend bool operator==(const LinearEquation&, const LinearEquation&) = default;

private:
    int64_t a_, b_, c_;
};

// A surjective assignment of colors {1..3} to ground-set elements, stored in
// canonical element order. num_colors is a forward-compatibility hook; every
// operation in this library requires the default of 3.
class Coloring {
public:
    Coloring(GroundSet ground, std::vector<uint8_t> colors, int num_colors = 3)
        : ground_(ground), colors_(std::move(colors)), num_colors_(num_colors) {
        if (num_colors_ < 1)
            throw std::domain_error("Coloring: num_colors must be >= 1");
        if (static_cast<int64_t>(colors_.size()) != ground_.size())
            throw std::invalid_argument("Coloring: color array length != n");
        std::vector<bool> seen(static_cast<size_t>(num_colors_) + 1, false);
        for (uint8_t c : colors_) {
            if (c < 1 || c > num_colors_)
                throw std::domain_error("Coloring: color out of range");
            seen[c] = true;
        }
        for (int c = 1; c <= num_colors_; ++c)
            if (!seen[c])
                throw SurjectivityError("Coloring: color " + std::to_string(c) +
                                        " unused (coloring must be surjective)");
    }

    const GroundSet& ground() const { return ground_; }
    int64_t size() const { return ground_.size(); }
    int num_colors() const { return num_colors_; }
    const std::vector<uint8_t>& colors() const { return colors_; }

    int color_at_index(int64_t index) const { return colors_[static_cast<size_t>(index)]; }

    int color_of(int64_t element) const {
        return colors_[static_cast<size_t>(ground_.index_of(element))];
    }

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    GroundSet ground_;
    std::vector<uint8_t> colors_;
    int num_colors_;
};

enum class SolutionClass { Rainbow, Monochromatic, Dichromatic };

// Classification of a color triple: all distinct, all equal, or exactly two.
inline SolutionClass classify_colors(int cx, int cy, int cz) {
    if (cx == cy && cy == cz) return SolutionClass::Monochromatic;
    if (cx != cy && cx != cz && cy != cz) return SolutionClass::Rainbow;
    return SolutionClass::Dichromatic;
}

inline SolutionClass classify(int64_t x, int64_t y, int64_t z, const Coloring& f) {
    return classify_colors(f.color_of(x), f.color_of(y), f.color_of(z));
}

struct Triple {
    int64_t x, y, z;
    friend bool operator==(const Triple&, const Triple&) = default;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct SolutionTriple {
    Triple triple;
    SolutionClass cls;
};

inline SolutionTriple classify_triple(const Triple& t, const Coloring& f) {
    return {t, classify(t.x, t.y, t.z, f)};
}

// Ordered-solution predicate: exact integer equality over the interval,
// congruence mod n over the cyclic group.
inline bool is_solution(const LinearEquation& eq, const GroundSet& ground,
                        int64_t x, int64_t y, int64_t z) {
    ground.require_element(x);
    ground.require_element(y);
    ground.require_element(z);
    int64_t lhs = eq.a() * x + eq.b() * y;
    int64_t rhs = eq.c() * z;
    if (ground.kind() == GroundKind::Interval) return lhs == rhs;
    return (lhs - rhs) % ground.size() == 0;
}

// A 3-AP handle (first term a, common difference d). Maps to the solution
// (a, a+2d, a+d) of x + y = 2z; over Z_n this map is a bijection from
// Z_n x Z_n onto the solution set.
struct ProgressionPair {
    int64_t a;
    int64_t d; // any integer for Interval, a Z_n representative for Cyclic
};

inline Triple progression_to_solution(const ProgressionPair& p, const GroundSet& ground) {
    if (ground.kind() == GroundKind::Cyclic) {
        int64_t n = ground.size();
        ground.require_element(p.a);
        ground.require_element(p.d);
        return Triple{p.a, (p.a + 2 * p.d) % n, (p.a + p.d) % n};
    }
    int64_t x = p.a, y = p.a + 2 * p.d, z = p.a + p.d;
    if (!ground.contains(x) || !ground.contains(y) || !ground.contains(z))
        throw std::out_of_range("progression_to_solution: term outside [n]");
    return Triple{x, y, z};
}

// 3x3x3 tally m[i][j][k] = number of solutions with colors (i, j, k)
// on (x, y, z). Colors are 1-based.
struct ClassCountMatrix {
    std::array<int64_t, 27> m{};

    static constexpr size_t idx(int i, int j, int k) {
        return static_cast<size_t>((i - 1) * 9 + (j - 1) * 3 + (k - 1));
    }
    int64_t& at(int i, int j, int k) { return m[idx(i, j, k)]; }
    int64_t at(int i, int j, int k) const { return m[idx(i, j, k)]; }

    int64_t total() const {
        int64_t t = 0;
        for (int64_t v : m) t += v;
        return t;
    }
    int64_t mono() const { return at(1, 1, 1) + at(2, 2, 2) + at(3, 3, 3); }
    int64_t rainbow() const {
        return at(1, 2, 3) + at(1, 3, 2) + at(2, 1, 3) + at(2, 3, 1) +
               at(3, 1, 2) + at(3, 2, 1);
    }
    int64_t dichromatic() const { return total() - mono() - rainbow(); }

    friend bool operator==(const ClassCountMatrix&, const ClassCountMatrix&) = default;
};

// Exact tallies plus exact-rational proportions. The invariant
// total == rainbow + mono + dichromatic holds for every summary the
// library constructs; proportions require total > 0.
struct CountSummary {
    int64_t total = 0;
    int64_t rainbow = 0;
    int64_t mono = 0;
    int64_t dichromatic = 0;

    Rational rb() const {
        if (total <= 0) throw std::domain_error("CountSummary: rb needs total > 0");
        return Rational(rainbow, total);
    }
    Rational mono_prop() const {
        if (total <= 0) throw std::domain_error("CountSummary: mono_prop needs total > 0");
        return Rational(mono, total);
    }

    static CountSummary from_matrix(const ClassCountMatrix& m) {
        CountSummary s;
        s.total = m.total();
        s.rainbow = m.rainbow();
        s.mono = m.mono();
        s.dichromatic = s.total - s.rainbow - s.mono;
        return s;
    }

    friend bool operator==(const CountSummary&, const CountSummary&) = default;
};

// Per-color element counts (c1, c2, c3) with exact-rational densities.
struct DensityProfile {
    std::array<int64_t, 3> counts{};

    int64_t n() const { return counts[0] + counts[1] + counts[2]; }
    Rational density(int color) const {
        return Rational(counts[static_cast<size_t>(color - 1)], n());
    }
    int64_t sum_of_squares() const {
        return counts[0] * counts[0] + counts[1] * counts[1] + counts[2] * counts[2];
    }
};

// Expected asymptotic class proportions under a uniformly random 3-coloring.
inline const Rational kRandomRainbowBaseline{2, 9};
inline const Rational kRandomMonoBaseline{1, 9};

} // namespace rainbow
