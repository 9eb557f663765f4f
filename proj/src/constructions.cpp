#include "rainbow/constructions.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

void require_min_n(int64_t n, int64_t min_n, const char* what) {
    if (n < min_n)
        throw SurjectivityError(std::string(what) + ": needs n >= " +
                                std::to_string(min_n) + " to use all colors");
}

} // namespace

Coloring mod3_interval(int64_t n) {
    require_min_n(n, 3, "mod3_interval");
    std::vector<uint8_t> colors(static_cast<size_t>(n));
    for (int64_t x = 1; x <= n; ++x) {
        int64_t r = x % 3;
        colors[static_cast<size_t>(x - 1)] = r == 1 ? 1 : r == 2 ? 2 : 3;
    }
    return Coloring(GroundSet(GroundKind::Interval, n), std::move(colors));
}

Coloring mod3_cyclic(int64_t n) {
    require_min_n(n, 3, "mod3_cyclic");
    std::vector<uint8_t> colors(static_cast<size_t>(n));
    for (int64_t x = 0; x < n; ++x)
        colors[static_cast<size_t>(x)] = static_cast<uint8_t>(x % 3 + 1);
    return Coloring(GroundSet(GroundKind::Cyclic, n), std::move(colors));
}

Coloring mod5_schur_cyclic(int64_t n) {
    require_min_n(n, 5, "mod5_schur_cyclic");
    std::vector<uint8_t> colors(static_cast<size_t>(n));
    for (int64_t x = 0; x < n; ++x) {
        int64_t r = x % 5;
        colors[static_cast<size_t>(x)] = r == 0 ? 1 : (r == 1 || r == 4) ? 2 : 3;
    }
    return Coloring(GroundSet(GroundKind::Cyclic, n), std::move(colors));
}

Coloring periodic(const GroundSet& ground, const std::vector<uint8_t>& pattern) {
    if (pattern.empty()) throw std::invalid_argument("periodic: empty pattern");
    for (uint8_t c : pattern)
        if (c < 1 || c > 3) throw std::domain_error("periodic: pattern color out of range");
    std::vector<uint8_t> colors(static_cast<size_t>(ground.size()));
    for (size_t i = 0; i < colors.size(); ++i) colors[i] = pattern[i % pattern.size()];
    return Coloring(ground, std::move(colors)); // surjectivity checked there
}

} // namespace rainbow
