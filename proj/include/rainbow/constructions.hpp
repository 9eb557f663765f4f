#pragma once

#include <cstdint>
#include <vector>

#include "rainbow/domain.hpp"

namespace rainbow {

// The extremal colorings with explicit residue-to-color tables, plus a
// periodic tiling generator used for search seeds. The interval and cyclic
// mod-3 colorings use different tables on purpose; they are kept verbatim.

// [n]: x -> 1 if x == 1, 2 if x == 2, 3 if x == 0 (mod 3). Needs n >= 3.
Coloring mod3_interval(int64_t n);

// Z_n: x -> 1 if x == 0, 2 if x == 1, 3 if x == 2 (mod 3). Needs n >= 3.
Coloring mod3_cyclic(int64_t n);

// Z_n: x -> 1 if x == 0, 2 if x == +-1, 3 if x == +-2 (mod 5). Needs n >= 5.
Coloring mod5_schur_cyclic(int64_t n);

// colors[i] = pattern[i mod |pattern|] over the given ground set; the tiling
// must still use all three colors.
Coloring periodic(const GroundSet& ground, const std::vector<uint8_t>& pattern);

} // namespace rainbow
