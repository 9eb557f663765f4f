#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "rainbow/domain.hpp"

namespace rainbow {

// Coloring file format, chosen to be diff-able and trivially parseable:
//   line 1: "<kind> <n>"  with kind one of interval | cyclic
//   line 2: n space-separated colors in {1,2,3}, canonical element order

std::string colors_to_string(std::span<const uint8_t> colors);

std::string format_coloring(const Coloring& coloring);

Coloring parse_coloring(std::istream& in);

Coloring read_coloring_file(const std::string& path);

void write_coloring_file(const std::string& path, const Coloring& coloring);

} // namespace rainbow
