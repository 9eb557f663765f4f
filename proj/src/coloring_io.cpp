#include "rainbow/coloring_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rainbow {

std::string colors_to_string(std::span<const uint8_t> colors) {
    std::string out;
    out.reserve(colors.size() * 2);
    for (size_t i = 0; i < colors.size(); ++i) {
        if (i) out.push_back(' ');
        out.push_back(static_cast<char>('0' + colors[i]));
    }
    return out;
}

std::string format_coloring(const Coloring& coloring) {
    std::string kind = coloring.ground().kind() == GroundKind::Interval ? "interval" : "cyclic";
    return kind + " " + std::to_string(coloring.size()) + "\n" +
           colors_to_string(coloring.colors()) + "\n";
}

Coloring parse_coloring(std::istream& in) {
    std::string kind;
    int64_t n = 0;
    if (!(in >> kind >> n))
        throw std::runtime_error("coloring file: malformed header line");
    GroundKind gk;
    if (kind == "interval")
        gk = GroundKind::Interval;
    else if (kind == "cyclic")
        gk = GroundKind::Cyclic;
    else
        throw std::runtime_error("coloring file: unknown ground kind '" + kind + "'");
    GroundSet ground(gk, n);
    std::vector<uint8_t> colors;
    colors.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        int c;
        if (!(in >> c))
            throw std::runtime_error("coloring file: expected " + std::to_string(n) +
                                     " colors, got " + std::to_string(i));
        if (c < 1 || c > 255) throw std::runtime_error("coloring file: color out of range");
        colors.push_back(static_cast<uint8_t>(c));
    }
    return Coloring(ground, std::move(colors));
}

Coloring read_coloring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coloring file: " + path);
    return parse_coloring(in);
}

void write_coloring_file(const std::string& path, const Coloring& coloring) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write coloring file: " + path);
    out << format_coloring(coloring);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace rainbow
