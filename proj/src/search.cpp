#include "rainbow/search.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "rainbow/constructions.hpp"

namespace rainbow {

Coloring canonical_form(const Coloring& f) {
    std::array<uint8_t, 4> relabel{0, 0, 0, 0};
    uint8_t next = 1;
    std::vector<uint8_t> colors = f.colors();
    for (uint8_t& c : colors) {
        if (relabel[c] == 0) relabel[c] = next++;
        c = relabel[c];
    }
    return Coloring(f.ground(), std::move(colors), f.num_colors());
}

Coloring random_surjective_coloring(const GroundSet& ground, uint64_t seed) {
    int64_t n = ground.size();
    if (n < 3) throw SurjectivityError("random coloring: needs n >= 3");
    SplitMix64 rng(seed);
    std::vector<uint8_t> colors(static_cast<size_t>(n));
    for (;;) {
        for (auto& c : colors) c = static_cast<uint8_t>(1 + rng.below(3));
        std::array<bool, 4> present{false, false, false, false};
        for (uint8_t c : colors) present[c] = true;
        std::vector<uint8_t> missing;
        for (uint8_t c = 1; c <= 3; ++c)
            if (!present[c]) missing.push_back(c);
        if (!missing.empty()) {
            std::vector<size_t> slots;
            while (slots.size() < missing.size()) {
                size_t idx = static_cast<size_t>(rng.below(static_cast<uint64_t>(n)));
                if (std::find(slots.begin(), slots.end(), idx) == slots.end())
                    slots.push_back(idx);
            }
            for (size_t k = 0; k < missing.size(); ++k) colors[slots[k]] = missing[k];
            std::array<bool, 4> now{false, false, false, false};
            for (uint8_t c : colors) now[c] = true;
            if (!(now[1] && now[2] && now[3])) continue; // repair displaced a color
        }
        return Coloring(ground, colors);
    }
}

namespace {

// Running class counts kept exact through recolor deltas.
struct RunningCounts {
    int64_t rainbow = 0;
    int64_t mono = 0;
    int64_t dichromatic = 0;

    static RunningCounts from(const ClassCountMatrix& m) {
        RunningCounts r;
        r.rainbow = m.rainbow();
        r.mono = m.mono();
        r.dichromatic = m.dichromatic();
        return r;
    }
    void apply(const ClassDelta& d) {
        rainbow += d.rainbow;
        mono += d.mono;
        dichromatic += d.dichromatic;
    }
    int64_t value(Objective obj) const {
        return obj == Objective::MaxRainbow ? rainbow : mono;
    }
};

uint64_t restart_stream_seed(uint64_t seed, int restart) {
    SplitMix64 mix(seed + 0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(restart));
    return mix.next();
}

Coloring construction_seed(Objective obj, const GroundSet& ground) {
    int64_t n = ground.size();
    if (obj == Objective::MinMono && n >= 5) {
        if (ground.kind() == GroundKind::Cyclic) return mod5_schur_cyclic(n);
        return periodic(ground, {1, 2, 3, 3, 2});
    }
    return ground.kind() == GroundKind::Cyclic ? mod3_cyclic(n) : mod3_interval(n);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration. The space is partitioned into chunks by coloring
// prefix; chunks are processed concurrently and merged in prefix order, so
// the outcome (including the improvement stream) does not depend on the
// thread count. Within a chunk the DFS assigns one position at a time and
// keeps the class counts current through recolor deltas, so a leaf costs
// O(n) rather than a full recount.
// ---------------------------------------------------------------------------

struct ChunkResult {
    bool found = false;
    int64_t value = 0;
    std::vector<uint8_t> colors;
    int64_t explored = 0;
};

struct DfsContext {
    Objective obj;
    const LinearEquation& eq;
    const GroundSet& ground;
    bool quotient;
    const std::vector<std::vector<int64_t>>* affine_perms = nullptr;
    std::vector<uint8_t> colors;
    RunningCounts counts;
    std::array<int64_t, 4> color_uses{};
    ChunkResult result;

    DfsContext(Objective o, const LinearEquation& e, const GroundSet& g, bool q)
        : obj(o), eq(e), ground(g), quotient(q),
          colors(static_cast<size_t>(g.size()), 1) {
        counts = RunningCounts::from(count_classes(eq, ground, colors));
        color_uses[1] = g.size();
    }

    void recolor(int64_t pos, uint8_t c) {
        uint8_t old = colors[static_cast<size_t>(pos)];
        if (old == c) return;
        counts.apply(recolor_delta(eq, ground, colors, pos, c));
        --color_uses[old];
        ++color_uses[c];
        colors[static_cast<size_t>(pos)] = c;
    }

    // True when no solution-preserving transform relabels to something
    // lexicographically smaller; only orbit minima are evaluated.
    bool orbit_minimal() const {
        for (const std::vector<int64_t>& perm : *affine_perms) {
            std::array<uint8_t, 4> relabel{0, 0, 0, 0};
            uint8_t next = 1;
            for (size_t e = 0; e < colors.size(); ++e) {
                uint8_t c = colors[static_cast<size_t>(perm[e])];
                if (relabel[c] == 0) relabel[c] = next++;
                uint8_t gc = relabel[c];
                if (gc != colors[e]) {
                    if (gc < colors[e]) return false;
                    break;
                }
            }
        }
        return true;
    }

    void leaf(uint8_t max_color) {
        bool surjective = quotient
                              ? max_color == 3
                              : (color_uses[1] > 0 && color_uses[2] > 0 && color_uses[3] > 0);
        if (!surjective) return;
        if (affine_perms && !orbit_minimal()) return;
        ++result.explored;
        int64_t v = counts.value(obj);
        if (!result.found || objective_improves(obj, v, result.value)) {
            result.found = true;
            result.value = v;
            result.colors = colors;
        }
    }

    void dfs(int64_t pos, uint8_t max_color) {
        if (pos == ground.size()) {
            leaf(max_color);
            return;
        }
        uint8_t limit = quotient ? std::min<uint8_t>(3, max_color + 1) : 3;
        for (uint8_t c = 1; c <= limit; ++c) {
            recolor(pos, c);
            dfs(pos + 1, std::max(max_color, c));
        }
    }
};

// Canonical (or plain) coloring prefixes of a given length, in
// lexicographic order.
void gen_prefixes(int64_t len, bool quotient, std::vector<uint8_t>& cur,
                  uint8_t max_color, std::vector<std::vector<uint8_t>>& out) {
    if (static_cast<int64_t>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    uint8_t limit = quotient ? std::min<uint8_t>(3, max_color + 1) : 3;
    for (uint8_t c = 1; c <= limit; ++c) {
        cur.push_back(c);
        gen_prefixes(len, quotient, cur, std::max(max_color, c), out);
        cur.pop_back();
    }
}

} // namespace

SearchRecord exhaustive_search(Objective obj, const LinearEquation& eq,
                               const GroundSet& ground, const ExhaustiveOptions& opts) {
    int64_t n = ground.size();
    if (n < 3) throw SurjectivityError("exhaustive_search: needs n >= 3");
    if (n > opts.guard_n && !opts.allow_large)
        throw SearchGuardError("exhaustive_search: n > guard (" +
                               std::to_string(opts.guard_n) +
                               "); set allow_large to override");

    std::vector<std::vector<int64_t>> affine_perms;
    if (opts.affine_symmetry) {
        if (ground.kind() != GroundKind::Cyclic)
            throw UnsupportedEquationError(
                "affine symmetry quotient is only sound over Z_n");
        if (!opts.quotient_labels)
            throw std::invalid_argument(
                "affine symmetry quotient requires label canonicalization");
        // x -> sigma*x + t preserves {ax + by = cz} for sigma = -1 always and
        // for every t exactly when a + b - c == 0 (mod n).
        bool translations = (eq.a() + eq.b() - eq.c()) % n == 0;
        for (int sigma : {1, -1}) {
            for (int64_t t = 0; t < (translations ? n : 1); ++t) {
                if (sigma == 1 && t == 0) continue; // identity
                std::vector<int64_t> perm(static_cast<size_t>(n));
                for (int64_t e = 0; e < n; ++e)
                    perm[static_cast<size_t>(e)] = ((sigma * (e - t)) % n + n) % n;
                affine_perms.push_back(std::move(perm));
            }
        }
    }

    int64_t prefix_len = std::min<int64_t>(n, 6);
    std::vector<std::vector<uint8_t>> prefixes;
    {
        std::vector<uint8_t> cur;
        gen_prefixes(prefix_len, opts.quotient_labels, cur, 0, prefixes);
    }

    std::vector<ChunkResult> chunks(prefixes.size());
    auto run_chunk = [&](size_t idx) {
        DfsContext ctx(obj, eq, ground, opts.quotient_labels);
        if (!affine_perms.empty()) ctx.affine_perms = &affine_perms;
        uint8_t max_color = 0;
        for (int64_t pos = 0; pos < prefix_len; ++pos) {
            uint8_t c = prefixes[idx][static_cast<size_t>(pos)];
            ctx.recolor(pos, c);
            max_color = std::max(max_color, c);
        }
        ctx.dfs(prefix_len, max_color);
        chunks[idx] = std::move(ctx.result);
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1 || prefixes.size() <= 1) {
        for (size_t i = 0; i < prefixes.size(); ++i) run_chunk(i);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= prefixes.size()) return;
                    run_chunk(i);
                }
            });
        for (auto& th : pool) th.join();
    }

    // Deterministic merge in prefix order; strict improvement keeps the
    // lexicographically first optimal witness.
    bool found = false;
    int64_t best_value = 0;
    std::vector<uint8_t> best_colors;
    int64_t explored = 0;
    for (const ChunkResult& ch : chunks) {
        explored += ch.explored;
        if (!ch.found) continue;
        if (!found || objective_improves(obj, ch.value, best_value)) {
            found = true;
            best_value = ch.value;
            best_colors = ch.colors;
            if (opts.on_improvement) {
                SearchRecord partial{obj,  eq, ground, best_value, Coloring(ground, best_colors),
                                     explored, 0,  0,      false};
                opts.on_improvement(partial);
            }
        }
    }
    if (!found) throw std::logic_error("exhaustive_search: empty search space");

    return SearchRecord{obj,      eq, ground, best_value, Coloring(ground, best_colors),
                        explored, 0,  0,      true};
}

// ---------------------------------------------------------------------------
// Local search.
// ---------------------------------------------------------------------------

namespace {

RestartOutcome run_restart(Objective obj, const LinearEquation& eq, const GroundSet& ground,
                           uint64_t seed, int64_t budget, int restart) {
    Coloring start = restart == 0
                         ? construction_seed(obj, ground)
                         : random_surjective_coloring(ground, restart_stream_seed(seed, restart));
    std::vector<uint8_t> colors = start.colors();
    std::array<int64_t, 4> uses{};
    for (uint8_t c : colors) ++uses[c];

    RunningCounts counts = RunningCounts::from(count_classes(eq, ground, colors));
    int64_t explored = 1; // the seed evaluation
    int64_t moves_used = 0;
    int64_t n = ground.size();

    for (;;) {
        bool have_move = false;
        int64_t move_pos = -1;
        uint8_t move_color = 0;
        ClassDelta move_delta;
        int64_t best_candidate = counts.value(obj);
        bool out_of_budget = false;

        for (int64_t pos = 0; pos < n && !out_of_budget; ++pos) {
            uint8_t old = colors[static_cast<size_t>(pos)];
            if (uses[old] == 1) continue; // move would break surjectivity
            for (uint8_t c = 1; c <= 3; ++c) {
                if (c == old) continue;
                if (moves_used >= budget) {
                    out_of_budget = true;
                    break;
                }
                ++moves_used;
                ++explored;
                ClassDelta d = recolor_delta(eq, ground, colors, pos, c);
                int64_t candidate = counts.value(obj) +
                                    (obj == Objective::MaxRainbow ? d.rainbow : d.mono);
                if (objective_improves(obj, candidate, best_candidate)) {
                    best_candidate = candidate;
                    have_move = true;
                    move_pos = pos;
                    move_color = c;
                    move_delta = d;
                }
            }
        }

        if (out_of_budget || !have_move) break;
        counts.apply(move_delta);
        --uses[colors[static_cast<size_t>(move_pos)]];
        ++uses[move_color];
        colors[static_cast<size_t>(move_pos)] = move_color;
    }

    return RestartOutcome{restart, counts.value(obj), std::move(colors), explored};
}

} // namespace

SearchRecord local_search(Objective obj, const LinearEquation& eq,
                          const GroundSet& ground, const LocalSearchOptions& opts) {
    if (ground.size() < 3) throw SurjectivityError("local_search: needs n >= 3");
    if (opts.restarts < 1) throw std::invalid_argument("local_search: restarts must be >= 1");
    if (opts.budget < 0) throw std::invalid_argument("local_search: budget must be >= 0");

    int first = opts.resume ? opts.resume->next_restart : 0;
    if (first < 0 || first > opts.restarts)
        throw std::invalid_argument("local_search: resume restart out of range");

    int pending = opts.restarts - first;
    std::vector<RestartOutcome> outcomes(static_cast<size_t>(std::max(0, pending)));
    auto compute = [&](int k) {
        outcomes[static_cast<size_t>(k)] =
            run_restart(obj, eq, ground, opts.seed, opts.budget, first + k);
    };

    int threads = std::max(1, opts.threads);
    if (threads == 1 || pending <= 1) {
        for (int k = 0; k < pending; ++k) compute(k);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (;;) {
                    int k = next.fetch_add(1);
                    if (k >= pending) return;
                    compute(k);
                }
            });
        for (auto& th : pool) th.join();
    }

    bool have_best = false;
    int64_t best_value = 0;
    std::vector<uint8_t> best_colors;
    int64_t explored = 0;
    if (opts.resume) {
        have_best = true;
        best_value = opts.resume->best_value;
        best_colors = opts.resume->best_colors;
        explored = opts.resume->explored;
    }

    for (int k = 0; k < pending; ++k) {
        const RestartOutcome& out = outcomes[static_cast<size_t>(k)];
        explored += out.explored;
        if (!have_best || objective_improves(obj, out.value, best_value)) {
            have_best = true;
            best_value = out.value;
            best_colors = out.colors;
        }
        if (opts.on_restart) {
            SearchRecord running{obj,      eq,        ground,      best_value,
                                 Coloring(ground, best_colors), explored, opts.seed,
                                 opts.budget, false};
            opts.on_restart(out, running);
        }
    }
    if (!have_best) throw std::logic_error("local_search: nothing to do");

    return SearchRecord{obj,      eq,        ground,      best_value,
                        Coloring(ground, best_colors), explored, opts.seed,
                        opts.budget, false};
}

} // namespace rainbow
