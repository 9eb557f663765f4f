#include "rainbow/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace rainbow {

namespace {

// O(n^2) paths refuse anything bigger than this.
constexpr int64_t kOracleMaxN = int64_t{1} << 20;

void check_oracle_size(int64_t n) {
    if (n > kOracleMaxN)
        throw std::domain_error("counting: n exceeds the 2^20 guard for O(n^2) enumeration");
}

void check_three_colors(const Coloring& f) {
    if (f.num_colors() != 3)
        throw std::invalid_argument("counting: exactly 3 colors are supported");
}

// g = gcd(a, b) together with x, y such that a*x + b*y = g.
int64_t ext_gcd(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    int64_t x1, y1;
    int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

int64_t mod_reduce(int64_t v, int64_t n) {
    int64_t r = v % n;
    return r < 0 ? r + n : r;
}

// Solutions of c*z == s (mod n) form z0 + t*(n/g) for t in [0, g);
// this holds the pieces needed to produce them for any right-hand side.
struct CongruenceSolver {
    int64_t n = 1;
    int64_t g = 1;    // gcd(c, n)
    int64_t step = 1; // n / g
    int64_t inv = 0;  // inverse of (c/g) mod step

    CongruenceSolver(int64_t c, int64_t modulus) : n(modulus) {
        if (n < 1) throw std::domain_error("congruence: modulus must be >= 1");
        int64_t cr = mod_reduce(c, n);
        g = std::gcd(cr, n); // gcd(0, n) == n, so g >= 1
        step = n / g;
        if (step > 1) {
            int64_t x, y;
            ext_gcd((cr / g) % step, step, x, y);
            inv = mod_reduce(x, step);
        }
    }

    bool solvable(int64_t s_reduced) const { return s_reduced % g == 0; }

    // First (smallest) solution for a reduced right-hand side; call only
    // when solvable.
    int64_t first(int64_t s_reduced) const {
        if (step <= 1) return 0;
        return static_cast<int64_t>((__int128)(s_reduced / g) * inv % step);
    }
};

size_t tally_index(int cx, int cy, int cz) {
    return static_cast<size_t>((cx - 1) * 9 + (cy - 1) * 3 + (cz - 1));
}

void validate_colors(std::span<const uint8_t> colors) {
    for (uint8_t c : colors)
        if (c < 1 || c > 3)
            throw std::domain_error("counting: color out of range");
}

} // namespace

int64_t congruence_solution_count(int64_t c, int64_t s, int64_t n) {
    if (n < 1) throw std::domain_error("congruence: modulus must be >= 1");
    int64_t g = std::gcd(mod_reduce(c, n), n);
    if (g == 0) g = n;
    return mod_reduce(s, n) % g == 0 ? g : 0;
}

std::vector<int64_t> congruence_solutions(int64_t c, int64_t s, int64_t n) {
    CongruenceSolver solver(c, n);
    int64_t sr = mod_reduce(s, n);
    if (!solver.solvable(sr)) return {};
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(solver.g));
    int64_t z = solver.first(sr);
    for (int64_t t = 0; t < solver.g; ++t, z += solver.step) out.push_back(z);
    return out;
}

void enumerate_solutions(const LinearEquation& eq, const GroundSet& ground,
                         const std::function<void(int64_t, int64_t, int64_t)>& emit) {
    int64_t n = ground.size();
    check_oracle_size(n);
    if (ground.kind() == GroundKind::Interval) {
        for (int64_t x = 1; x <= n; ++x) {
            int64_t sx = eq.a() * x;
            for (int64_t y = 1; y <= n; ++y) {
                int64_t s = sx + eq.b() * y;
                if (s % eq.c() != 0) continue;
                int64_t z = s / eq.c();
                if (z >= 1 && z <= n) emit(x, y, z);
            }
        }
        return;
    }
    CongruenceSolver solver(eq.c(), n);
    int64_t am = mod_reduce(eq.a(), n), bm = mod_reduce(eq.b(), n);
    for (int64_t x = 0; x < n; ++x) {
        int64_t sx = am * x % n;
        for (int64_t y = 0; y < n; ++y) {
            int64_t s = sx + bm * y % n;
            if (s >= n) s -= n;
            if (!solver.solvable(s)) continue;
            int64_t z = solver.first(s);
            for (int64_t t = 0; t < solver.g; ++t, z += solver.step) emit(x, y, z);
        }
    }
}

std::vector<Triple> enumerate_solutions(const LinearEquation& eq, const GroundSet& ground) {
    std::vector<Triple> out;
    enumerate_solutions(eq, ground,
                        [&](int64_t x, int64_t y, int64_t z) { out.push_back({x, y, z}); });
    return out;
}

int64_t count_total_solutions(const LinearEquation& eq, const GroundSet& ground) {
    int64_t n = ground.size();
    check_oracle_size(n);
    int64_t total = 0;
    if (ground.kind() == GroundKind::Interval) {
        for (int64_t x = 1; x <= n; ++x) {
            int64_t sx = eq.a() * x;
            for (int64_t y = 1; y <= n; ++y) {
                int64_t s = sx + eq.b() * y;
                if (s % eq.c() == 0 && s / eq.c() >= 1 && s / eq.c() <= n) ++total;
            }
        }
        return total;
    }
    CongruenceSolver solver(eq.c(), n);
    int64_t am = mod_reduce(eq.a(), n), bm = mod_reduce(eq.b(), n);
    for (int64_t x = 0; x < n; ++x) {
        int64_t sx = am * x % n;
        for (int64_t y = 0; y < n; ++y) {
            int64_t s = sx + bm * y % n;
            if (s >= n) s -= n;
            if (solver.solvable(s)) total += solver.g;
        }
    }
    return total;
}

ClassCountMatrix count_classes(const LinearEquation& eq, const GroundSet& ground,
                               std::span<const uint8_t> colors) {
    int64_t n = ground.size();
    check_oracle_size(n);
    if (static_cast<int64_t>(colors.size()) != n)
        throw std::invalid_argument("count_classes: color array length != n");
    validate_colors(colors);

    std::array<int64_t, 27> tally{};
    const uint8_t* col = colors.data();

    if (ground.kind() == GroundKind::Interval) {
        int64_t c = eq.c();
        std::vector<int64_t> by(static_cast<size_t>(n) + 1);
        for (int64_t y = 1; y <= n; ++y) by[static_cast<size_t>(y)] = eq.b() * y;
        for (int64_t x = 1; x <= n; ++x) {
            int64_t sx = eq.a() * x;
            int cx = col[x - 1];
            for (int64_t y = 1; y <= n; ++y) {
                int64_t s = sx + by[static_cast<size_t>(y)];
                if (s % c != 0) continue;
                int64_t z = s / c;
                if (z < 1 || z > n) continue;
                ++tally[tally_index(cx, col[y - 1], col[z - 1])];
            }
        }
    } else {
        CongruenceSolver solver(eq.c(), n);
        // First z solution per residue, -1 when unsolvable.
        std::vector<int64_t> zfirst(static_cast<size_t>(n));
        for (int64_t s = 0; s < n; ++s)
            zfirst[static_cast<size_t>(s)] = solver.solvable(s) ? solver.first(s) : -1;
        std::vector<int64_t> by(static_cast<size_t>(n));
        int64_t bm = mod_reduce(eq.b(), n), am = mod_reduce(eq.a(), n);
        for (int64_t y = 0; y < n; ++y) by[static_cast<size_t>(y)] = bm * y % n;
        for (int64_t x = 0; x < n; ++x) {
            int64_t sx = am * x % n;
            int cx = col[x];
            for (int64_t y = 0; y < n; ++y) {
                int64_t s = sx + by[static_cast<size_t>(y)];
                if (s >= n) s -= n;
                int64_t z = zfirst[static_cast<size_t>(s)];
                if (z < 0) continue;
                int cxy = (cx - 1) * 9 + (col[y] - 1) * 3;
                for (int64_t t = 0; t < solver.g; ++t, z += solver.step)
                    ++tally[static_cast<size_t>(cxy + col[z] - 1)];
            }
        }
    }

    ClassCountMatrix m;
    m.m = tally;
    return m;
}

CountResult count_by_class(const LinearEquation& eq, const Coloring& coloring) {
    check_three_colors(coloring);
    ClassCountMatrix m = count_classes(eq, coloring.ground(), coloring.colors());
    return {m, CountSummary::from_matrix(m)};
}

// ---------------------------------------------------------------------------
// Exact convolution: direct multiply for small inputs, NTT mod 998244353
// above that. Both paths are exact integer arithmetic.
// ---------------------------------------------------------------------------

namespace {

constexpr uint64_t kNttMod = 998244353; // 119 * 2^23 + 1
constexpr uint64_t kNttRoot = 3;
constexpr size_t kNttMaxSize = size_t{1} << 23;
constexpr size_t kDirectThreshold = size_t{1} << 16; // on len_a * len_b

uint64_t pow_mod(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    base %= kNttMod;
    while (exp) {
        if (exp & 1) r = r * base % kNttMod;
        base = base * base % kNttMod;
        exp >>= 1;
    }
    return r;
}

// Twiddle factors for one transform size, level-major, cached per thread so
// repeated transforms of the same size skip the root bookkeeping.
struct NttPlan {
    std::vector<uint64_t> fwd, inv;
};

const NttPlan& plan_for(size_t size) {
    static thread_local std::unordered_map<size_t, NttPlan> cache;
    auto it = cache.find(size);
    if (it != cache.end()) return it->second;
    NttPlan plan;
    plan.fwd.resize(size);
    plan.inv.resize(size);
    size_t off = 0;
    for (size_t len = 2; len <= size; len <<= 1) {
        uint64_t wf = pow_mod(kNttRoot, (kNttMod - 1) / len);
        uint64_t wi = pow_mod(wf, kNttMod - 2);
        uint64_t f = 1, g = 1;
        for (size_t k = 0; k < len / 2; ++k) {
            plan.fwd[off + k] = f;
            plan.inv[off + k] = g;
            f = f * wf % kNttMod;
            g = g * wi % kNttMod;
        }
        off += len / 2;
    }
    return cache.emplace(size, std::move(plan)).first->second;
}

void ntt(std::vector<uint64_t>& a, bool invert) {
    size_t n = a.size();
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const NttPlan& plan = plan_for(n);
    const uint64_t* tw = (invert ? plan.inv : plan.fwd).data();
    size_t off = 0;
    for (size_t len = 2; len <= n; len <<= 1) {
        size_t half = len / 2;
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < half; ++k) {
                uint64_t u = a[i + k];
                uint64_t v = a[i + k + half] * tw[off + k] % kNttMod;
                a[i + k] = u + v < kNttMod ? u + v : u + v - kNttMod;
                a[i + k + half] = u >= v ? u - v : u + kNttMod - v;
            }
        }
        off += half;
    }
    if (invert) {
        uint64_t n_inv = pow_mod(n, kNttMod - 2);
        for (uint64_t& x : a) x = x * n_inv % kNttMod;
    }
}

} // namespace

namespace {

// Linear convolutions of the pairs (a,a), (a,b), (b,b) with the two forward
// transforms shared across products on the NTT path. Inputs are 0/1
// indicators, so every coefficient is below the modulus.
std::array<std::vector<int64_t>, 3> convolve_basis(const std::vector<int64_t>& a,
                                                   const std::vector<int64_t>& b) {
    size_t len = a.size();
    size_t out_len = 2 * len - 1;
    std::array<std::vector<int64_t>, 3> out;
    if (len * len <= kDirectThreshold) {
        for (auto& v : out) v.assign(out_len, 0);
        for (size_t i = 0; i < len; ++i) {
            if (a[i])
                for (size_t j = 0; j < len; ++j) {
                    out[0][i + j] += a[i] * a[j];
                    out[1][i + j] += a[i] * b[j];
                }
            if (b[i])
                for (size_t j = 0; j < len; ++j) out[2][i + j] += b[i] * b[j];
        }
        return out;
    }
    size_t size = 1;
    while (size < out_len) size <<= 1;
    if (size > kNttMaxSize)
        throw std::overflow_error("convolve_basis: input too long for NTT");
    std::vector<uint64_t> fa(size, 0), fb(size, 0);
    for (size_t i = 0; i < len; ++i) fa[i] = static_cast<uint64_t>(a[i]);
    for (size_t i = 0; i < len; ++i) fb[i] = static_cast<uint64_t>(b[i]);
    ntt(fa, false);
    ntt(fb, false);
    std::vector<uint64_t> prod(size);
    auto finish = [&](size_t which, const std::vector<uint64_t>& x,
                      const std::vector<uint64_t>& y) {
        for (size_t i = 0; i < size; ++i) prod[i] = x[i] * y[i] % kNttMod;
        std::vector<uint64_t> tmp = prod;
        ntt(tmp, true);
        out[which].resize(out_len);
        for (size_t i = 0; i < out_len; ++i) out[which][i] = static_cast<int64_t>(tmp[i]);
    };
    finish(0, fa, fa);
    finish(1, fa, fb);
    finish(2, fb, fb);
    return out;
}

// Cyclic convolutions of (a,a), (a,b), (b,b) when the length is a power of
// two: single transforms at length n, no padding or wrap step.
std::array<std::vector<int64_t>, 3> cyclic_convolve_basis_pow2(
    const std::vector<int64_t>& a, const std::vector<int64_t>& b) {
    size_t n = a.size();
    if (n > kNttMaxSize) throw std::overflow_error("cyclic convolution too long for NTT");
    std::vector<uint64_t> fa(n), fb(n);
    for (size_t i = 0; i < n; ++i) fa[i] = static_cast<uint64_t>(a[i]);
    for (size_t i = 0; i < n; ++i) fb[i] = static_cast<uint64_t>(b[i]);
    ntt(fa, false);
    ntt(fb, false);
    std::array<std::vector<int64_t>, 3> out;
    std::vector<uint64_t> tmp(n);
    auto finish = [&](size_t which, const std::vector<uint64_t>& x,
                      const std::vector<uint64_t>& y) {
        for (size_t i = 0; i < n; ++i) tmp[i] = x[i] * y[i] % kNttMod;
        std::vector<uint64_t> t = tmp;
        ntt(t, true);
        out[which].resize(n);
        for (size_t i = 0; i < n; ++i) out[which][i] = static_cast<int64_t>(t[i]);
    };
    finish(0, fa, fa);
    finish(1, fa, fb);
    finish(2, fb, fb);
    return out;
}

} // namespace

std::vector<int64_t> exact_convolution(std::span<const int64_t> a,
                                       std::span<const int64_t> b) {
    if (a.empty() || b.empty()) return {};
    int64_t sum_a = 0, sum_b = 0, max_a = 0, max_b = 0;
    for (int64_t v : a) {
        if (v < 0) throw std::domain_error("exact_convolution: negative input");
        sum_a += v;
        max_a = std::max(max_a, v);
    }
    for (int64_t v : b) {
        if (v < 0) throw std::domain_error("exact_convolution: negative input");
        sum_b += v;
        max_b = std::max(max_b, v);
    }
    // Every output coefficient is bounded by min(max_a * sum_b, max_b * sum_a);
    // exactness of the NTT path requires that bound to stay below the modulus.
    __int128 bound = std::min((__int128)max_a * sum_b, (__int128)max_b * sum_a);
    if (bound >= (__int128)kNttMod)
        throw std::overflow_error("exact_convolution: coefficients exceed NTT modulus");

    size_t out_len = a.size() + b.size() - 1;
    if ((size_t)a.size() * b.size() <= kDirectThreshold) {
        std::vector<int64_t> out(out_len, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

    size_t size = 1;
    while (size < out_len) size <<= 1;
    if (size > kNttMaxSize)
        throw std::overflow_error("exact_convolution: input too long for NTT");
    std::vector<uint64_t> fa(size, 0), fb(size, 0);
    for (size_t i = 0; i < a.size(); ++i) fa[i] = static_cast<uint64_t>(a[i]);
    for (size_t i = 0; i < b.size(); ++i) fb[i] = static_cast<uint64_t>(b[i]);
    ntt(fa, false);
    ntt(fb, false);
    for (size_t i = 0; i < size; ++i) fa[i] = fa[i] * fb[i] % kNttMod;
    ntt(fa, true);
    std::vector<int64_t> out(out_len);
    for (size_t i = 0; i < out_len; ++i) out[i] = static_cast<int64_t>(fa[i]);
    return out;
}

CountResult count_fast(const LinearEquation& eq, const Coloring& coloring) {
    check_three_colors(coloring);
    if (eq.a() != 1 || eq.b() != 1)
        throw UnsupportedEquationError(
            "count_fast: only equations x + y = cz (a = b = 1) are supported");

    const GroundSet& ground = coloring.ground();
    int64_t n = ground.size();
    const std::vector<uint8_t>& col = coloring.colors();

    // Indicator vectors indexed by element value (interval: slot 0 unused;
    // cyclic: by representative), so convolution index s is literally x + y.
    bool interval = ground.kind() == GroundKind::Interval;
    size_t len = static_cast<size_t>(interval ? n + 1 : n);
    int64_t support_lo = interval ? 1 : 0;
    int64_t support_hi = interval ? n : n - 1;
    std::array<std::vector<int64_t>, 3> ind;
    for (auto& v : ind) v.assign(len, 0);
    for (int64_t i = 0; i < n; ++i)
        ind[col[static_cast<size_t>(i)] - 1][static_cast<size_t>(interval ? i + 1 : i)] = 1;

    // Pair convolutions (1,1), (1,2), (2,2) are computed; pairs involving
    // color 3 follow exactly from the all-ones identity
    //   sum_j conv_ij[s] = #{x of color i : s - x lies in the support},
    // which over Z_n is simply the color-i element count.
    ClassCountMatrix m;
    if (interval) {
        std::array<std::vector<int64_t>, 3> basis = convolve_basis(ind[0], ind[1]);
        size_t out_len = 2 * len - 1;
        std::array<std::vector<int64_t>, 3> prefix;
        for (int i = 0; i < 3; ++i) {
            prefix[i].assign(len + 1, 0);
            for (size_t k = 0; k < len; ++k)
                prefix[i][k + 1] = prefix[i][k] + ind[i][k];
        }
        auto window = [&](int i, int64_t s) -> int64_t {
            int64_t lo = std::max<int64_t>(0, s - support_hi);
            int64_t hi = std::min<int64_t>(static_cast<int64_t>(len) - 1, s - support_lo);
            if (lo > hi) return 0;
            return prefix[i][static_cast<size_t>(hi) + 1] - prefix[i][static_cast<size_t>(lo)];
        };
        std::vector<int64_t> c13(out_len), c23(out_len), c33(out_len);
        for (size_t s = 0; s < out_len; ++s) {
            int64_t ss = static_cast<int64_t>(s);
            c13[s] = window(0, ss) - basis[0][s] - basis[1][s];
            c23[s] = window(1, ss) - basis[1][s] - basis[2][s];
            c33[s] = window(2, ss) - c13[s] - c23[s];
        }
        // conv_ij == conv_ji: pairs (x, y) with x + y = s are symmetric in (i, j).
        auto conv = [&](int i, int j) -> const std::vector<int64_t>& {
            if (i > j) std::swap(i, j);
            if (i == 1) return j == 1 ? basis[0] : j == 2 ? basis[1] : c13;
            if (i == 2) return j == 2 ? basis[2] : c23;
            return c33;
        };
        // z-side filtering happens after the convolution: index s maps to
        // z = s / c when divisible and in range.
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const std::vector<int64_t>& cv = conv(i, j);
                for (int64_t z = 1; z <= n; ++z) {
                    int64_t s = eq.c() * z;
                    if (s < static_cast<int64_t>(cv.size()) && cv[static_cast<size_t>(s)])
                        m.at(i, j, col[static_cast<size_t>(z - 1)]) +=
                            cv[static_cast<size_t>(s)];
                }
            }
    } else {
        // Cyclic pair convolutions of length n: a single transform when n is
        // a power of two, otherwise linear convolution folded mod n.
        std::array<std::vector<int64_t>, 3> base;
        if (n >= 2 && (n & (n - 1)) == 0) {
            base = cyclic_convolve_basis_pow2(ind[0], ind[1]);
        } else {
            std::array<std::vector<int64_t>, 3> lin = convolve_basis(ind[0], ind[1]);
            for (int p = 0; p < 3; ++p) {
                base[p].assign(static_cast<size_t>(n), 0);
                for (size_t s = 0; s < lin[p].size(); ++s)
                    base[p][s % static_cast<size_t>(n)] += lin[p][s];
            }
        }
        std::array<int64_t, 3> cnt{};
        for (uint8_t c : col) ++cnt[c - 1];
        std::vector<int64_t> c13(static_cast<size_t>(n)), c23(static_cast<size_t>(n)),
            c33(static_cast<size_t>(n));
        for (size_t s = 0; s < static_cast<size_t>(n); ++s) {
            c13[s] = cnt[0] - base[0][s] - base[1][s];
            c23[s] = cnt[1] - base[1][s] - base[2][s];
            c33[s] = cnt[2] - c13[s] - c23[s];
        }
        auto conv = [&](int i, int j) -> const std::vector<int64_t>& {
            if (i > j) std::swap(i, j);
            if (i == 1) return j == 1 ? base[0] : j == 2 ? base[1] : c13;
            if (i == 2) return j == 2 ? base[2] : c23;
            return c33;
        };
        // zbucket[s][k]: how many z of color k have c*z == s (mod n).
        std::vector<std::array<int64_t, 3>> zbucket(static_cast<size_t>(n), {0, 0, 0});
        int64_t cm = mod_reduce(eq.c(), n);
        for (int64_t z = 0; z < n; ++z)
            ++zbucket[static_cast<size_t>(cm * z % n)][col[static_cast<size_t>(z)] - 1];
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                const std::vector<int64_t>& cv = conv(i, j);
                for (int64_t s = 0; s < n; ++s) {
                    if (cv[static_cast<size_t>(s)] == 0) continue;
                    const auto& zb = zbucket[static_cast<size_t>(s)];
                    for (int k = 1; k <= 3; ++k)
                        if (zb[k - 1]) m.at(i, j, k) += cv[static_cast<size_t>(s)] * zb[k - 1];
                }
            }
    }

    return {m, CountSummary::from_matrix(m)};
}

TotalPrediction total_count_formula(const LinearEquation& eq, const GroundSet& ground) {
    int64_t n = ground.size();
    if (ground.kind() == GroundKind::Cyclic) {
        // Normalization guarantees gcd(a, b, c) = 1, which the n^2 count needs.
        return {Rational(n * n), true, "exactly n^2 over Z_n (gcd(a,b,c) = 1)"};
    }
    if (eq.a() != 1 || eq.b() != 1 || eq.c() < 2)
        throw UnsupportedEquationError(
            "total_count_formula: interval branch requires x + y = cz with c >= 2");
    return {Rational(n * n, eq.c()), false, "leading term n^2/c with O(n) error"};
}

DensityProfile density_profile(const Coloring& coloring) {
    check_three_colors(coloring);
    DensityProfile p;
    for (uint8_t c : coloring.colors()) ++p.counts[static_cast<size_t>(c - 1)];
    return p;
}

// ---------------------------------------------------------------------------
// Incidence delta: solutions incident to one element, enumerated without
// double counting as (x = v) | (y = v, x != v) | (z = v, x != v, y != v).
// ---------------------------------------------------------------------------

ClassDelta recolor_delta(const LinearEquation& eq, const GroundSet& ground,
                         std::span<const uint8_t> colors, int64_t index, int new_color) {
    int64_t n = ground.size();
    if (static_cast<int64_t>(colors.size()) != n)
        throw std::invalid_argument("recolor_delta: color array length != n");
    if (index < 0 || index >= n) throw std::out_of_range("recolor_delta: bad index");
    if (new_color < 1 || new_color > 3)
        throw std::domain_error("recolor_delta: color out of range");

    int old_color = colors[static_cast<size_t>(index)];
    ClassDelta d;
    if (new_color == old_color) return d;

    int64_t v = ground.element_at(index);
    auto color_old = [&](int64_t e) { return (int)colors[static_cast<size_t>(ground.index_of(e))]; };
    auto color_new = [&](int64_t e) { return e == v ? new_color : color_old(e); };
    auto visit = [&](int64_t x, int64_t y, int64_t z) {
        SolutionClass before = classify_colors(color_old(x), color_old(y), color_old(z));
        SolutionClass after = classify_colors(color_new(x), color_new(y), color_new(z));
        if (before == after) return;
        auto bump = [&](SolutionClass c, int64_t inc) {
            switch (c) {
                case SolutionClass::Rainbow: d.rainbow += inc; break;
                case SolutionClass::Monochromatic: d.mono += inc; break;
                case SolutionClass::Dichromatic: d.dichromatic += inc; break;
            }
        };
        bump(before, -1);
        bump(after, +1);
    };

    if (ground.kind() == GroundKind::Interval) {
        for (int64_t y = 1; y <= n; ++y) { // x = v
            int64_t s = eq.a() * v + eq.b() * y;
            if (s % eq.c() == 0) {
                int64_t z = s / eq.c();
                if (z >= 1 && z <= n) visit(v, y, z);
            }
        }
        for (int64_t x = 1; x <= n; ++x) { // y = v, x != v
            if (x == v) continue;
            int64_t s = eq.a() * x + eq.b() * v;
            if (s % eq.c() == 0) {
                int64_t z = s / eq.c();
                if (z >= 1 && z <= n) visit(x, v, z);
            }
        }
        int64_t t = eq.c() * v;
        for (int64_t x = 1; x <= n; ++x) { // z = v, x != v, y != v
            if (x == v) continue;
            int64_t rest = t - eq.a() * x;
            if (rest <= 0 || rest % eq.b() != 0) continue;
            int64_t y = rest / eq.b();
            if (y >= 1 && y <= n && y != v) visit(x, y, v);
        }
        return d;
    }

    CongruenceSolver zc(eq.c(), n);
    int64_t am = mod_reduce(eq.a(), n), bm = mod_reduce(eq.b(), n);
    auto z_emit = [&](int64_t x, int64_t y) {
        int64_t s = (am * (x % n) + bm * (y % n)) % n;
        if (!zc.solvable(s)) return;
        int64_t z = zc.first(s);
        for (int64_t t = 0; t < zc.g; ++t, z += zc.step) visit(x, y, z);
    };
    for (int64_t y = 0; y < n; ++y) z_emit(v, y); // x = v
    for (int64_t x = 0; x < n; ++x)
        if (x != v) z_emit(x, v); // y = v
    CongruenceSolver yc(eq.b(), n);
    int64_t target = mod_reduce(eq.c() % n * (v % n), n);
    for (int64_t x = 0; x < n; ++x) { // z = v
        if (x == v) continue;
        int64_t s = mod_reduce(target - am * x % n, n);
        if (!yc.solvable(s)) continue;
        int64_t y = yc.first(s);
        for (int64_t t = 0; t < yc.g; ++t, y += yc.step)
            if (y != v) visit(x, y, v);
    }
    return d;
}

} // namespace rainbow
