// rainbow: exact counting, extremal search, verification sweeps, and CSV
// exports for rainbow/monochromatic solutions of ax + by = cz under
// 3-colorings of [n] and Z_n.
//
// Subcommands: count, search, verify, sweep, construct. Output records are
// line-delimited JSON, each carrying its schema name and version; they are
// byte-stable across runs given identical flags (no timestamps, and a single
// writer serializes all records).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "rainbow/coloring_io.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/domain.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace rainbow;

// Exit codes: 0 success, 1 check/assertion or runtime failure, 2 usage error.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string decimal12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

LinearEquation parse_eq(const std::string& spec) {
    int64_t a, b, c;
    char comma1, comma2;
    std::istringstream in(spec);
    if (!(in >> a >> comma1 >> b >> comma2 >> c) || comma1 != ',' || comma2 != ',' ||
        !(in >> std::ws).eof())
        throw UsageError("--eq expects a,b,c (e.g. 1,1,2)");
    try {
        return LinearEquation(a, b, c);
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
}

std::vector<uint8_t> parse_pattern(const std::string& spec) {
    std::vector<uint8_t> pattern;
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '3')
            throw UsageError("periodic pattern entries must be 1, 2 or 3");
        pattern.push_back(static_cast<uint8_t>(tok[0] - '0'));
    }
    if (pattern.empty()) throw UsageError("empty periodic pattern");
    return pattern;
}

// Coloring specs: mod3-interval | mod3-cyclic | mod5-schur |
// periodic:<p1,p2,...> | file:<path> | random:<seed>
Coloring make_coloring(const std::string& spec, const GroundSet& ground) {
    auto require_kind = [&](GroundKind k, const char* name) {
        if (ground.kind() != k)
            throw UsageError(std::string(name) + " requires --" +
                             (k == GroundKind::Interval ? "interval" : "cyclic"));
    };
    try {
        if (spec == "mod3-interval") {
            require_kind(GroundKind::Interval, "mod3-interval");
            return mod3_interval(ground.size());
        }
        if (spec == "mod3-cyclic") {
            require_kind(GroundKind::Cyclic, "mod3-cyclic");
            return mod3_cyclic(ground.size());
        }
        if (spec == "mod5-schur") {
            require_kind(GroundKind::Cyclic, "mod5-schur");
            return mod5_schur_cyclic(ground.size());
        }
        if (spec.rfind("periodic:", 0) == 0)
            return periodic(ground, parse_pattern(spec.substr(9)));
        if (spec.rfind("random:", 0) == 0) {
            uint64_t seed = std::stoull(spec.substr(7));
            return random_surjective_coloring(ground, seed);
        }
        if (spec.rfind("file:", 0) == 0) {
            Coloring f = read_coloring_file(spec.substr(5));
            if (!(f.ground() == ground))
                throw UsageError("coloring file ground/size does not match flags");
            return f;
        }
    } catch (const SurjectivityError& e) {
        throw UsageError(e.what());
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    throw UsageError("unknown coloring spec: " + spec);
}

struct GroundFlags {
    bool interval = false;
    bool cyclic = false;
    int64_t n = 0;

    GroundSet resolve() const {
        if (interval == cyclic) throw UsageError("exactly one of --interval/--cyclic is required");
        if (n < 1) throw UsageError("-n must be >= 1");
        return GroundSet(interval ? GroundKind::Interval : GroundKind::Cyclic, n);
    }
    void attach(CLI::App* cmd) {
        cmd->add_flag("--interval", interval, "color the interval [n] = {1..n}");
        cmd->add_flag("--cyclic", cyclic, "color the cyclic group Z_n = {0..n-1}");
        cmd->add_option("-n,--n", n, "universe size")->required();
    }
};

json eq_json(const LinearEquation& eq) { return json::array({eq.a(), eq.b(), eq.c()}); }

std::string ground_name(const GroundSet& g) {
    return g.kind() == GroundKind::Interval ? "interval" : "cyclic";
}

json count_record(const LinearEquation& eq, const GroundSet& ground, const std::string& spec,
                  const CountSummary& s) {
    json rec;
    rec["record"] = "count_summary/1";
    rec["eq"] = eq_json(eq);
    rec["ground"] = ground_name(ground);
    rec["n"] = ground.size();
    rec["coloring"] = spec;
    rec["total"] = s.total;
    rec["rainbow"] = s.rainbow;
    rec["mono"] = s.mono;
    rec["dichromatic"] = s.dichromatic;
    if (s.total > 0) {
        rec["rb"] = s.rb().to_fraction_string();
        rec["rb_decimal"] = decimal12(s.rb().to_double());
        rec["mono_prop"] = s.mono_prop().to_fraction_string();
        rec["mono_prop_decimal"] = decimal12(s.mono_prop().to_double());
    } else { // no solutions at all, so no proportions
        rec["rb"] = nullptr;
        rec["rb_decimal"] = nullptr;
        rec["mono_prop"] = nullptr;
        rec["mono_prop_decimal"] = nullptr;
    }
    rec["rainbow_baseline"] = kRandomRainbowBaseline.to_fraction_string();
    rec["mono_baseline"] = kRandomMonoBaseline.to_fraction_string();
    return rec;
}

CountSummary run_count(const LinearEquation& eq, const Coloring& f, const std::string& method) {
    if (method == "fast") return count_fast(eq, f).summary;
    if (method == "oracle") return count_by_class(eq, f).summary;
    if (method == "auto")
        return (eq.a() == 1 && eq.b() == 1) ? count_fast(eq, f).summary
                                            : count_by_class(eq, f).summary;
    throw UsageError("--method must be auto, fast or oracle");
}

// ---------------------------------------------------------------------------
// search: streaming records and checkpoint/resume
// ---------------------------------------------------------------------------

json search_config_json(const std::string& mode, Objective obj, const LinearEquation& eq,
                        const GroundSet& ground, uint64_t seed, int64_t budget, int restarts) {
    json cfg;
    cfg["mode"] = mode;
    cfg["objective"] = obj == Objective::MaxRainbow ? "max-rainbow" : "min-mono";
    cfg["eq"] = eq_json(eq);
    cfg["ground"] = ground_name(ground);
    cfg["n"] = ground.size();
    cfg["seed"] = seed;
    cfg["budget"] = budget;
    cfg["restarts"] = restarts;
    return cfg;
}

json record_from_search(const char* name, const SearchRecord& rec) {
    json j;
    j["record"] = name;
    j["objective"] = rec.objective == Objective::MaxRainbow ? "max-rainbow" : "min-mono";
    j["eq"] = eq_json(rec.eq);
    j["ground"] = ground_name(rec.ground);
    j["n"] = rec.ground.size();
    j["best_value"] = rec.best_value;
    j["witness"] = colors_to_string(rec.witness.colors());
    j["explored"] = rec.explored;
    j["seed"] = rec.seed;
    j["budget"] = rec.budget;
    j["complete"] = rec.complete;
    return j;
}

struct CheckpointState {
    std::optional<ResumeState> resume;
    std::optional<std::string> final_line; // a finished run was found
    bool fresh = true;
    bool has_torn_tail = false; // bytes after the last complete record
    uintmax_t clean_size = 0;   // offset just past the last complete record
};

// Scan an existing checkpoint: the header must match the current
// configuration; complete records advance the resume point; a truncated
// final line is tolerated and dropped (the caller truncates it away before
// appending).
CheckpointState load_checkpoint(const std::string& path, const json& config) {
    CheckpointState state;
    std::ifstream in(path, std::ios::binary);
    if (!in) return state;
    std::ostringstream all;
    all << in.rdbuf();
    std::string buf = all.str();

    bool have_header = false;
    size_t pos = 0;
    while (pos < buf.size()) {
        size_t nl = buf.find('\n', pos);
        if (nl == std::string::npos) break; // torn final line
        std::string line = buf.substr(pos, nl - pos);
        pos = nl + 1;
        if (!line.empty()) {
            json rec;
            try {
                rec = json::parse(line);
            } catch (const json::parse_error&) {
                throw std::runtime_error("corrupt checkpoint: unparseable record");
            }
            std::string kind = rec.value("record", "");
            if (kind == "search_header/1") {
                if (rec.value("config", json()) != config)
                    throw std::runtime_error(
                        "unresumable checkpoint: configuration does not match flags");
                have_header = true;
            } else if (kind == "search_checkpoint/1") {
                if (!have_header) throw std::runtime_error("corrupt checkpoint: missing header");
                ResumeState rs;
                rs.next_restart = rec.at("restart").get<int>() + 1;
                rs.best_value = rec.at("best_value").get<int64_t>();
                rs.explored = rec.at("explored").get<int64_t>();
                std::istringstream cols(rec.at("witness").get<std::string>());
                int c;
                while (cols >> c) rs.best_colors.push_back(static_cast<uint8_t>(c));
                state.resume = rs;
            } else if (kind == "search_final/1") {
                if (!have_header) throw std::runtime_error("corrupt checkpoint: missing header");
                state.final_line = line;
            }
        }
        state.clean_size = pos;
    }
    state.has_torn_tail = state.clean_size < buf.size();
    state.fresh = !have_header;
    return state;
}

// ---------------------------------------------------------------------------

int cmd_count(const std::string& eq_spec, const GroundFlags& gf, const std::string& coloring_spec,
              const std::string& method) {
    LinearEquation eq = parse_eq(eq_spec);
    GroundSet ground = gf.resolve();
    Coloring f = make_coloring(coloring_spec, ground);
    CountSummary s = run_count(eq, f, method);
    std::cout << count_record(eq, ground, coloring_spec, s).dump() << "\n";
    return 0;
}

int cmd_construct(const GroundFlags& gf, const std::string& coloring_spec,
                  const std::string& out_path) {
    GroundSet ground = gf.resolve();
    Coloring f = make_coloring(coloring_spec, ground);
    if (out_path.empty() || out_path == "-") {
        std::cout << format_coloring(f);
    } else {
        write_coloring_file(out_path, f);
    }
    return 0;
}

int cmd_sweep(const std::string& eq_spec, const GroundFlags& gf, const std::string& coloring_spec,
              int64_t n_from, int64_t n_to, const std::string& out_path,
              const std::string& method) {
    if (coloring_spec.rfind("file:", 0) == 0)
        throw UsageError("sweep needs a generator coloring spec, not file:");
    LinearEquation eq = parse_eq(eq_spec);
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open sweep output: " + out_path);
    out << "n,total,rainbow,mono,dichromatic,rb_decimal,rb_fraction\n";
    for (int64_t n = n_from; n <= n_to; ++n) {
        GroundFlags gfn = gf;
        gfn.n = n;
        GroundSet ground = gfn.resolve();
        std::string spec = coloring_spec;
        if (spec.rfind("random:", 0) == 0) {
            // Derive a per-n stream from the base seed so rows stay independent.
            SplitMix64 mix(std::stoull(spec.substr(7)) ^ (0x9E3779B97F4A7C15ULL * (uint64_t)n));
            spec = "random:" + std::to_string(mix.next());
        }
        Coloring f = make_coloring(spec, ground);
        CountSummary s = run_count(eq, f, method);
        std::string rb_dec = s.total > 0 ? decimal12(s.rb().to_double()) : "";
        std::string rb_frac = s.total > 0 ? s.rb().to_fraction_string() : "";
        out << n << "," << s.total << "," << s.rainbow << "," << s.mono << ","
            << s.dichromatic << "," << rb_dec << "," << rb_frac << "\n";
    }
    if (!out) throw std::runtime_error("sweep write failed: " + out_path);
    return 0;
}

int cmd_verify(const std::string& suite, int64_t max_n, uint64_t seed) {
    std::vector<CheckReport> reports;
    try {
        reports = run_suite(suite, max_n, seed);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool all_pass = true;
    for (const CheckReport& rep : reports) {
        json rec;
        rec["record"] = "verify_check/1";
        rec["name"] = rep.name;
        rec["pass"] = rep.pass;
        rec["details"] = rep.details;
        std::cout << rec.dump() << "\n";
        all_pass = all_pass && rep.pass;
    }
    return all_pass ? 0 : 1;
}

int cmd_search(const std::string& eq_spec, const GroundFlags& gf, const std::string& objective,
               const std::string& mode, uint64_t seed, int64_t budget, int restarts, int threads,
               bool allow_large, bool affine_symmetry, const std::string& checkpoint) {
    LinearEquation eq = parse_eq(eq_spec);
    GroundSet ground = gf.resolve();
    Objective obj;
    if (objective == "max-rainbow")
        obj = Objective::MaxRainbow;
    else if (objective == "min-mono")
        obj = Objective::MinMono;
    else
        throw UsageError("--objective must be max-rainbow or min-mono");

    if (mode == "exhaustive") {
        json config = search_config_json("exhaustive", obj, eq, ground, 0, 0, 0);
        if (!checkpoint.empty()) {
            CheckpointState st = load_checkpoint(checkpoint, config);
            if (st.final_line) { // finished earlier: re-emit the identical record
                std::cout << *st.final_line << "\n";
                return 0;
            }
        }
        ExhaustiveOptions opts;
        opts.threads = threads;
        opts.allow_large = allow_large;
        opts.affine_symmetry = affine_symmetry;
        opts.on_improvement = [&](const SearchRecord& rec) {
            std::cout << record_from_search("search_improvement/1", rec).dump() << "\n";
        };
        SearchRecord rec = exhaustive_search(obj, eq, ground, opts);
        std::string final_line = record_from_search("search_final/1", rec).dump();
        std::cout << final_line << "\n";
        if (!checkpoint.empty()) {
            std::ofstream out(checkpoint, std::ios::trunc);
            json header;
            header["record"] = "search_header/1";
            header["config"] = config;
            out << header.dump() << "\n" << final_line << "\n";
        }
        return 0;
    }
    if (mode != "local") throw UsageError("--mode must be exhaustive or local");
    if (affine_symmetry) throw UsageError("--affine-symmetry applies to exhaustive mode only");

    json config = search_config_json("local", obj, eq, ground, seed, budget, restarts);
    LocalSearchOptions opts;
    opts.seed = seed;
    opts.budget = budget;
    opts.restarts = restarts;
    opts.threads = threads;

    std::ofstream ck;
    if (!checkpoint.empty()) {
        CheckpointState st = load_checkpoint(checkpoint, config);
        if (st.final_line) {
            std::cout << *st.final_line << "\n";
            return 0;
        }
        opts.resume = st.resume;
        if (st.has_torn_tail) std::filesystem::resize_file(checkpoint, st.clean_size);
        ck.open(checkpoint, std::ios::app);
        if (!ck) throw std::runtime_error("cannot open checkpoint: " + checkpoint);
        if (st.fresh) {
            json header;
            header["record"] = "search_header/1";
            header["config"] = config;
            ck << header.dump() << "\n" << std::flush;
        }
    }

    std::optional<int64_t> last_best;
    opts.on_restart = [&](const RestartOutcome& out, const SearchRecord& best) {
        if (ck.is_open()) {
            json rec;
            rec["record"] = "search_checkpoint/1";
            rec["restart"] = out.index;
            rec["restart_value"] = out.value;
            rec["best_value"] = best.best_value;
            rec["witness"] = colors_to_string(best.witness.colors());
            rec["explored"] = best.explored;
            ck << rec.dump() << "\n" << std::flush;
        }
        if (!last_best || objective_improves(best.objective, best.best_value, *last_best)) {
            last_best = best.best_value;
            std::cout << record_from_search("search_improvement/1", best).dump() << "\n";
        }
    };

    SearchRecord rec = local_search(obj, eq, ground, opts);
    std::string final_line = record_from_search("search_final/1", rec).dump();
    std::cout << final_line << "\n";
    if (ck.is_open()) ck << final_line << "\n" << std::flush;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact counting and extremal-coloring search for rainbow and monochromatic "
                 "solutions of ax + by = cz over [n] and Z_n"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "classify every solution under a coloring");
    std::string count_eq = "1,1,2", count_coloring, count_method = "auto";
    GroundFlags count_ground;
    count->add_option("--eq", count_eq, "equation coefficients a,b,c")->capture_default_str();
    count_ground.attach(count);
    count->add_option("--coloring", count_coloring,
                      "mod3-interval | mod3-cyclic | mod5-schur | periodic:<pattern> | "
                      "file:<path> | random:<seed>")
        ->required();
    count->add_option("--method", count_method, "auto | fast | oracle")->capture_default_str();

    // search
    auto* search = app.add_subcommand("search", "extremal-coloring search");
    std::string search_eq = "1,1,2", search_obj = "max-rainbow", search_mode = "exhaustive";
    std::string search_checkpoint;
    uint64_t search_seed = 0;
    int64_t search_budget = 100000;
    int search_restarts = 1, search_threads = 1;
    bool search_allow_large = false, search_affine = false;
    GroundFlags search_ground;
    search->add_option("--eq", search_eq, "equation coefficients a,b,c")->capture_default_str();
    search_ground.attach(search);
    search->add_option("--objective", search_obj, "max-rainbow | min-mono")
        ->capture_default_str();
    search->add_option("--mode", search_mode, "exhaustive | local")->capture_default_str();
    search->add_option("--seed", search_seed, "seed for all randomness")->capture_default_str();
    search->add_option("--budget", search_budget, "move evaluations per restart")
        ->capture_default_str();
    search->add_option("--restarts", search_restarts, "local-search restarts")
        ->capture_default_str();
    search->add_option("--threads", search_threads, "parallelism cap (results are identical "
                       "for any value)")
        ->capture_default_str();
    search->add_flag("--allow-large", search_allow_large,
                     "override the exhaustive size guard (n > 16)");
    search->add_flag("--affine-symmetry", search_affine,
                     "also quotient exhaustive search by the solution-preserving maps "
                     "x -> sigma*x + t of Z_n (negation always; translations when "
                     "a + b == c mod n)");
    search->add_option("--checkpoint", search_checkpoint,
                       "append-only checkpoint file for resume");

    // verify
    auto* verify = app.add_subcommand("verify", "run the finite-n claim checks");
    std::string verify_suite = "all";
    int64_t verify_max_n = 0;
    uint64_t verify_seed = 0x5eed;
    verify->add_option("--suite", verify_suite,
                       "lemma-interval | cyclic-total | no-dichromatic | main-theorem | "
                       "figure1 | nonrainbow-floor | schur | all")
        ->capture_default_str();
    verify->add_option("--max-n", verify_max_n, "cap every check's n range (0 = defaults)")
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "seed for sampled colorings")
        ->capture_default_str();

    // sweep
    auto* sweep = app.add_subcommand("sweep", "CSV of counts across an n range");
    std::string sweep_eq = "1,1,2", sweep_coloring, sweep_out, sweep_method = "auto";
    int64_t sweep_from = 0, sweep_to = -1;
    GroundFlags sweep_ground;
    sweep_ground.n = 1; // not used: the range drives n
    sweep->add_option("--eq", sweep_eq, "equation coefficients a,b,c")->capture_default_str();
    sweep->add_flag("--interval", sweep_ground.interval, "sweep over intervals [n]");
    sweep->add_flag("--cyclic", sweep_ground.cyclic, "sweep over cyclic groups Z_n");
    sweep->add_option("--n-from", sweep_from, "first n (inclusive)")->required();
    sweep->add_option("--n-to", sweep_to, "last n (inclusive; empty range allowed)")->required();
    sweep->add_option("--coloring", sweep_coloring, "generator coloring spec (no file:)")
        ->required();
    sweep->add_option("--out", sweep_out, "CSV output path")->required();
    sweep->add_option("--method", sweep_method, "auto | fast | oracle")->capture_default_str();

    // construct
    auto* construct = app.add_subcommand("construct", "dump a named construction");
    std::string construct_coloring, construct_out;
    GroundFlags construct_ground;
    construct_ground.attach(construct);
    construct->add_option("--coloring", construct_coloring, "coloring spec to materialize")
        ->required();
    construct->add_option("--out", construct_out, "coloring file path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2; // usage errors exit 2, --help exits 0
    }

    try {
        if (count->parsed())
            return cmd_count(count_eq, count_ground, count_coloring, count_method);
        if (search->parsed())
            return cmd_search(search_eq, search_ground, search_obj, search_mode, search_seed,
                              search_budget, search_restarts, search_threads, search_allow_large,
                              search_affine, search_checkpoint);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_max_n, verify_seed);
        if (sweep->parsed())
            return cmd_sweep(sweep_eq, sweep_ground, sweep_coloring, sweep_from, sweep_to,
                             sweep_out, sweep_method);
        if (construct->parsed())
            return cmd_construct(construct_ground, construct_coloring, construct_out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UnsupportedEquationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SearchGuardError& e) {
        std::cerr << "error: " << e.what() << " (pass --allow-large to override)\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
