#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "json.hpp"

#include "rainbow/coloring_io.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/counting.hpp"
#include "rainbow/domain.hpp"
#include "rainbow/search.hpp"
#include "rainbow/verify.hpp"

namespace py = pybind11;
using namespace rainbow;

namespace {

GroundKind kind_from_string(const std::string& kind) {
    if (kind == "interval") return GroundKind::Interval;
    if (kind == "cyclic") return GroundKind::Cyclic;
    throw std::invalid_argument("ground kind must be 'interval' or 'cyclic'");
}

std::string kind_to_string(GroundKind k) {
    return k == GroundKind::Interval ? "interval" : "cyclic";
}

Objective objective_from_string(const std::string& name) {
    if (name == "max-rainbow") return Objective::MaxRainbow;
    if (name == "min-mono") return Objective::MinMono;
    throw std::invalid_argument("objective must be 'max-rainbow' or 'min-mono'");
}

py::object fraction(const Rational& r) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(r.num(), r.den());
}

std::string class_name(SolutionClass c) {
    switch (c) {
        case SolutionClass::Rainbow: return "rainbow";
        case SolutionClass::Monochromatic: return "mono";
        case SolutionClass::Dichromatic: return "dichromatic";
    }
    return "?";
}

py::dict count_dict(const CountResult& res) {
    py::dict d;
    d["total"] = res.summary.total;
    d["rainbow"] = res.summary.rainbow;
    d["mono"] = res.summary.mono;
    d["dichromatic"] = res.summary.dichromatic;
    if (res.summary.total > 0) {
        d["rb"] = fraction(res.summary.rb());
        d["mono_prop"] = fraction(res.summary.mono_prop());
    }
    py::list matrix;
    for (int64_t v : res.matrix.m) matrix.append(v);
    d["matrix"] = matrix;
    return d;
}

py::dict search_dict(const SearchRecord& rec) {
    py::dict d;
    d["objective"] = rec.objective == Objective::MaxRainbow ? "max-rainbow" : "min-mono";
    d["best_value"] = rec.best_value;
    d["witness"] = rec.witness;
    d["explored"] = rec.explored;
    d["seed"] = rec.seed;
    d["budget"] = rec.budget;
    d["complete"] = rec.complete;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact counting and extremal-coloring search for rainbow and monochromatic "
              "solutions of ax + by = cz over [n] and Z_n";

    py::register_exception<SurjectivityError>(m, "SurjectivityError", PyExc_ValueError);
    py::register_exception<UnsupportedEquationError>(m, "UnsupportedEquationError",
                                                     PyExc_ValueError);
    py::register_exception<SearchGuardError>(m, "SearchGuardError", PyExc_ValueError);

    py::class_<GroundSet>(m, "GroundSet")
        .def(py::init([](const std::string& kind, int64_t n) {
                 return GroundSet(kind_from_string(kind), n);
             }),
             py::arg("kind"), py::arg("n"))
        .def_property_readonly("kind",
                               [](const GroundSet& g) { return kind_to_string(g.kind()); })
        .def_property_readonly("n", &GroundSet::size)
        .def("contains", &GroundSet::contains)
        .def("__eq__", [](const GroundSet& a, const GroundSet& b) { return a == b; })
        .def("__repr__", [](const GroundSet& g) {
            return "GroundSet('" + kind_to_string(g.kind()) + "', " +
                   std::to_string(g.size()) + ")";
        });

    py::class_<LinearEquation>(m, "LinearEquation")
        .def(py::init<int64_t, int64_t, int64_t>(), py::arg("a"), py::arg("b"), py::arg("c"))
        .def_property_readonly("a", &LinearEquation::a)
        .def_property_readonly("b", &LinearEquation::b)
        .def_property_readonly("c", &LinearEquation::c)
        .def("__eq__", [](const LinearEquation& a, const LinearEquation& b) { return a == b; })
        .def("__repr__", [](const LinearEquation& e) {
            return "LinearEquation(" + std::to_string(e.a()) + ", " + std::to_string(e.b()) +
                   ", " + std::to_string(e.c()) + ")";
        });

    py::class_<Coloring>(m, "Coloring")
        .def(py::init([](const GroundSet& g, const std::vector<int>& colors) {
                 std::vector<uint8_t> c(colors.begin(), colors.end());
                 return Coloring(g, std::move(c));
             }),
             py::arg("ground"), py::arg("colors"))
        .def_property_readonly("ground", &Coloring::ground)
        .def_property_readonly("colors",
                               [](const Coloring& f) {
                                   return std::vector<int>(f.colors().begin(), f.colors().end());
                               })
        .def("color_of", &Coloring::color_of)
        .def("__eq__", [](const Coloring& a, const Coloring& b) { return a == b; })
        .def("__len__", &Coloring::size)
        .def("__repr__", [](const Coloring& f) {
            return "Coloring(" + kind_to_string(f.ground().kind()) + ", n=" +
                   std::to_string(f.size()) + ")";
        });

    m.def("mod3_interval", &mod3_interval, py::arg("n"));
    m.def("mod3_cyclic", &mod3_cyclic, py::arg("n"));
    m.def("mod5_schur_cyclic", &mod5_schur_cyclic, py::arg("n"));
    m.def(
        "periodic",
        [](const GroundSet& g, const std::vector<int>& pattern) {
            return periodic(g, std::vector<uint8_t>(pattern.begin(), pattern.end()));
        },
        py::arg("ground"), py::arg("pattern"));
    m.def("random_coloring", &random_surjective_coloring, py::arg("ground"), py::arg("seed"));
    m.def("canonical_form", &canonical_form, py::arg("coloring"));

    m.def(
        "classify",
        [](int64_t x, int64_t y, int64_t z, const Coloring& f) {
            return class_name(classify(x, y, z, f));
        },
        py::arg("x"), py::arg("y"), py::arg("z"), py::arg("coloring"));
    m.def("is_solution", &is_solution, py::arg("eq"), py::arg("ground"), py::arg("x"),
          py::arg("y"), py::arg("z"));
    m.def(
        "progression_to_solution",
        [](int64_t a, int64_t d, const GroundSet& g) {
            Triple t = progression_to_solution({a, d}, g);
            return py::make_tuple(t.x, t.y, t.z);
        },
        py::arg("a"), py::arg("d"), py::arg("ground"));

    m.def(
        "enumerate_solutions",
        [](const LinearEquation& eq, const GroundSet& g) {
            py::list out;
            for (const Triple& t : enumerate_solutions(eq, g))
                out.append(py::make_tuple(t.x, t.y, t.z));
            return out;
        },
        py::arg("eq"), py::arg("ground"));
    m.def("congruence_solution_count", &congruence_solution_count, py::arg("c"), py::arg("s"),
          py::arg("n"));
    m.def("count_total_solutions", &count_total_solutions, py::arg("eq"), py::arg("ground"));

    m.def(
        "count_by_class",
        [](const LinearEquation& eq, const Coloring& f) { return count_dict(count_by_class(eq, f)); },
        py::arg("eq"), py::arg("coloring"));
    m.def(
        "count_fast",
        [](const LinearEquation& eq, const Coloring& f) { return count_dict(count_fast(eq, f)); },
        py::arg("eq"), py::arg("coloring"));
    m.def(
        "count",
        [](const LinearEquation& eq, const Coloring& f) {
            return count_dict(eq.a() == 1 && eq.b() == 1 ? count_fast(eq, f)
                                                         : count_by_class(eq, f));
        },
        py::arg("eq"), py::arg("coloring"),
        "Exact class counts; picks the convolution path when a = b = 1.");
    m.def(
        "density_profile",
        [](const Coloring& f) {
            DensityProfile p = density_profile(f);
            return py::make_tuple(p.counts[0], p.counts[1], p.counts[2]);
        },
        py::arg("coloring"));

    m.def(
        "exhaustive_search",
        [](const std::string& objective, const LinearEquation& eq, const GroundSet& g,
           bool quotient, int threads, bool allow_large) {
            ExhaustiveOptions opts;
            opts.quotient_labels = quotient;
            opts.threads = threads;
            opts.allow_large = allow_large;
            return search_dict(exhaustive_search(objective_from_string(objective), eq, g, opts));
        },
        py::arg("objective"), py::arg("eq"), py::arg("ground"), py::arg("quotient") = true,
        py::arg("threads") = 1, py::arg("allow_large") = false);
    m.def(
        "local_search",
        [](const std::string& objective, const LinearEquation& eq, const GroundSet& g,
           uint64_t seed, int64_t budget, int restarts, int threads) {
            LocalSearchOptions opts;
            opts.seed = seed;
            opts.budget = budget;
            opts.restarts = restarts;
            opts.threads = threads;
            return search_dict(local_search(objective_from_string(objective), eq, g, opts));
        },
        py::arg("objective"), py::arg("eq"), py::arg("ground"), py::arg("seed") = 0,
        py::arg("budget") = 100000, py::arg("restarts") = 1, py::arg("threads") = 1);

    m.def(
        "verify_suite",
        [](const std::string& name, int64_t max_n, uint64_t seed) {
            py::list out;
            for (const CheckReport& rep : run_suite(name, max_n, seed)) {
                py::dict d;
                d["name"] = rep.name;
                d["pass"] = rep.pass;
                d["details"] = py::module_::import("json").attr("loads")(rep.details.dump());
                out.append(d);
            }
            return out;
        },
        py::arg("name") = "all", py::arg("max_n") = 0, py::arg("seed") = 0x5eed);

    m.def("format_coloring", &format_coloring, py::arg("coloring"));
    m.def(
        "parse_coloring",
        [](const std::string& text) {
            std::istringstream in(text);
            return parse_coloring(in);
        },
        py::arg("text"));
}
