// Python module over the core library. Rationals cross the boundary as
// reduced strings like "5/3"; structured results cross as the library's
// canonical JSON text, and the package __init__ decodes them into dicts.
#include "semireflex/classify.hpp"
#include "semireflex/corpus.hpp"
#include "semireflex/ehrhart.hpp"
#include "semireflex/families.hpp"
#include "semireflex/io.hpp"
#include "semireflex/polytope.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace semireflex;

namespace {

HRep from_json_text(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw parse_error(std::string("polytope document: ") + e.what());
    }
    return polytope_from_json(j);
}

std::string to_json_string(const HRep& p, bool include_vertices) {
    return to_json_text(include_vertices ? polytope_to_json(p, enumerate_vertices(p))
                                         : polytope_to_json(p));
}

HRep generate_polytope(const std::string& family, const std::string& spec) {
    FamilySpec fs;
    if (family == "cube" || family == "simplex" || family == "cross") {
        std::size_t used = 0;
        int dim = 0;
        try {
            dim = std::stoi(spec, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != spec.size() || dim < 1)
            throw parse_error("generate: " + family + " needs a positive dimension, got \"" +
                              spec + "\"");
        fs.dim = dim;
        fs.family = family == "cube"      ? Family::cube
                    : family == "simplex" ? Family::simplex
                                          : Family::cross;
    } else if (family == "order" || family == "chain") {
        fs.family = family == "order" ? Family::order : Family::chain;
        fs.poset = parse_poset(spec);
    } else if (family == "quasimetric") {
        fs.family = Family::quasimetric;
        fs.graph = parse_graph(spec);
    } else {
        throw parse_error("generate: unknown family \"" + family + "\"");
    }
    return generate(fs);
}

HRep dual_polytope(const HRep& p) {
    const RatVector zero(static_cast<std::size_t>(p.dim), Rational(0));
    if (!contains(p, zero, true))
        throw error(
            "polar_dual: the origin is not strictly interior, so the polar dual is unbounded");
    return make_hrep(p.dim, polar_dual(enumerate_vertices(p)).halfspaces);
}

Rational positive_rational(const std::string& text, const char* what) {
    Rational r = parse_rational(text);
    if (!(r > 0)) throw error(std::string(what) + " must be positive");
    return r;
}

std::string step_json(const HRep& p, const std::string& s_max, bool strict) {
    return to_json_text(
        step_to_json(step_function(p, positive_rational(s_max, "s_max"), strict)));
}

std::string interior_step_json(const HRep& p, const std::string& s_max) {
    return to_json_text(
        step_to_json(interior_step_function(p, positive_rational(s_max, "s_max"))));
}

std::string classify_json(const HRep& p, const std::string& s_max) {
    return to_json_text(classification_to_json(classify(p, parse_rational(s_max))));
}

std::string duality_json(const HRep& p) {
    DualityReport r = check_reflexive_duality(p);
    Json j;
    j["origin_interior"] = r.origin_interior;
    j["reflexive"] = r.reflexive;
    j["both_semi_reflexive"] = r.both_semi_reflexive;
    j["matrix_form"] = r.matrix_form;
    j["agree"] = r.agree;
    j["notes"] = r.notes;
    return to_json_text(j);
}

std::vector<std::string> deep_point(const std::vector<std::vector<std::string>>& generators,
                                    const std::string& delta) {
    std::vector<RatVector> gens;
    for (const std::vector<std::string>& g : generators) {
        RatVector v;
        for (const std::string& c : g) v.push_back(parse_rational(c));
        gens.push_back(std::move(v));
    }
    IntVector x = cone_deep_point(gens, parse_rational(delta));
    std::vector<std::string> out;
    for (const Int& c : x) out.push_back(to_string(c));
    return out;
}

py::tuple run_check_theorems(int count, int dim_min, int dim_max, int bound,
                             std::uint64_t seed, int structured_weight, int general_weight,
                             const std::string& s_max, int threads) {
    CorpusConfig config{count, dim_min, dim_max, bound, seed, structured_weight,
                        general_weight};
    Rational window = positive_rational(s_max, "s_max");
    TheoremReport r = [&] {
        py::gil_scoped_release release;
        return check_theorems(config, window, threads);
    }();
    return py::make_tuple(r.text, r.failures);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact dilation counting and semi-reflexivity checks for rational polytopes";

    py::register_exception<error>(m, "Error", PyExc_ValueError);

    py::class_<HRep>(m, "Polytope",
                     "Bounded intersection of rational half-spaces; build one with "
                     "polytope_from_json or generate.")
        .def_property_readonly("dim", [](const HRep& p) { return p.dim; })
        .def_property_readonly("empty", [](const HRep& p) { return p.empty; })
        .def_property_readonly("inequalities",
                               [](const HRep& p) { return p.halfspaces.size(); })
        .def("__repr__", [](const HRep& p) {
            return "Polytope(dim=" + std::to_string(p.dim) +
                   ", inequalities=" + std::to_string(p.halfspaces.size()) +
                   (p.empty ? ", empty=True" : "") + ")";
        });

    m.def("polytope_from_json", &from_json_text, py::arg("text"),
          "Polytope from a {\"dim\", \"inequalities\"} JSON document; validates "
          "boundedness.");
    m.def("polytope_to_json", &to_json_string, py::arg("polytope"),
          py::arg("include_vertices") = false, "The document back as JSON text.");
    m.def("generate", &generate_polytope, py::arg("family"), py::arg("spec"),
          "Family member: cube/simplex/cross take a dimension, order/chain a poset "
          "text, quasimetric a graph text.");
    m.def("vertices_json", [](const HRep& p) { return to_json_text(vertices_to_json(enumerate_vertices(p))); },
          py::arg("polytope"), "Exact vertex set as JSON text.");
    m.def("polar_dual", &dual_polytope, py::arg("polytope"),
          "Polar dual; the origin must be strictly interior.");
    m.def("step_function_json", &step_json, py::arg("polytope"), py::arg("s_max"),
          py::arg("strict") = false,
          "Dilation counter on [0, s_max] as JSON text; strict counts the topological "
          "interior.");
    m.def("interior_step_function_json", &interior_step_json, py::arg("polytope"),
          py::arg("s_max"), "Counter of the relative interior as JSON text.");
    m.def("count",
          [](const HRep& p, const std::string& s, bool strict) {
              return count(p, parse_rational(s), strict);
          },
          py::arg("polytope"), py::arg("s"), py::arg("strict") = false,
          "Lattice points of s*P, evaluated directly from the inequalities.");
    m.def("classify_json", &classify_json, py::arg("polytope"), py::arg("s_max"),
          "Classification report as JSON text; s_max at least 2.");
    m.def("is_semi_reflexive_structural",
          [](const HRep& p) { return is_semi_reflexive_structural(p).semi_reflexive; },
          py::arg("polytope"),
          "Whether some representation has every offset in {0, 1} with integer normals "
          "on the offset-1 rows.");
    m.def("is_reflexive", &is_reflexive, py::arg("polytope"),
          "Integer vertices, origin strictly interior, integer dual vertices.");
    m.def("check_reflexive_duality_json", &duality_json, py::arg("polytope"),
          "The three reflexivity readings and their agreement as JSON text.");
    m.def("cone_deep_point", &deep_point, py::arg("generators"), py::arg("delta"),
          "Integer point of the spanned cone at distance above delta from every facet; "
          "coordinates come back as integer strings.");
    m.def("check_theorems", &run_check_theorems, py::arg("count"), py::arg("dim_min"),
          py::arg("dim_max"), py::arg("bound"), py::arg("seed"),
          py::arg("structured_weight"), py::arg("general_weight"), py::arg("s_max"),
          py::arg("threads"),
          "Invariant suite over a seeded corpus plus the family generators; returns "
          "(report text, failure count).");
}
