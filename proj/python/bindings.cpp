#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mixcage/bounds.hpp"
#include "mixcage/canonical.hpp"
#include "mixcage/constructions.hpp"
#include "mixcage/girth.hpp"
#include "mixcage/hamiltonian.hpp"
#include "mixcage/io.hpp"
#include "mixcage/search.hpp"

namespace py = pybind11;
using namespace mixcage;

namespace {

py::dict stats_dict(const SearchStats& s) {
    py::dict d;
    d["nodes"] = s.nodes;
    d["leaves"] = s.leaves;
    d["girth_prunes"] = s.girth_prunes;
    d["degree_prunes"] = s.degree_prunes;
    d["symmetry_prunes"] = s.symmetry_prunes;
    return d;
}

py::dict result_dict(const SearchResult& r) {
    py::list graphs, cases;
    for (const auto& fg : r.graphs) {
        py::dict g;
        g["graph"] = fg.graph;
        g["fingerprint"] = fg.form.hex();
        g["origin"] = fg.origin;
        graphs.append(g);
    }
    for (const auto& c : r.cases) {
        py::dict d;
        d["label"] = c.label;
        d["found"] = c.found;
        d["truncated"] = c.truncated;
        d["skipped"] = c.skipped;
        d["stats"] = stats_dict(c.stats);
        cases.append(d);
    }
    py::dict d;
    d["graphs"] = graphs;
    d["cases"] = cases;
    d["stats"] = stats_dict(r.totals);
    d["truncated"] = r.truncated;
    d["stopped_early"] = r.stopped_early;
    d["exhaustive"] = r.exhaustive;
    d["diagnostics"] = r.diagnostics;
    return d;
}

}  // namespace

PYBIND11_MODULE(_mixcage, m) {
    m.doc() = "Mixed graphs: constructions, girth, canonical forms, bounds and cage searches";

    py::class_<MixedGraph>(m, "MixedGraph")
        .def(py::init<int>(), py::arg("n"))
        .def(py::init<int, std::vector<std::pair<Vertex, Vertex>>, std::vector<std::pair<Vertex, Vertex>>>(),
             py::arg("n"), py::arg("edges"), py::arg("arcs"))
        .def_property_readonly("order", &MixedGraph::order)
        .def_property_readonly("edges", &MixedGraph::edges)
        .def_property_readonly("arcs", &MixedGraph::arcs)
        .def("has_edge", &MixedGraph::has_edge)
        .def("has_arc", &MixedGraph::has_arc)
        .def("relabeled", &MixedGraph::relabeled, py::arg("perm"))
        .def("__eq__", [](const MixedGraph& a, const MixedGraph& b) { return a == b; })
        .def("__repr__", [](const MixedGraph& g) {
            return "MixedGraph(n=" + std::to_string(g.order()) + ", edges=" + std::to_string(g.edges().size()) +
                   ", arcs=" + std::to_string(g.arcs().size()) + ")";
        });

    m.def("girth", &girth, "Mixed girth, or None if acyclic");
    m.def("brute_force_girth", &brute_force_girth, py::arg("g"), py::arg("cap"));
    m.def("degree_profile", [](const MixedGraph& g) {
        std::vector<std::tuple<int, int, int>> out;
        for (const auto& d : degree_profile(g)) out.emplace_back(d.deg, d.odeg, d.ideg);
        return out;
    });
    m.def("check_regular", &check_regular, py::arg("g"), py::arg("r"), py::arg("z"));
    m.def("check_totally_regular", &check_totally_regular);
    m.def("fingerprint", [](const MixedGraph& g) { return canonical_form(g).hex(); });
    m.def("canonical_labeling", [](const MixedGraph& g) { return canonical_form(g).labeling; });
    m.def("isomorphic", &isomorphic);

    m.def("moore_bound", &moore_bound, py::arg("r"), py::arg("depth"));
    m.def("ahm_bound", &ahm_bound, py::arg("r"), py::arg("g"));
    m.def("lower_bound", &lower_bound, py::arg("r"), py::arg("z"), py::arg("g"));
    m.def("f21", &f21, py::arg("g"));

    m.def("catalog", [] {
        std::vector<std::string> names;
        for (const auto& e : catalog()) names.push_back(e.usage);
        return names;
    });
    m.def("construct", [](const std::string& name, std::vector<int> params) { return construct({name, std::move(params)}); },
          py::arg("name"), py::arg("params") = std::vector<int>{});
    m.def("expected", [](const std::string& name, std::vector<int> params) {
        auto e = expected_parameters({name, std::move(params)});
        return std::make_tuple(e.r, e.z, e.g, e.order);
    }, py::arg("name"), py::arg("params") = std::vector<int>{});

    m.def("parse_mgf", &parse_mgf);
    m.def("emit_mgf", [](const MixedGraph& g) { return emit_mgf(g); });
    m.def("parse_graph6", &parse_graph6);
    m.def("encode_graph6", &encode_graph6);
    m.def("emit_dot", [](const MixedGraph& g) { return emit_dot(g); });
    m.def("lift", [](const std::string& spec_text) { return lift(parse_lift_spec(spec_text)); },
          "Build a cyclic lift from LiftSpec text");

    m.def("orient_hamiltonian", [](const MixedGraph& g, std::uint64_t budget) -> std::optional<MixedGraph> {
        auto hs = find_hamiltonian_cycle(g, budget);
        if (!hs.cycle) return std::nullopt;
        return orient_cycle(g, *hs.cycle);
    }, py::arg("g"), py::arg("budget") = 10'000'000);

    m.def("enumerate_partitions", [](int n, int g, bool equal_parts) {
        return enumerate_partitions(n, g, equal_parts ? PartitionFilter::EqualParts : PartitionFilter::All);
    }, py::arg("n"), py::arg("g"), py::arg("equal_parts") = false);

    m.def("search", [](int r, int z, int g, int n, const std::string& mode, std::vector<CyclePartition> partitions,
                       bool equal_parts, std::uint64_t budget, int jobs, bool first, bool symmetry, bool orbits) {
        SearchConfig cfg;
        cfg.r = r;
        cfg.z = z;
        cfg.g = g;
        cfg.n = n;
        cfg.node_budget = budget;
        cfg.jobs = jobs;
        cfg.stop_at_first = first;
        cfg.symmetry_pruning = symmetry;
        cfg.orbit_pruning = orbits;
        if (equal_parts) cfg.filter = PartitionFilter::EqualParts;
        if (!partitions.empty()) {
            cfg.filter = PartitionFilter::Explicit;
            cfg.partitions = std::move(partitions);
        }
        SearchResult res;
        {
            py::gil_scoped_release release;
            if (mode == "directed") {
                res = search_directed_first(cfg);
            } else if (mode == "undirected") {
                cfg.mode = SearchMode::UndirectedFirst;
                res = search_undirected_first(cfg, regular_scaffolds(n, r, g, budget));
            } else if (mode == "general") {
                cfg.mode = SearchMode::General;
                res = search_general(cfg);
            } else {
                throw std::invalid_argument("mode must be directed, undirected or general");
            }
        }
        return result_dict(res);
    }, py::arg("r"), py::arg("z"), py::arg("g"), py::arg("n"), py::arg("mode") = "directed",
       py::arg("partitions") = std::vector<CyclePartition>{}, py::arg("equal_parts") = false,
       py::arg("budget") = 100'000'000, py::arg("jobs") = 1, py::arg("first") = false, py::arg("symmetry") = true,
       py::arg("orbits") = true);
}
