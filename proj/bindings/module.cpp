#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bcp/claw.hpp"
#include "bcp/claw_free_bcp.hpp"
#include "bcp/connectivity.hpp"
#include "bcp/divide.hpp"
#include "bcp/gen.hpp"
#include "bcp/gl.hpp"
#include "bcp/oracle.hpp"

namespace py = pybind11;
using namespace bcp;

namespace {

Objective to_objective(const std::string& mode) {
    if (mode == "min-max") return Objective::min_max;
    if (mode == "max-min") return Objective::max_min;
    throw py::value_error("mode must be 'min-max' or 'max-min'");
}

std::vector<std::vector<int>> to_lists(const Partition& parts) {
    std::vector<std::vector<int>> out;
    out.reserve(parts.size());
    for (const auto& p : parts) out.push_back(p.members);
    return out;
}

VertexSet to_set(const WeightedGraph& g, const std::vector<int>& members) {
    return g.make_set(members);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Balanced connected graph partition algorithms";

    py::register_exception<Error>(m, "PartitionError");

    py::class_<WeightedGraph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges,
                         const std::vector<Weight>& weights) {
                 return build_graph(n, edges, weights);
             }),
             py::arg("n"), py::arg("edges"), py::arg("weights"))
        .def_property_readonly("n", &WeightedGraph::num_vertices)
        .def_property_readonly("total_weight", &WeightedGraph::total_weight)
        .def("weight", &WeightedGraph::weight)
        .def("neighbors", [](const WeightedGraph& g, int v) {
            return std::vector<int>(g.neighbors(v).begin(), g.neighbors(v).end());
        })
        .def("edges", &WeightedGraph::edges);

    m.def("min_max_bcp",
          [](const WeightedGraph& g, int k, int c) {
              BcpSolution sol = min_max_bcp(g, k, c);
              return py::dict(py::arg("parts") = to_lists(sol.parts),
                              py::arg("objective") = sol.objective,
                              py::arg("lambda_") = sol.lower_certificate);
          },
          py::arg("graph"), py::arg("k"), py::arg("c") = 3);

    m.def("max_min_bcp",
          [](const WeightedGraph& g, int k, int c) {
              BcpSolution sol = max_min_bcp(g, k, c);
              return py::dict(py::arg("parts") = to_lists(sol.parts),
                              py::arg("objective") = sol.objective,
                              py::arg("x_hat") = sol.lower_certificate);
          },
          py::arg("graph"), py::arg("k"), py::arg("c") = 3);

    m.def("bcep",
          [](int n, const std::vector<std::pair<int, int>>& edges,
             const std::vector<Weight>& edge_weights, int k, const std::string& mode) {
              std::vector<Weight> ones(n, 1);
              EdgeWeightedGraph ew{build_graph(n, edges, ones), edges, edge_weights};
              BcepSolution sol = bcep(ew, k, to_objective(mode));
              return py::dict(py::arg("edge_parts") = sol.edge_parts,
                              py::arg("objective") = sol.objective);
          },
          py::arg("n"), py::arg("edges"), py::arg("edge_weights"), py::arg("k"),
          py::arg("mode") = "min-max");

    m.def("gl_lower",
          [](const WeightedGraph& g, const std::vector<Weight>& targets) {
              return to_lists(gl_one_side(g, TargetWeights(targets), GlSide::lower));
          },
          py::arg("graph"), py::arg("targets"));

    m.def("gl_upper",
          [](const WeightedGraph& g, const std::vector<Weight>& targets) {
              return to_lists(gl_one_side(g, TargetWeights(targets), GlSide::upper));
          },
          py::arg("graph"), py::arg("targets"));

    m.def("gl_both",
          [](const WeightedGraph& g, const std::vector<Weight>& targets) {
              return to_lists(double_bounded_gl(g, TargetWeights(targets)));
          },
          py::arg("graph"), py::arg("targets"));

    m.def("gl_balanced",
          [](const WeightedGraph& g, int k) { return to_lists(balanced_kconnected(g, k)); },
          py::arg("graph"), py::arg("k"));

    m.def("divide_or_separator",
          [](const WeightedGraph& g, const std::vector<int>& subset, Weight lam)
              -> py::object {
              DivideResult r = divide_or_separator(g, to_set(g, subset), lam);
              if (r.kind == DivideResult::Kind::separator)
                  return py::dict(py::arg("separator") = r.separator);
              return py::dict(py::arg("split") =
                                  py::make_tuple(r.first.members, r.second.members));
          },
          py::arg("graph"), py::arg("subset"), py::arg("lam"));

    m.def("is_claw_free",
          [](const WeightedGraph& g, int c) -> py::object {
              auto witness = is_claw_free(g, c);
              if (!witness) return py::none();
              return py::make_tuple(witness->center, witness->leaves);
          },
          py::arg("graph"), py::arg("c") = 3);

    m.def("vertex_connectivity_at_least", &vertex_connectivity_at_least, py::arg("graph"),
          py::arg("k"));

    m.def("oracle_opt_bcp",
          [](const WeightedGraph& g, int k, const std::string& mode) {
              return oracle_opt_bcp(g, k, to_objective(mode));
          },
          py::arg("graph"), py::arg("k"), py::arg("mode") = "min-max");

    m.def("gen_clawfree",
          [](std::uint64_t seed, int base_n, int p_percent, Weight lo, Weight hi) {
              GenSpec spec;
              spec.seed = seed;
              spec.n = base_n;
              spec.p_percent = p_percent;
              spec.weight_lo = lo;
              spec.weight_hi = hi;
              return gen_clawfree(spec).line;
          },
          py::arg("seed"), py::arg("base_n"), py::arg("p_percent") = 50, py::arg("lo") = 1,
          py::arg("hi") = 1);

    m.def("gen_k_connected",
          [](std::uint64_t seed, int n, int k, int extra_edges, Weight lo, Weight hi) {
              GenSpec spec;
              spec.seed = seed;
              spec.n = n;
              spec.k = k;
              spec.model = GenModel::harary_plus;
              spec.extra_edges = extra_edges;
              spec.weight_lo = lo;
              spec.weight_hi = hi;
              return gen_k_connected(spec);
          },
          py::arg("seed"), py::arg("n"), py::arg("k"), py::arg("extra_edges") = 0,
          py::arg("lo") = 1, py::arg("hi") = 1);
}
