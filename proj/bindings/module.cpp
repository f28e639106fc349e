#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "densecsp/complete.hpp"
#include "densecsp/densify.hpp"
#include "densecsp/dks.hpp"
#include "densecsp/freegame.hpp"
#include "densecsp/generate.hpp"
#include "densecsp/io.hpp"
#include "densecsp/oracle.hpp"
#include "densecsp/projection.hpp"

namespace py = pybind11;
using namespace densecsp;

namespace {

Instance instance_from_json_str(const std::string& text) {
  return instance_from_json(Json::parse(text));
}

std::string instance_to_json_str(const Instance& inst) {
  return dump_deterministic(instance_to_json(inst));
}

SimpleGraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v] : edges) converted.push_back(Edge{u, v});
  return SimpleGraph(n, std::move(converted));
}

py::dict profile_to_dict(const OptProfile& profile) {
  py::dict d;
  d["opt_satisfied"] = profile.opt_satisfied;
  d["opt_labels"] = profile.opt_assignment.labels;
  d["e_opt"] = profile.e_opt;
  d["d_opt"] = profile.d_opt;
  return d;
}

std::string report_str(const SolveReport& report, const Instance& inst) {
  return dump_deterministic(report_to_json(report, &inst));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Approximation algorithms for dense Max 2-CSPs, free games, "
            "projection games on random bipartite graphs, and densest "
            "k-subgraph. Reports are deterministic JSON strings.";

  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def_static("from_json", &instance_from_json_str, py::arg("text"))
      .def("to_json", &instance_to_json_str)
      .def_property_readonly("kind", [](const Instance& i) { return kind_name(i.kind()); })
      .def_property_readonly("q", &Instance::q)
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("edge_count", &Instance::edge_count)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; })
      .def("__repr__", [](const Instance& i) {
        return "<Instance kind=" + kind_name(i.kind()) + " q=" + std::to_string(i.q()) +
               " n=" + std::to_string(i.n()) + " edges=" +
               std::to_string(i.edge_count()) + ">";
      });

  m.def("evaluate",
        [](const Instance& inst, const std::vector<int>& labels) {
          return evaluate(inst, Assignment(labels));
        },
        py::arg("instance"), py::arg("labels"),
        "Number of edges satisfied by the given labels.");

  m.def("density",
        [](const Instance& inst) { return rational_to_string(density(inst)); },
        py::arg("instance"), "Density |E|/n^2 as an exact fraction string.");

  m.def("validate", [](const Instance& inst) { return validate(inst); },
        py::arg("instance"), "List of invariant violations; empty means valid.");

  m.def("brute_force_csp",
        [](const Instance& inst, long long budget) {
          return profile_to_dict(brute_force_csp(inst, {}, budget));
        },
        py::arg("instance"), py::arg("budget") = -1,
        "Exact optimum with the satisfied-edge profile.");

  m.def("brute_force_dks",
        [](int n, const std::vector<std::pair<int, int>>& edges, int k,
           long long budget) {
          const DksOpt opt = brute_force_dks(graph_from_pairs(n, edges), k, budget);
          return py::make_tuple(opt.vertices, opt.edges);
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("budget") = -1,
        "Exact densest k-subgraph: (vertices, edge_count).");

  m.def("approx_free_game",
        [](const Instance& game, int level, std::uint64_t seed,
           std::uint64_t max_work, int max_level) {
          LevelParams params{level, max_work, max_level};
          const AlphabetRestriction S = AlphabetRestriction::full(game.n(), game.q());
          return report_str(approx_free_game(game, S, params, seed), game);
        },
        py::arg("game"), py::arg("level"), py::arg("seed") = 0,
        py::arg("max_work") = 10'000'000'000ULL, py::arg("max_level") = 4,
        "Approx-FreeGame_i with full candidate sets; returns a report JSON string.");

  m.def("solve_dense",
        [](const Instance& inst, double gamma, std::uint64_t seed, bool oracle_check) {
          DenseSolveOptions options;
          options.oracle_check = oracle_check;
          return report_str(solve_dense_csp(inst, gamma, seed, options), inst);
        },
        py::arg("instance"), py::arg("gamma"), py::arg("seed") = 0,
        py::arg("oracle_check") = false,
        "Densify, solve the free game at i = ceil(1/gamma), round back.");

  m.def("solve_complete",
        [](const Instance& inst, int level) {
          return report_str(solve_complete(inst, level), inst);
        },
        py::arg("instance"), py::arg("level"),
        "Approx-CompleteGame_i; the report carries the exact q^{-1/i} bound.");

  m.def("qptas_dense",
        [](const Instance& inst, const std::string& epsilon, std::uint64_t seed) {
          return report_str(qptas_dense(inst, parse_rational(epsilon), seed), inst);
        },
        py::arg("instance"), py::arg("epsilon"), py::arg("seed") = 0,
        "QPTAS for satisfiable dense instances; epsilon is a rational string.");

  m.def("generate_projection_game",
        [](int n, double p, int q, std::uint64_t seed, bool planted) {
          const ProjectionGame game =
              generate_projection_game(RandomGraphConfig{n, p, q, seed, planted});
          return py::make_tuple(game.inst, game.planted.labels);
        },
        py::arg("n"), py::arg("p"), py::arg("q"), py::arg("seed") = 0,
        py::arg("planted") = true,
        "Seeded G(n/2, n/2, p) projection game and its planted labels.");

  m.def("square_game",
        [](const Instance& game, int threads) {
          return square_game(game, threads).game;
        },
        py::arg("game"), py::arg("threads") = 1,
        "Squaring reduction from a projection game to a free game.");

  m.def("decode_projection",
        [](const Instance& game, const std::vector<int>& phi_on_a) {
          const DecodeResult decoded = decode_projection(game, phi_on_a);
          return py::make_tuple(decoded.full.labels, decoded.satisfied);
        },
        py::arg("game"), py::arg("labels_on_a"),
        "Plurality decode of A-side labels; returns (full labels, satisfied).");

  m.def("solve_projection",
        [](const Instance& game, double gamma, std::uint64_t seed,
           std::optional<double> p, int threads) {
          ProjectionSolveOptions options;
          options.p = p;
          options.threads = threads;
          return report_str(solve_projection(game, gamma, seed, options), game);
        },
        py::arg("game"), py::arg("gamma"), py::arg("seed") = 0,
        py::arg("p") = py::none(), py::arg("threads") = 1,
        "Square, solve the free game, decode; pass p to run the graph checks.");

  m.def("solve_dks",
        [](int n, const std::vector<std::pair<int, int>>& edges, int k,
           double gamma, int trials, std::uint64_t seed) {
          const DksResult result =
              solve_dks(graph_from_pairs(n, edges), k, gamma, trials, seed);
          py::dict d;
          d["vertices"] = result.vertices;
          d["edges"] = result.edges;
          d["density"] = rational_to_string(result.density);
          d["trials"] = result.trials;
          d["best_trial"] = result.best_trial;
          d["vacuous_guarantee"] = result.vacuous;
          return d;
        },
        py::arg("n"), py::arg("edges"), py::arg("k"), py::arg("gamma") = 0.5,
        py::arg("trials") = 0, py::arg("seed") = 0,
        "Repeated reduce/solve/decode; keeps the densest decoded subgraph.");

  m.def("planted_complete_instance",
        [](int n, int q, std::uint64_t seed, double table_density) {
          const auto planted = planted_complete_instance(n, q, seed, table_density);
          return py::make_tuple(planted.inst, planted.planted.labels);
        },
        py::arg("n"), py::arg("q"), py::arg("seed") = 0,
        py::arg("table_density") = 0.5);

  m.def("planted_dense_instance",
        [](int n, int q, int edges, std::uint64_t seed, double table_density) {
          const auto planted =
              planted_dense_instance(n, q, edges, seed, table_density);
          return py::make_tuple(planted.inst, planted.planted.labels);
        },
        py::arg("n"), py::arg("q"), py::arg("edges"), py::arg("seed") = 0,
        py::arg("table_density") = 0.5);

  m.def("random_free_game",
        [](int side, int q, std::uint64_t seed, double table_density) {
          return random_free_game(side, q, seed, table_density);
        },
        py::arg("side"), py::arg("q"), py::arg("seed") = 0,
        py::arg("table_density") = 0.5);

  m.def("petersen_graph", [] {
    const SimpleGraph g = petersen_graph();
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    return py::make_tuple(g.n(), edges);
  });
}
