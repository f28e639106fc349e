#pragma once

#include <cstdint>

#include "densecsp/graph.hpp"
#include "densecsp/instance.hpp"

namespace densecsp {

struct PlantedInstance {
  Instance inst;
  Assignment planted;  // satisfies every edge
};

// Complete-graph instance built around a hidden perfect assignment: the
// planted pair of every edge is allowed and each other pair independently
// with probability table_density.
PlantedInstance planted_complete_instance(int n, int q, std::uint64_t seed,
                                          double table_density = 0.5);

// Planted instance on a uniformly random graph with exactly edge_count
// edges.
PlantedInstance planted_dense_instance(int n, int q, int edge_count,
                                       std::uint64_t seed,
                                       double table_density = 0.5);

PlantedInstance planted_free_game(int side, int q, std::uint64_t seed,
                                  double table_density = 0.5);

// Not necessarily satisfiable: every table entry allowed independently with
// probability table_density.
Instance random_free_game(int side, int q, std::uint64_t seed,
                          double table_density = 0.5);

Instance random_instance(int n, int q, int edge_count, std::uint64_t seed,
                         double table_density = 0.5);

SimpleGraph random_graph(int n, double p, std::uint64_t seed);

// Background G(n, p) plus a clique planted on k random vertices.
SimpleGraph planted_clique_graph(int n, int k, double p, std::uint64_t seed);

// The classic 10-vertex 3-regular graph; densest 5-subgraph has 5 edges.
SimpleGraph petersen_graph();

}  // namespace densecsp
