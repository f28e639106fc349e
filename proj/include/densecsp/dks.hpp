#pragma once

#include <cstdint>
#include <vector>

#include "densecsp/densify.hpp"
#include "densecsp/graph.hpp"
#include "densecsp/instance.hpp"

namespace densecsp {

// Max 2-CSP embedding of Densest k-Subgraph: vertices are randomly
// partitioned into k nonempty parts, one variable per part; label l of
// variable i denotes the l-th vertex of the sorted part (labels past the
// part size alias its last vertex) and a pair of labels is allowed iff the
// denoted vertices are adjacent. Variable pairs with all-false tables are
// omitted, so the reduced instance can have zero edges.
struct DksReduction {
  Instance inst;
  std::vector<std::vector<int>> parts;  // per variable, sorted vertex lists
  std::uint64_t seed = 0;
};

DksReduction reduce_dks(const SimpleGraph& g, int k, std::uint64_t seed,
                        int max_retries = 1000);

// The k denoted vertices, sorted. Their induced edge count equals the
// satisfied count of phi on the reduced instance, exactly.
std::vector<int> decode_dks(const DksReduction& reduction, const Assignment& phi);

struct DksResult {
  std::vector<int> vertices;
  long long edges = 0;
  Rational density;  // edges / k^2
  int trials = 0;
  int best_trial = -1;
  bool vacuous = false;  // empty input graph; any guarantee is vacuous
};

int default_dks_trials(int n_vertices);

// `trials` independent reduce -> solve_dense_csp -> decode runs; keeps the
// densest decoded subgraph (ties to the earliest trial).
DksResult solve_dks(const SimpleGraph& g, int k, double gamma, int trials,
                    std::uint64_t seed, const DenseSolveOptions& options = {});

}  // namespace densecsp
