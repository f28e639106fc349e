#pragma once

#include <optional>
#include <vector>

#include "densecsp/graph.hpp"
#include "densecsp/instance.hpp"

namespace densecsp {

// Exact optimum of an instance: the maximizing assignment (ties broken by
// the lexicographically smallest label vector), the satisfied edge set and
// the per-vertex degrees within it.
struct OptProfile {
  Assignment opt_assignment;
  long long opt_satisfied = 0;
  std::vector<int> e_opt;  // indices of edges satisfied by the optimum
  std::vector<int> d_opt;  // per-vertex degree in (V, e_opt)
};

// Enumeration budget: DENSECSP_BUDGET env var, else 10^8 evaluations.
long long default_oracle_budget();

// Exhaustive maximization over all assignments, or over the given
// AlphabetRestriction when provided (each vertex confined to its set).
// Throws BudgetError when the enumeration would exceed the budget and
// ValidationError when a restriction set is empty. budget < 0 means the
// default budget.
OptProfile brute_force_csp(const Instance& inst,
                           const std::optional<AlphabetRestriction>& restriction = {},
                           long long budget = -1);

struct DksOpt {
  std::vector<int> vertices;  // sorted, size k
  long long edges = 0;
};

// Exact densest k-subgraph by enumerating all C(n, k) subsets in
// lexicographic order (ties keep the first, i.e. lexicographically
// smallest, subset).
DksOpt brute_force_dks(const SimpleGraph& g, int k, long long budget = -1);

}  // namespace densecsp
