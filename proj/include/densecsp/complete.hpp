#pragma once

#include <optional>

#include "densecsp/instance.hpp"
#include "densecsp/report.hpp"

namespace densecsp {

struct PruneOutcome {
  AlphabetRestriction sets;
  // First vertex whose set emptied, when the restriction is unsatisfiable.
  std::optional<int> emptied;
};

// Arc-consistency fixed point: repeatedly remove sigma_u from S_u while
// some v has no sigma_v in S_v with C_{(u,v)}(sigma_u, sigma_v) = 1. Never
// removes an optimal label of a satisfiable restricted instance.
PruneOutcome prune_arc_consistency(const Instance& inst, AlphabetRestriction S);

// Conditional-expectation sweep of the uniform-over-S_u random assignment:
// visits vertices in ascending order and keeps the candidate label with the
// maximum exact expectation (ties to the smallest label). Requires every
// S_u nonempty. The count achieved is at least the uniform expectation.
Assignment derandomized_uniform_assign(const Instance& inst,
                                       const AlphabetRestriction& S);

struct CompleteStats {
  std::uint64_t lookups = 0;  // constraint-table probes
  std::uint64_t calls = 0;    // recursion nodes
  std::uint64_t sweeps = 0;   // derandomized assignments executed
};

// Approx-CompleteGame_i. Requires a complete-graph instance; when it is
// satisfiable and every S_u contains an optimal label, the returned
// assignment has value at least (prod_u 1/|S_u|)^{1/(n*i)} >= q^{-1/i}.
// Throws UnsatisfiableError (naming the first emptied vertex) when the
// candidate sets collapse, which cannot happen under the precondition.
Assignment approx_complete_game(const Instance& inst, AlphabetRestriction S,
                                int level, CompleteStats* stats = nullptr);

// Wrapper producing a report with the exact q^{-1/i} guarantee.
SolveReport solve_complete(const Instance& inst, int level,
                           CompleteStats* stats = nullptr);

// Minimal i >= 1 with q^{1/i} <= 1 + eps_prime, decided by exact integer
// powering: (1+eps_prime)^i >= q.
int qptas_level(int q, const Rational& eps_prime);

// All-true tables on the non-edges; original tables (normalized to u < v
// orientation) elsewhere.
Instance complete_with_true_tables(const Instance& inst);

struct QptasDetail {
  int level = 0;
  long long completed_satisfied = 0;
  long long non_edges = 0;
  CompleteStats stats;
};

// QPTAS for satisfiable dense instances: complete the graph with dummy-true
// constraints, run approx_complete_game at i = ceil(ln q / ln(1+eps*delta))
// and report against the original instance, where the value is >= 1 - eps.
SolveReport qptas_dense(const Instance& inst, const Rational& epsilon,
                        std::uint64_t seed, QptasDetail* detail = nullptr);

}  // namespace densecsp
