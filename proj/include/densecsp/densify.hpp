#pragma once

#include "densecsp/freegame.hpp"
#include "densecsp/instance.hpp"
#include "densecsp/report.hpp"

namespace densecsp {

// Free-game embedding of an arbitrary instance: A and B are copies of V,
// each stored edge (u, v) becomes the live pair (a_u, b_v) and every other
// pair carries an always-false table.
struct DensifyResult {
  Instance game;
  std::vector<int> a_of;  // a_of[v] = v
  std::vector<int> b_of;  // b_of[v] = n + v
};

DensifyResult densify(const Instance& inst);

// 4 * E[satisfied] when every vertex independently picks x_v or y_v with
// probability 1/2 each. Exact integer (each edge contributes 0..4).
long long half_half_expectation_quarters(const Instance& inst,
                                         const std::vector<int>& x,
                                         const std::vector<int>& y);

// Derandomized rounding of a free-game assignment back to V: sweep vertices
// in ascending order, fixing the choice in {phi'(a_v), phi'(b_v)} that
// maximizes the exact conditional expectation (ties prefer phi'(a_v)). The
// result satisfies at least the initial 1/2-1/2 expectation, which is at
// least a quarter of the free-game satisfied count of phi'.
Assignment round_assignment(const Instance& inst, const DensifyResult& map,
                            const Assignment& phi_prime,
                            long long* expectation_quarters = nullptr);

struct DenseSolveDetail {
  long long fg_satisfied = 0;
  long long fg_edges = 0;
  int level = 0;
  long long expectation_quarters = 0;
};

struct DenseSolveOptions {
  std::uint64_t max_work = 10'000'000'000ULL;
  int max_level = 4;
  bool oracle_check = false;   // compute lambda with the oracle and report
                               // the end-to-end bound
  long long oracle_budget = -1;
};

// densify -> approx_free_game(i = ceil(1/gamma)) -> round_assignment.
SolveReport solve_dense_csp(const Instance& inst, double gamma,
                            std::uint64_t seed,
                            const DenseSolveOptions& options = {},
                            DenseSolveDetail* detail = nullptr);

}  // namespace densecsp
