#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "densecsp/instance.hpp"
#include "densecsp/oracle.hpp"
#include "densecsp/report.hpp"

namespace densecsp {

using Float50 = boost::multiprecision::cpp_bin_float_50;

struct LevelParams {
  int level = 1;
  std::uint64_t max_work = 10'000'000'000ULL;  // cap on (nq)^{2i}
  int max_level = 4;
};

// ceil(1/gamma) with a guard against float noise on exact reciprocals.
int level_for_gamma(double gamma);

// Level-1 greedy: each a in A gets the label of [q] maximizing
// sum_b (1/|S_b|) sum_{s_b in S_b} C_{(a,b)}(s_a, s_b) over the nonempty
// S_b, then each b gets the label of S_b satisfying the most edges against
// the fixed A side. Vertices with empty S_b get label 0. Ties break to the
// smallest label.
Assignment greedy_level1(const Instance& game, const AlphabetRestriction& S);

// S^{a,sigma_a}: filters every B-side set to the labels consistent with
// assigning sigma_a to a. Entries outside B are returned unchanged.
AlphabetRestriction choice_reduce(const Instance& game, int a, int sigma_a,
                                  const AlphabetRestriction& S);

// The level-i recursion: level 1 is the greedy; level j+1 recurses on
// every choice reduction (a ascending, sigma_a ascending), adds the greedy
// as the final candidate and keeps the first candidate with the maximum
// satisfied count.
SolveReport approx_free_game(const Instance& game, const AlphabetRestriction& S,
                             const LevelParams& params, std::uint64_t seed);

// The per-level guaranteed satisfied-edge count
//   n' * sum_b (d_b/n')^{(i+1)/2} (1/|S_b|)^{1/i} [opt_b in S_b],
// computed from an oracle profile. Terms with empty S_b contribute zero.
// The sum is irrational for i >= 2, so it is returned as a 50-digit float;
// compare with meets_guarantee_bound, which allows 1e-12 absolute slack.
Float50 guarantee_bound(const Instance& game, const OptProfile& profile,
                        const AlphabetRestriction& S, int level);

bool meets_guarantee_bound(long long satisfied, const Float50& bound);

}  // namespace densecsp
