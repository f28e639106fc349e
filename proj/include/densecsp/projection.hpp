#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "densecsp/freegame.hpp"
#include "densecsp/instance.hpp"
#include "densecsp/report.hpp"

namespace densecsp {

struct RandomGraphConfig {
  int n = 0;          // total vertices, n/2 per side
  double p = 0.0;     // edge probability, in (0, 1]
  int q = 1;
  std::uint64_t seed = 0;
  bool planted = true;
};

// p >= 10 * sqrt(ln n / n), the density regime of the random-graph lemmas.
// Below it generation still works but the decode-chain bound is unreliable.
bool meets_density_precondition(int n, double p);

struct ProjectionGame {
  Instance inst;
  Assignment planted;
  bool planted_valid = false;  // true iff the game was planted
};

// G(n/2, n/2, p) projection game: each (a, b) pair becomes an edge
// independently with probability p; projections map the planted a-label to
// the planted b-label and are independent uniform elsewhere. Satisfiable by
// construction when planted. Same config, same bytes.
ProjectionGame generate_projection_game(const RandomGraphConfig& cfg);

struct DegreeReport {
  bool pass = false;
  double lower = 0.0;   // np/10
  double upper = 0.0;   // 10np
  std::vector<int> violators;
};

// Every vertex degree must lie in [np/10, 10np].
DegreeReport check_degree_bounds(const Instance& game, double p);

struct CommonNeighborReport {
  bool pass = false;
  double threshold = 0.0;  // np^2/10
  long long min_common = 0;
  std::vector<std::pair<int, int>> violators;
};

// Every left pair (a, a') must share at least np^2/10 neighbors.
CommonNeighborReport check_common_neighbors(const Instance& game, double p);

struct SquaredGame {
  Instance game;             // free game on the two halves of A
  std::vector<int> origin;   // squared vertex -> original A vertex
};

// Squaring reduction: A' and B' are the two index halves of A and
// (a1, a2) allows (s1, s2) iff pi_{(a1,b)}(s1) = pi_{(a2,b)}(s2) for every
// common neighbor b (vacuously all-true on empty intersections). Satisfiable
// whenever the input is.
SquaredGame square_game(const Instance& game, int threads = 1);

struct DecodeResult {
  Assignment full;          // labels on A then B
  long long satisfied = 0;  // edges of the projection game satisfied
};

// Copies phi over A and gives each b the plurality label among
// {pi_{(a,b)}(phi(a)) : a in Gamma(b)} (ties to the smallest label,
// isolated b gets 0).
DecodeResult decode_projection(const Instance& game,
                               const std::vector<int>& phi_on_a);

struct ProjectionSolveOptions {
  std::uint64_t max_work = 10'000'000'000ULL;
  int max_level = 4;
  std::optional<double> p;  // enables the random-graph checks
  int threads = 1;
};

struct ProjectionSolveDetail {
  long long squared_satisfied = 0;
  long long squared_edges = 0;
  bool degree_check = false;
  bool common_neighbor_check = false;
  bool checks_run = false;
};

// square_game -> approx_free_game(i = ceil(1/gamma)) -> decode. The report
// carries the decoded-value bound (squared value)/8000, marked verified
// only when both random-graph checks ran and passed.
SolveReport solve_projection(const Instance& game, double gamma,
                             std::uint64_t seed,
                             const ProjectionSolveOptions& options = {},
                             ProjectionSolveDetail* detail = nullptr);

}  // namespace densecsp
