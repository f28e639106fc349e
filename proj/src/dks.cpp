#include "densecsp/dks.hpp"

#include <algorithm>
#include <cmath>

#include "densecsp/rng.hpp"

namespace densecsp {

DksReduction reduce_dks(const SimpleGraph& g, int k, std::uint64_t seed,
                        int max_retries) {
  throw_if_invalid(g);
  const int n = g.n();
  if (k < 2 || k > n) throw ValidationError("k must lie in [2, n]");

  Rng rng(seed);
  std::vector<std::vector<int>> parts;
  bool ok = false;
  for (int attempt = 0; attempt < max_retries && !ok; ++attempt) {
    parts.assign(static_cast<std::size_t>(k), {});
    for (int v = 0; v < n; ++v)
      parts[static_cast<std::size_t>(rng.label(k))].push_back(v);
    ok = std::none_of(parts.begin(), parts.end(),
                      [](const std::vector<int>& p) { return p.empty(); });
  }
  if (!ok)
    throw RetryError(max_retries,
                     "no nonempty partition into " + std::to_string(k) +
                         " parts after " + std::to_string(max_retries) +
                         " retries; rerun with a different seed");
  // Parts collect vertices in ascending order already; labels index into them.

  int q = 1;
  for (const auto& p : parts) q = std::max(q, static_cast<int>(p.size()));

  std::vector<Edge> edges;
  std::vector<ConstraintTable> tables;
  for (int i = 0; i < k; ++i) {
    const auto& pi_part = parts[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      const auto& pj_part = parts[static_cast<std::size_t>(j)];
      ConstraintTable table(q);
      bool live = false;
      for (int li = 0; li < q; ++li) {
        const int vi = pi_part[std::min<std::size_t>(static_cast<std::size_t>(li),
                                                     pi_part.size() - 1)];
        for (int lj = 0; lj < q; ++lj) {
          const int vj = pj_part[std::min<std::size_t>(static_cast<std::size_t>(lj),
                                                       pj_part.size() - 1)];
          if (g.adjacent(vi, vj)) {
            table.set(li, lj);
            live = true;
          }
        }
      }
      if (live) {
        edges.push_back(Edge{i, j});
        tables.push_back(std::move(table));
      }
    }
  }

  return DksReduction{Instance(Kind::General, q, k, std::move(edges), std::move(tables)),
                      std::move(parts), seed};
}

std::vector<int> decode_dks(const DksReduction& reduction, const Assignment& phi) {
  const int k = reduction.inst.n();
  if (phi.size() != k)
    throw InvalidAssignmentError("assignment must cover all " + std::to_string(k) +
                                 " variables");
  std::vector<int> vertices;
  vertices.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto& part = reduction.parts[static_cast<std::size_t>(i)];
    const int label = phi.labels[static_cast<std::size_t>(i)];
    if (label < 0 || label >= reduction.inst.q())
      throw InvalidAssignmentError("label out of range");
    vertices.push_back(part[std::min<std::size_t>(static_cast<std::size_t>(label),
                                                  part.size() - 1)]);
  }
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

int default_dks_trials(int n_vertices) {
  const int log2n = static_cast<int>(std::ceil(std::log2(std::max(2, n_vertices))));
  return 3 * std::max(1, log2n);
}

DksResult solve_dks(const SimpleGraph& g, int k, double gamma, int trials,
                    std::uint64_t seed, const DenseSolveOptions& options) {
  throw_if_invalid(g);
  if (k < 2 || k > g.n()) throw ValidationError("k must lie in [2, n]");
  if (trials < 1) trials = default_dks_trials(g.n());

  DksResult result;
  result.trials = trials;

  if (g.edge_count() == 0) {
    // Nothing to find; any k vertices span zero edges and the guarantee
    // is vacuous.
    for (int v = 0; v < k; ++v) result.vertices.push_back(v);
    result.edges = 0;
    result.density = 0;
    result.vacuous = true;
    return result;
  }

  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derived_seed(seed, static_cast<std::uint64_t>(t));
    const DksReduction reduction = reduce_dks(g, k, trial_seed);

    Assignment phi;
    if (reduction.inst.edge_count() == 0) {
      // Degenerate partition: no variable pair has any adjacent label pair.
      phi.labels.assign(static_cast<std::size_t>(k), 0);
    } else {
      const SolveReport report =
          solve_dense_csp(reduction.inst, gamma, trial_seed, options);
      phi = report.assignment;
    }

    const std::vector<int> vertices = decode_dks(reduction, phi);
    const long long edges = g.count_induced_edges(vertices);
    if (edges > result.edges || result.best_trial < 0) {
      result.edges = edges;
      result.vertices = vertices;
      result.best_trial = t;
    }
  }

  result.density = Rational(result.edges, static_cast<long long>(k) * k);
  return result;
}

}  // namespace densecsp
