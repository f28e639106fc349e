#include "densecsp/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

namespace densecsp {

long long default_oracle_budget() {
  if (const char* env = std::getenv("DENSECSP_BUDGET")) {
    char* end = nullptr;
    const long long parsed = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
    throw ValidationError("DENSECSP_BUDGET must be a positive integer");
  }
  return 100'000'000LL;
}

namespace {

struct IncidentEdge {
  int edge = 0;
  int other = 0;
  bool stored_first = false;  // vertex is the stored u of the edge
};

// Satisfied-count delta bookkeeping for one changed vertex label.
class IncrementalCount {
 public:
  explicit IncrementalCount(const Instance& inst) : inst_(inst), incident_(static_cast<std::size_t>(inst.n())) {
    const int m = inst.edge_count();
    for (int e = 0; e < m; ++e) {
      const Edge& ed = inst.edge(e);
      incident_[static_cast<std::size_t>(ed.u)].push_back({e, ed.v, true});
      incident_[static_cast<std::size_t>(ed.v)].push_back({e, ed.u, false});
    }
  }

  long long init(const std::vector<int>& labels) {
    labels_ = labels;
    count_ = 0;
    const int m = inst_.edge_count();
    for (int e = 0; e < m; ++e) {
      const Edge& ed = inst_.edge(e);
      if (inst_.allows(e, labels_[static_cast<std::size_t>(ed.u)],
                       labels_[static_cast<std::size_t>(ed.v)]))
        ++count_;
    }
    return count_;
  }

  long long change(int v, int new_label) {
    const int old_label = labels_[static_cast<std::size_t>(v)];
    if (old_label == new_label) return count_;
    for (const IncidentEdge& ie : incident_[static_cast<std::size_t>(v)]) {
      const int other = labels_[static_cast<std::size_t>(ie.other)];
      const bool before = ie.stored_first ? inst_.allows(ie.edge, old_label, other)
                                          : inst_.allows(ie.edge, other, old_label);
      const bool after = ie.stored_first ? inst_.allows(ie.edge, new_label, other)
                                         : inst_.allows(ie.edge, other, new_label);
      count_ += static_cast<int>(after) - static_cast<int>(before);
    }
    labels_[static_cast<std::size_t>(v)] = new_label;
    return count_;
  }

  const std::vector<int>& labels() const { return labels_; }

 private:
  const Instance& inst_;
  std::vector<std::vector<IncidentEdge>> incident_;
  std::vector<int> labels_;
  long long count_ = 0;
};

}  // namespace

OptProfile brute_force_csp(const Instance& inst,
                           const std::optional<AlphabetRestriction>& restriction,
                           long long budget) {
  throw_if_invalid(inst);
  if (budget < 0) budget = default_oracle_budget();
  const int n = inst.n();
  const int q = inst.q();

  std::vector<std::vector<int>> candidates(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    if (restriction) {
      if (restriction->n() != n)
        throw ValidationError("restriction covers a different vertex count");
      candidates[static_cast<std::size_t>(v)] = restriction->set(v);
      if (candidates[static_cast<std::size_t>(v)].empty())
        throw ValidationError("restriction set empty at vertex " + std::to_string(v));
      for (int l : candidates[static_cast<std::size_t>(v)])
        if (l < 0 || l >= q) throw ValidationError("restriction label out of range");
    } else {
      for (int l = 0; l < q; ++l) candidates[static_cast<std::size_t>(v)].push_back(l);
    }
  }

  BigInt required = 1;
  for (int v = 0; v < n; ++v)
    required *= static_cast<long long>(candidates[static_cast<std::size_t>(v)].size());
  if (required > budget) {
    const long long clamped =
        required > std::numeric_limits<long long>::max()
            ? std::numeric_limits<long long>::max()
            : static_cast<long long>(required);
    throw BudgetError(clamped, "brute force requires " + required.str() +
                                   " evaluations, budget is " + std::to_string(budget));
  }

  // Odometer over label vectors, vertex 0 fastest; ties keep the
  // lexicographically smallest label vector.
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) labels[static_cast<std::size_t>(v)] = candidates[static_cast<std::size_t>(v)][0];

  IncrementalCount counter(inst);
  long long current = counter.init(labels);

  long long best = current;
  std::vector<int> best_labels = labels;

  for (;;) {
    // Advance the odometer.
    int v = 0;
    while (v < n) {
      auto& p = pos[static_cast<std::size_t>(v)];
      const auto& cand = candidates[static_cast<std::size_t>(v)];
      if (p + 1 < cand.size()) {
        ++p;
        current = counter.change(v, cand[p]);
        break;
      }
      p = 0;
      current = counter.change(v, cand[0]);
      ++v;
    }
    if (v == n) break;

    if (current > best ||
        (current == best && counter.labels() < best_labels)) {
      best = current;
      best_labels = counter.labels();
    }
  }

  OptProfile profile;
  profile.opt_assignment = Assignment(best_labels);
  profile.opt_satisfied = best;
  profile.d_opt.assign(static_cast<std::size_t>(n), 0);
  const int m = inst.edge_count();
  for (int e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    if (inst.allows(e, best_labels[static_cast<std::size_t>(ed.u)],
                    best_labels[static_cast<std::size_t>(ed.v)])) {
      profile.e_opt.push_back(e);
      ++profile.d_opt[static_cast<std::size_t>(ed.u)];
      ++profile.d_opt[static_cast<std::size_t>(ed.v)];
    }
  }
  return profile;
}

DksOpt brute_force_dks(const SimpleGraph& g, int k, long long budget) {
  throw_if_invalid(g);
  if (budget < 0) budget = default_oracle_budget();
  const int n = g.n();
  if (k < 1 || k > n) throw ValidationError("k must lie in [1, n]");

  BigInt combos = 1;
  for (int i = 1; i <= k; ++i) combos = combos * (n - k + i) / i;
  if (combos > budget) {
    const long long clamped =
        combos > std::numeric_limits<long long>::max()
            ? std::numeric_limits<long long>::max()
            : static_cast<long long>(combos);
    throw BudgetError(clamped, "subset enumeration requires " + combos.str() +
                                   " evaluations, budget is " + std::to_string(budget));
  }

  std::vector<int> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[static_cast<std::size_t>(i)] = i;

  long long best = -1;
  std::vector<int> best_subset;
  for (;;) {
    const long long edges = g.count_induced_edges(subset);
    if (edges > best) {
      best = edges;
      best_subset = subset;
    }
    // Next combination in lexicographic order.
    int i = k - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++subset[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
  }

  return DksOpt{std::move(best_subset), best};
}

}  // namespace densecsp
