#include "densecsp/densify.hpp"

#include <algorithm>
#include <array>

#include "densecsp/oracle.hpp"

namespace densecsp {

DensifyResult densify(const Instance& inst) {
  throw_if_invalid(inst);
  const int n = inst.n();
  const int q = inst.q();

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * n);
  std::vector<ConstraintTable> tables;
  tables.reserve(static_cast<std::size_t>(n) * n);

  // Live table index for the pair (a_u, b_v), keyed by the stored (u, v)
  // orientation of each original edge; every other pair stays always-false.
  std::vector<int> live(static_cast<std::size_t>(n) * n, -1);
  const int m = inst.edge_count();
  for (int e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    live[static_cast<std::size_t>(ed.u) * n + ed.v] = e;
  }

  const ConstraintTable empty_table(q);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      edges.push_back(Edge{a, n + b});
      const int e = live[static_cast<std::size_t>(a) * n + b];
      tables.push_back(e >= 0 ? inst.table(e) : empty_table);
    }
  }

  DensifyResult out{Instance(Kind::FreeGame, q, 2 * n, std::move(edges), std::move(tables)),
                    std::vector<int>(static_cast<std::size_t>(n)),
                    std::vector<int>(static_cast<std::size_t>(n))};
  for (int v = 0; v < n; ++v) {
    out.a_of[static_cast<std::size_t>(v)] = v;
    out.b_of[static_cast<std::size_t>(v)] = n + v;
  }
  return out;
}

namespace {

// 4 * E[C_e] for one edge, with each endpoint either fixed to a label or
// still an unbiased coin over its two candidates.
int edge_quarters(const Instance& inst, int e, int label_u, int label_v,
                  const int* u_pair, const int* v_pair) {
  if (label_u >= 0 && label_v >= 0)
    return inst.allows(e, label_u, label_v) ? 4 : 0;
  if (label_u >= 0) {
    return 2 * (static_cast<int>(inst.allows(e, label_u, v_pair[0])) +
                static_cast<int>(inst.allows(e, label_u, v_pair[1])));
  }
  if (label_v >= 0) {
    return 2 * (static_cast<int>(inst.allows(e, u_pair[0], label_v)) +
                static_cast<int>(inst.allows(e, u_pair[1], label_v)));
  }
  int total = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      total += static_cast<int>(inst.allows(e, u_pair[i], v_pair[j]));
  return total;
}

long long total_quarters(const Instance& inst, const std::vector<int>& fixed,
                         const std::vector<std::array<int, 2>>& pairs) {
  long long total = 0;
  const int m = inst.edge_count();
  for (int e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    total += edge_quarters(inst, e, fixed[static_cast<std::size_t>(ed.u)],
                           fixed[static_cast<std::size_t>(ed.v)],
                           pairs[static_cast<std::size_t>(ed.u)].data(),
                           pairs[static_cast<std::size_t>(ed.v)].data());
  }
  return total;
}

}  // namespace

long long half_half_expectation_quarters(const Instance& inst,
                                         const std::vector<int>& x,
                                         const std::vector<int>& y) {
  const int n = inst.n();
  if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
    throw InvalidAssignmentError("candidate arrays must cover every vertex");
  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  std::vector<std::array<int, 2>> pairs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v)
    pairs[static_cast<std::size_t>(v)] = {x[static_cast<std::size_t>(v)], y[static_cast<std::size_t>(v)]};
  return total_quarters(inst, fixed, pairs);
}

Assignment round_assignment(const Instance& inst, const DensifyResult& map,
                            const Assignment& phi_prime,
                            long long* expectation_quarters) {
  const int n = inst.n();
  if (phi_prime.size() != map.game.n())
    throw InvalidAssignmentError("free-game assignment must cover both copies of V");
  for (int l : phi_prime.labels)
    if (l < 0 || l >= inst.q())
      throw InvalidAssignmentError("free-game label out of range");

  std::vector<int> fixed(static_cast<std::size_t>(n), -1);
  std::vector<std::array<int, 2>> pairs(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    pairs[static_cast<std::size_t>(v)] = {
        phi_prime.labels[static_cast<std::size_t>(map.a_of[static_cast<std::size_t>(v)])],
        phi_prime.labels[static_cast<std::size_t>(map.b_of[static_cast<std::size_t>(v)])]};
  }

  if (expectation_quarters)
    *expectation_quarters = total_quarters(inst, fixed, pairs);

  // Conditional-expectation sweep; 4E stays an exact integer throughout,
  // ties prefer the A-side label.
  for (int v = 0; v < n; ++v) {
    const auto& cand = pairs[static_cast<std::size_t>(v)];
    fixed[static_cast<std::size_t>(v)] = cand[0];
    const long long with_a = total_quarters(inst, fixed, pairs);
    if (cand[1] != cand[0]) {
      fixed[static_cast<std::size_t>(v)] = cand[1];
      const long long with_b = total_quarters(inst, fixed, pairs);
      if (with_a >= with_b) fixed[static_cast<std::size_t>(v)] = cand[0];
    }
  }
  return Assignment(std::move(fixed));
}

SolveReport solve_dense_csp(const Instance& inst, double gamma,
                            std::uint64_t seed, const DenseSolveOptions& options,
                            DenseSolveDetail* detail) {
  throw_if_invalid(inst);
  const int level = level_for_gamma(gamma);

  DensifyResult embedded = densify(inst);
  LevelParams params;
  params.level = level;
  params.max_work = options.max_work;
  params.max_level = options.max_level;
  const AlphabetRestriction full = AlphabetRestriction::full(embedded.game.n(), inst.q());
  SolveReport fg = approx_free_game(embedded.game, full, params, seed);

  long long expectation_quarters = 0;
  Assignment rounded =
      round_assignment(inst, embedded, fg.assignment, &expectation_quarters);

  SolveReport report = make_report(inst, std::move(rounded), seed, level);
  report.work = fg.work;
  if (detail) {
    detail->fg_satisfied = fg.satisfied;
    detail->fg_edges = fg.edge_total;
    detail->level = level;
    detail->expectation_quarters = expectation_quarters;
  }

  if (options.oracle_check) {
    const OptProfile profile = brute_force_csp(inst, {}, options.oracle_budget);
    const Rational lambda(profile.opt_satisfied, inst.edge_count());
    const Rational delta = density(inst);
    GuaranteeInfo g;
    if (lambda == 0) {
      g.form = GuaranteeInfo::Form::None;
      g.note = "instance value is zero; the bound is vacuous";
    } else {
      // 1/4 * n^2 * (delta*lambda)^{(i+1)/2} * q^{-1/i} satisfied edges.
      g.form = GuaranteeInfo::Form::Exact;
      g.bound.mul(Rational(static_cast<long long>(inst.n()) * inst.n(), 4))
          .mul(delta * lambda, level + 1, 2)
          .mul(Rational(inst.q()), -1, level);
      g.preconditions_verified = true;
      g.met = g.bound.compare(Rational(report.satisfied)) <= 0;
      g.note = "end-to-end bound with oracle-supplied lambda";
    }
    report.guarantee = g;
  } else {
    report.guarantee.note =
        "end-to-end bound needs the instance value; rerun with --oracle-check";
  }
  return report;
}

}  // namespace densecsp
