#include "densecsp/complete.hpp"

#include <algorithm>
#include <variant>

namespace densecsp {

namespace {

using Family = std::vector<std::vector<int>>;

struct CompleteView {
  const Instance& inst;
  int n;
  int q;
  std::vector<int> eidx;        // u*n+v -> edge index, u != v
  std::vector<bool> stored_uv;  // edge stored in (u, v) order at u*n+v

  explicit CompleteView(const Instance& g)
      : inst(g), n(g.n()), q(g.q()),
        eidx(static_cast<std::size_t>(g.n()) * g.n(), -1),
        stored_uv(static_cast<std::size_t>(g.n()) * g.n(), false) {
    if (g.kind() != Kind::Complete)
      throw KindError("expected a complete-graph instance, got " + kind_name(g.kind()));
    const int m = g.edge_count();
    if (static_cast<long long>(m) != static_cast<long long>(n) * (n - 1) / 2)
      throw KindError("complete instance must carry all n(n-1)/2 edges");
    for (int e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      eidx[static_cast<std::size_t>(ed.u) * n + ed.v] = e;
      stored_uv[static_cast<std::size_t>(ed.u) * n + ed.v] = true;
      eidx[static_cast<std::size_t>(ed.v) * n + ed.u] = e;
    }
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && eidx[static_cast<std::size_t>(u) * n + v] < 0)
          throw KindError("complete instance is missing a vertex pair");
  }

  bool allows(int u, int v, int su, int sv) const {
    const std::size_t key = static_cast<std::size_t>(u) * n + v;
    return stored_uv[key] ? inst.allows(eidx[key], su, sv)
                          : inst.allows(eidx[key], sv, su);
  }
};

Family to_family(const AlphabetRestriction& S) {
  Family f(static_cast<std::size_t>(S.n()));
  for (int v = 0; v < S.n(); ++v) f[static_cast<std::size_t>(v)] = S.set(v);
  return f;
}

AlphabetRestriction from_family(const Family& f, int q) {
  AlphabetRestriction S(static_cast<int>(f.size()), q);
  for (int v = 0; v < static_cast<int>(f.size()); ++v)
    S.assign(v, f[static_cast<std::size_t>(v)]);
  return S;
}

// (prod_u |S_u|)^{-1/exp_den}; comparisons cross-power in big integers.
struct Target {
  BigInt product;
  long exp_den;
};

Target target_of(const Family& f, long exp_den) {
  Target t{1, exp_den};
  for (const auto& s : f) t.product *= static_cast<long long>(s.size());
  return t;
}

bool target_less(const Target& a, const Target& b) {
  // P_a^{-1/da} < P_b^{-1/db}  <=>  P_a^db > P_b^da
  return boost::multiprecision::pow(a.product, static_cast<unsigned>(b.exp_den)) >
         boost::multiprecision::pow(b.product, static_cast<unsigned>(a.exp_den));
}

bool value_at_least(long long satisfied, long long edges, const Target& t) {
  // s/m >= P^{-1/d}  <=>  s^d * P >= m^d
  return boost::multiprecision::pow(BigInt(satisfied), static_cast<unsigned>(t.exp_den)) *
             t.product >=
         boost::multiprecision::pow(BigInt(edges), static_cast<unsigned>(t.exp_den));
}

struct Unsat {
  int vertex;
};

using Outcome = std::variant<Assignment, Unsat>;

std::optional<int> prune_family(const CompleteView& view, Family& sets,
                                CompleteStats& stats) {
  const int n = view.n;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int u = 0; u < n; ++u) {
      auto& su = sets[static_cast<std::size_t>(u)];
      for (std::size_t i = 0; i < su.size();) {
        const int sigma_u = su[i];
        bool supported_everywhere = true;
        for (int v = 0; v < n && supported_everywhere; ++v) {
          if (v == u) continue;
          bool supported = false;
          for (int sigma_v : sets[static_cast<std::size_t>(v)]) {
            ++stats.lookups;
            if (view.allows(u, v, sigma_u, sigma_v)) {
              supported = true;
              break;
            }
          }
          if (!supported) supported_everywhere = false;
        }
        if (supported_everywhere) {
          ++i;
        } else {
          su.erase(su.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          if (su.empty()) return u;
        }
      }
    }
  }
  return std::nullopt;
}

Assignment sweep_family(const CompleteView& view, const Family& sets,
                        CompleteStats& stats) {
  const int n = view.n;
  ++stats.sweeps;
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (int u = 0; u < n; ++u) {
    const auto& su = sets[static_cast<std::size_t>(u)];
    if (su.empty()) throw ValidationError("empty candidate set at vertex " + std::to_string(u));
    int best_label = su.front();
    Rational best_expect = -1;
    for (int sigma_u : su) {
      // Expectation over the edges incident to u; the rest is unaffected
      // by this choice.
      Rational expect = 0;
      for (int v = 0; v < n; ++v) {
        if (v == u) continue;
        const int fixed_v = labels[static_cast<std::size_t>(v)];
        if (fixed_v >= 0) {
          ++stats.lookups;
          if (view.allows(u, v, sigma_u, fixed_v)) expect += 1;
        } else {
          int cnt = 0;
          for (int sigma_v : sets[static_cast<std::size_t>(v)]) {
            ++stats.lookups;
            if (view.allows(u, v, sigma_u, sigma_v)) ++cnt;
          }
          if (cnt)
            expect += Rational(cnt, static_cast<long long>(
                                        sets[static_cast<std::size_t>(v)].size()));
        }
      }
      if (expect > best_expect) {
        best_expect = expect;
        best_label = sigma_u;
      }
    }
    labels[static_cast<std::size_t>(u)] = best_label;
  }
  return Assignment(std::move(labels));
}

Outcome run_level(const CompleteView& view, Family sets, int level,
                  CompleteStats& stats) {
  ++stats.calls;
  const int n = view.n;

  if (level <= 1) {
    if (auto emptied = prune_family(view, sets, stats)) return Unsat{*emptied};
    return sweep_family(view, sets, stats);
  }

  const int j = level - 1;
  const long long edges = static_cast<long long>(n) * (n - 1) / 2;
  // Fixed target from the sets as handed in.
  const Target target = target_of(sets, static_cast<long>(n) * level);

  bool modified = true;
  while (modified) {
    modified = false;
    for (int u = 0; u < n && !modified; ++u) {
      const std::vector<int> snapshot = sets[static_cast<std::size_t>(u)];
      for (int sigma_u : snapshot) {
        // S^{u,sigma_u}: filter every other set, pin u to {sigma_u}.
        Family reduced(static_cast<std::size_t>(n));
        reduced[static_cast<std::size_t>(u)] = {sigma_u};
        int emptied_at = -1;
        for (int v = 0; v < n && emptied_at < 0; ++v) {
          if (v == u) continue;
          auto& out = reduced[static_cast<std::size_t>(v)];
          for (int sigma_v : sets[static_cast<std::size_t>(v)]) {
            ++stats.lookups;
            if (view.allows(u, v, sigma_u, sigma_v)) out.push_back(sigma_v);
          }
          if (out.empty()) emptied_at = v;
        }

        bool remove = false;
        if (emptied_at >= 0) {
          remove = true;
        } else {
          const Target rprime = target_of(reduced, static_cast<long>(n) * j);
          if (target_less(rprime, target)) continue;  // R^{u,sigma_u} < R
          Outcome sub = run_level(view, std::move(reduced), j, stats);
          if (auto* phi = std::get_if<Assignment>(&sub)) {
            const long long sat = evaluate(view.inst, *phi);
            if (value_at_least(sat, edges, rprime)) return std::move(*phi);
          }
          remove = true;  // the recursion missed its target: sigma_u is not optimal
        }

        if (remove) {
          auto& su = sets[static_cast<std::size_t>(u)];
          su.erase(std::find(su.begin(), su.end(), sigma_u));
          if (su.empty()) return Unsat{u};
          modified = true;  // restart scanning from (0, first label)
          break;
        }
      }
    }
  }

  return sweep_family(view, sets, stats);
}

void check_restriction_shape(const Instance& inst, const AlphabetRestriction& S) {
  if (S.n() != inst.n() || S.q() != inst.q())
    throw ValidationError("restriction shape does not match the instance");
}

}  // namespace

PruneOutcome prune_arc_consistency(const Instance& inst, AlphabetRestriction S) {
  CompleteView view(inst);
  check_restriction_shape(inst, S);
  CompleteStats stats;
  Family sets = to_family(S);
  PruneOutcome out;
  out.emptied = prune_family(view, sets, stats);
  out.sets = from_family(sets, inst.q());
  return out;
}

Assignment derandomized_uniform_assign(const Instance& inst,
                                       const AlphabetRestriction& S) {
  CompleteView view(inst);
  check_restriction_shape(inst, S);
  for (int v = 0; v < S.n(); ++v)
    if (S.set(v).empty())
      throw ValidationError("empty candidate set at vertex " + std::to_string(v));
  CompleteStats stats;
  const Family sets = to_family(S);
  return sweep_family(view, sets, stats);
}

Assignment approx_complete_game(const Instance& inst, AlphabetRestriction S,
                                int level, CompleteStats* stats) {
  CompleteView view(inst);
  check_restriction_shape(inst, S);
  if (level < 1) throw ValidationError("level must be at least 1");
  CompleteStats local;
  CompleteStats& st = stats ? *stats : local;
  Outcome out = run_level(view, to_family(S), level, st);
  if (auto* unsat = std::get_if<Unsat>(&out))
    throw UnsatisfiableError(unsat->vertex,
                             "candidate set emptied at vertex " +
                                 std::to_string(unsat->vertex) +
                                 "; the restricted instance is not satisfiable");
  return std::move(std::get<Assignment>(out));
}

SolveReport solve_complete(const Instance& inst, int level, CompleteStats* stats) {
  CompleteStats local;
  CompleteStats& st = stats ? *stats : local;
  Assignment phi = approx_complete_game(
      inst, AlphabetRestriction::full(inst.n(), inst.q()), level, &st);
  SolveReport report = make_report(inst, std::move(phi), 0, level);
  report.work = st.lookups;
  report.guarantee.form = GuaranteeInfo::Form::Exact;
  report.guarantee.bound.mul(Rational(report.edge_total))
      .mul(Rational(inst.q()), -1, level);
  report.guarantee.met =
      report.guarantee.bound.compare(Rational(report.satisfied)) <= 0;
  report.guarantee.note = "q^{-1/i} bound; assumes the instance is satisfiable";
  return report;
}

int qptas_level(int q, const Rational& eps_prime) {
  if (q < 1) throw ValidationError("q must be at least 1");
  if (eps_prime <= 0) throw ValidationError("epsilon' must be positive");
  const BigInt num = boost::multiprecision::numerator(eps_prime);
  const BigInt den = boost::multiprecision::denominator(eps_prime);
  // Minimal i with (1 + eps')^i >= q, i.e. (den+num)^i >= q * den^i.
  const BigInt base = den + num;
  BigInt base_pow = 1;
  BigInt den_pow = 1;
  for (int i = 1; i <= 100000; ++i) {
    base_pow *= base;
    den_pow *= den;
    if (base_pow >= q * den_pow) return i;
  }
  throw ValidationError("epsilon' too small: recursion level would exceed 100000");
}

Instance complete_with_true_tables(const Instance& inst) {
  const int n = inst.n();
  const int q = inst.q();
  std::vector<int> stored(static_cast<std::size_t>(n) * n, -1);
  const int m = inst.edge_count();
  for (int e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    stored[static_cast<std::size_t>(ed.u) * n + ed.v] = e;
  }

  std::vector<Edge> edges;
  std::vector<ConstraintTable> tables;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  tables.reserve(edges.capacity());
  const ConstraintTable all_true = ConstraintTable::all_true(q);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      edges.push_back(Edge{u, v});
      const int direct = stored[static_cast<std::size_t>(u) * n + v];
      const int reversed = stored[static_cast<std::size_t>(v) * n + u];
      if (direct >= 0)
        tables.push_back(inst.table(direct));
      else if (reversed >= 0)
        tables.push_back(inst.table(reversed).transposed());
      else
        tables.push_back(all_true);
    }
  }
  return Instance(Kind::Complete, q, n, std::move(edges), std::move(tables));
}

SolveReport qptas_dense(const Instance& inst, const Rational& epsilon,
                        std::uint64_t seed, QptasDetail* detail) {
  throw_if_invalid(inst);
  if (epsilon <= 0 || epsilon > 1)
    throw ValidationError("epsilon must lie in (0, 1]");

  const Rational delta = density(inst);
  const Rational eps_prime = epsilon * delta;
  const int level = qptas_level(inst.q(), eps_prime);

  const Instance completed = complete_with_true_tables(inst);
  CompleteStats stats;
  Assignment phi = approx_complete_game(
      completed, AlphabetRestriction::full(inst.n(), inst.q()), level, &stats);

  const long long completed_satisfied = evaluate(completed, phi);
  SolveReport report = make_report(inst, std::move(phi), seed, level);
  report.work = stats.lookups;
  report.guarantee.form = GuaranteeInfo::Form::Exact;
  if (epsilon == 1)
    report.guarantee.bound = PowerProduct::zero();
  else
    report.guarantee.bound.mul((1 - epsilon) * report.edge_total);
  report.guarantee.met =
      report.guarantee.bound.compare(Rational(report.satisfied)) <= 0;
  report.guarantee.note =
      "(1-eps)|E| bound; assumes the instance is satisfiable";

  if (detail) {
    detail->level = level;
    detail->completed_satisfied = completed_satisfied;
    detail->non_edges = completed.edge_count() - inst.edge_count();
    detail->stats = stats;
  }
  return report;
}

}  // namespace densecsp
