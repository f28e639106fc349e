#include "densecsp/freegame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace densecsp {

namespace {

// Canonical (a, b) -> edge lookup for a free game; construction doubles as
// the kind check.
struct FreeGameView {
  const Instance& game;
  int half;
  std::vector<int> eidx;  // a * half + (b - half) -> edge index

  explicit FreeGameView(const Instance& g)
      : game(g), half(g.n() / 2),
        eidx(static_cast<std::size_t>(half) * half, -1) {
    if (g.kind() != Kind::FreeGame)
      throw KindError("expected a free-game instance, got " + kind_name(g.kind()));
    if (g.n() % 2 != 0 || g.n() < 2)
      throw KindError("free game needs an even vertex count >= 2");
    const int m = g.edge_count();
    if (m != half * half)
      throw KindError("free game must carry exactly (n/2)^2 edges");
    for (int e = 0; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (!(ed.u >= 0 && ed.u < half && ed.v >= half && ed.v < g.n()))
        throw KindError("free-game edge stored outside A x B");
      auto& slot = eidx[static_cast<std::size_t>(ed.u) * half + (ed.v - half)];
      if (slot != -1) throw KindError("duplicate free-game pair");
      slot = e;
    }
  }

  int edge_of(int a, int b_local) const {
    return eidx[static_cast<std::size_t>(a) * half + b_local];
  }

  bool allows(int a, int b_local, int sa, int sb) const {
    return game.allows(edge_of(a, b_local), sa, sb);
  }
};

void check_restriction(const Instance& game, const AlphabetRestriction& S) {
  if (S.n() != game.n() || S.q() != game.q())
    throw ValidationError("restriction shape does not match the game");
}

// Greedy step 1 on one A vertex: the label of [q] with the maximum
// sum_b cnt(a,b,sigma)/|S_b|. Scores are compared exactly: integers scaled
// by lcm of the set sizes when that fits, exact rationals otherwise.
int best_a_label(const FreeGameView& view, const AlphabetRestriction& S, int a) {
  const int q = view.game.q();
  const int half = view.half;

  long long lcm_sizes = 1;
  bool lcm_ok = true;
  for (int bl = 0; bl < half && lcm_ok; ++bl) {
    const auto& sb = S.set(half + bl);
    if (sb.empty()) continue;
    lcm_sizes = std::lcm(lcm_sizes, static_cast<long long>(sb.size()));
    if (lcm_sizes > (1LL << 40)) lcm_ok = false;
  }

  if (lcm_ok) {
    long long best_score = -1;
    int best_label = 0;
    for (int sa = 0; sa < q; ++sa) {
      long long score = 0;
      for (int bl = 0; bl < half; ++bl) {
        const auto& sb = S.set(half + bl);
        if (sb.empty()) continue;
        int cnt = 0;
        for (int label : sb)
          if (view.allows(a, bl, sa, label)) ++cnt;
        score += cnt * (lcm_sizes / static_cast<long long>(sb.size()));
      }
      if (score > best_score) {
        best_score = score;
        best_label = sa;
      }
    }
    return best_label;
  }

  Rational best_score = -1;
  int best_label = 0;
  for (int sa = 0; sa < q; ++sa) {
    Rational score = 0;
    for (int bl = 0; bl < half; ++bl) {
      const auto& sb = S.set(half + bl);
      if (sb.empty()) continue;
      int cnt = 0;
      for (int label : sb)
        if (view.allows(a, bl, sa, label)) ++cnt;
      if (cnt) score += Rational(cnt, static_cast<long long>(sb.size()));
    }
    if (score > best_score) {
      best_score = score;
      best_label = sa;
    }
  }
  return best_label;
}

Assignment greedy_on_view(const FreeGameView& view, const AlphabetRestriction& S) {
  const int half = view.half;
  std::vector<int> labels(static_cast<std::size_t>(view.game.n()), 0);

  for (int a = 0; a < half; ++a) labels[static_cast<std::size_t>(a)] = best_a_label(view, S, a);

  for (int bl = 0; bl < half; ++bl) {
    const auto& sb = S.set(half + bl);
    if (sb.empty()) continue;  // label 0, contributes no guarantee term
    int best_label = sb.front();
    long long best_count = -1;
    for (int label : sb) {
      long long count = 0;
      for (int a = 0; a < half; ++a)
        if (view.allows(a, bl, labels[static_cast<std::size_t>(a)], label)) ++count;
      if (count > best_count) {
        best_count = count;
        best_label = label;
      }
    }
    labels[static_cast<std::size_t>(half + bl)] = best_label;
  }
  return Assignment(std::move(labels));
}

AlphabetRestriction reduce_on_view(const FreeGameView& view, int a, int sigma_a,
                                   const AlphabetRestriction& S) {
  AlphabetRestriction out = S;
  const int half = view.half;
  for (int bl = 0; bl < half; ++bl) {
    const auto& sb = S.set(half + bl);
    if (sb.empty()) continue;
    std::vector<int> kept;
    kept.reserve(sb.size());
    for (int label : sb)
      if (view.allows(a, bl, sigma_a, label)) kept.push_back(label);
    out.assign(half + bl, std::move(kept));
  }
  return out;
}

struct Candidate {
  Assignment phi;
  long long satisfied = 0;
};

Candidate recurse(const FreeGameView& view, const AlphabetRestriction& S,
                  int level, std::uint64_t& work) {
  ++work;
  if (level <= 1) {
    Candidate c;
    c.phi = greedy_on_view(view, S);
    c.satisfied = evaluate(view.game, c.phi);
    return c;
  }
  const int q = view.game.q();
  Candidate best;
  best.satisfied = -1;
  for (int a = 0; a < view.half; ++a) {
    for (int sa = 0; sa < q; ++sa) {
      AlphabetRestriction reduced = reduce_on_view(view, a, sa, S);
      Candidate c = recurse(view, reduced, level - 1, work);
      if (c.satisfied > best.satisfied) best = std::move(c);
    }
  }
  Candidate greedy;
  greedy.phi = greedy_on_view(view, S);
  greedy.satisfied = evaluate(view.game, greedy.phi);
  ++work;
  if (greedy.satisfied > best.satisfied) best = std::move(greedy);
  return best;
}

}  // namespace

int level_for_gamma(double gamma) {
  if (!(gamma > 0)) throw ValidationError("gamma must be positive");
  double inv = 1.0 / gamma;
  const double rounded = std::nearbyint(inv);
  if (std::abs(inv - rounded) < 1e-9) inv = rounded;
  const int level = static_cast<int>(std::ceil(inv));
  return std::max(1, level);
}

Assignment greedy_level1(const Instance& game, const AlphabetRestriction& S) {
  FreeGameView view(game);
  check_restriction(game, S);
  return greedy_on_view(view, S);
}

AlphabetRestriction choice_reduce(const Instance& game, int a, int sigma_a,
                                  const AlphabetRestriction& S) {
  FreeGameView view(game);
  check_restriction(game, S);
  if (a < 0 || a >= view.half) throw ValidationError("a must be an A-side vertex");
  if (sigma_a < 0 || sigma_a >= game.q()) throw ValidationError("sigma_a out of range");
  return reduce_on_view(view, a, sigma_a, S);
}

SolveReport approx_free_game(const Instance& game, const AlphabetRestriction& S,
                             const LevelParams& params, std::uint64_t seed) {
  FreeGameView view(game);
  check_restriction(game, S);
  if (params.level < 1) throw ValidationError("level must be at least 1");
  if (params.level > params.max_level)
    throw LevelBudgetError(params.level, "level " + std::to_string(params.level) +
                                             " exceeds the cap of " +
                                             std::to_string(params.max_level));
  const BigInt size = boost::multiprecision::pow(
      BigInt(static_cast<long long>(game.n()) * game.q()),
      static_cast<unsigned>(2 * params.level));
  if (size > params.max_work) {
    const long long clamped = size > std::numeric_limits<long long>::max()
                                  ? std::numeric_limits<long long>::max()
                                  : static_cast<long long>(size);
    throw LevelBudgetError(clamped, "(nq)^{2i} = " + size.str() +
                                        " exceeds the work cap of " +
                                        std::to_string(params.max_work));
  }

  std::uint64_t work = 0;
  Candidate best = recurse(view, S, params.level, work);
  SolveReport report = make_report(game, std::move(best.phi), seed, params.level);
  report.work = work;
  report.guarantee.note =
      "P(i) bound needs the instance optimum; rerun with --oracle-check";
  return report;
}

Float50 guarantee_bound(const Instance& game, const OptProfile& profile,
                        const AlphabetRestriction& S, int level) {
  FreeGameView view(game);
  check_restriction(game, S);
  if (level < 1) throw ValidationError("level must be at least 1");
  const int half = view.half;
  const Float50 nprime(half);
  const Float50 deg_exp = Float50(level + 1) / 2;
  const Float50 size_exp = Float50(1) / level;

  Float50 bound = 0;
  for (int bl = 0; bl < half; ++bl) {
    const int b = half + bl;
    const auto& sb = S.set(b);
    if (sb.empty()) continue;  // zero-contribution convention
    if (!S.contains(b, profile.opt_assignment.labels[static_cast<std::size_t>(b)]))
      continue;
    const int d = profile.d_opt[static_cast<std::size_t>(b)];
    if (d == 0) continue;
    const Float50 deg_term =
        boost::multiprecision::pow(Float50(d) / nprime, deg_exp);
    const Float50 size_term = boost::multiprecision::pow(
        Float50(1) / Float50(static_cast<long long>(sb.size())), size_exp);
    bound += nprime * deg_term * size_term;
  }
  return bound;
}

bool meets_guarantee_bound(long long satisfied, const Float50& bound) {
  static const Float50 slack("1e-12");
  return Float50(satisfied) >= bound - slack;
}

}  // namespace densecsp
