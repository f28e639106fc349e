#include "densecsp/projection.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <thread>

#include "densecsp/rng.hpp"

namespace densecsp {

namespace {

void check_projection_kind(const Instance& game) {
  if (game.kind() != Kind::Projection)
    throw KindError("expected a projection game, got " + kind_name(game.kind()));
  if (game.n() % 2 != 0)
    throw KindError("projection game needs an even vertex count");
  if (!game.has_pi())
    throw KindError("projection game is missing its pi tables");
}

// Per-side adjacency with parallel edge ids; edges are stored (a, b).
struct BipartiteAdj {
  int half;
  std::vector<std::vector<int>> nb_a;   // neighbors of a as local b indices
  std::vector<std::vector<int>> eid_a;  // matching edge ids
  std::vector<std::vector<int>> nb_b;   // neighbors of b as a indices
  std::vector<std::vector<int>> eid_b;

  explicit BipartiteAdj(const Instance& game) : half(game.side_size()) {
    nb_a.resize(static_cast<std::size_t>(half));
    eid_a.resize(static_cast<std::size_t>(half));
    nb_b.resize(static_cast<std::size_t>(half));
    eid_b.resize(static_cast<std::size_t>(half));
    const int m = game.edge_count();
    for (int e = 0; e < m; ++e) {
      const Edge& ed = game.edge(e);
      if (!(ed.u >= 0 && ed.u < half && ed.v >= half && ed.v < game.n()))
        throw KindError("projection edge stored outside A x B");
      nb_a[static_cast<std::size_t>(ed.u)].push_back(ed.v - half);
      eid_a[static_cast<std::size_t>(ed.u)].push_back(e);
      nb_b[static_cast<std::size_t>(ed.v - half)].push_back(ed.u);
      eid_b[static_cast<std::size_t>(ed.v - half)].push_back(e);
    }
  }
};

}  // namespace

bool meets_density_precondition(int n, double p) {
  if (n < 2) return false;
  return p >= 10.0 * std::sqrt(std::log(static_cast<double>(n)) / n);
}

ProjectionGame generate_projection_game(const RandomGraphConfig& cfg) {
  if (cfg.n < 2 || cfg.n % 2 != 0)
    throw ValidationError("config needs an even vertex count n >= 2");
  if (!(cfg.p > 0.0 && cfg.p <= 1.0))
    throw ValidationError("edge probability p must lie in (0, 1]");
  if (cfg.q < 1) throw ValidationError("alphabet size q must be at least 1");

  const int half = cfg.n / 2;
  Rng rng(cfg.seed);

  std::vector<Edge> edges;
  for (int a = 0; a < half; ++a)
    for (int b = 0; b < half; ++b)
      if (rng.bernoulli(cfg.p)) edges.push_back(Edge{a, half + b});

  Assignment planted;
  planted.labels.assign(static_cast<std::size_t>(cfg.n), 0);
  if (cfg.planted)
    for (int v = 0; v < cfg.n; ++v)
      planted.labels[static_cast<std::size_t>(v)] = rng.label(cfg.q);

  std::vector<int> pi_flat(edges.size() * static_cast<std::size_t>(cfg.q));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (int sa = 0; sa < cfg.q; ++sa)
      pi_flat[e * static_cast<std::size_t>(cfg.q) + sa] = rng.label(cfg.q);
    if (cfg.planted) {
      const int pa = planted.labels[static_cast<std::size_t>(edges[e].u)];
      const int pb = planted.labels[static_cast<std::size_t>(edges[e].v)];
      pi_flat[e * static_cast<std::size_t>(cfg.q) + pa] = pb;
    }
  }

  ProjectionGame out{Instance(Kind::Projection, cfg.q, cfg.n, std::move(edges), {},
                              std::move(pi_flat)),
                     std::move(planted), cfg.planted};
  return out;
}

DegreeReport check_degree_bounds(const Instance& game, double p) {
  check_projection_kind(game);
  const int n = game.n();
  DegreeReport report;
  report.lower = n * p / 10.0;
  report.upper = 10.0 * n * p;

  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (const Edge& e : game.edges()) {
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
  }
  for (int v = 0; v < n; ++v) {
    const double d = degree[static_cast<std::size_t>(v)];
    if (d < report.lower || d > report.upper) report.violators.push_back(v);
  }
  report.pass = report.violators.empty();
  return report;
}

CommonNeighborReport check_common_neighbors(const Instance& game, double p) {
  check_projection_kind(game);
  const int n = game.n();
  const int half = game.side_size();
  CommonNeighborReport report;
  report.threshold = n * p * p / 10.0;
  report.min_common = half;

  // One bitset over B per left vertex; pair intersections by word AND.
  const int words = (half + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(half) * words, 0);
  for (const Edge& e : game.edges()) {
    const int b = e.v - half;
    bits[static_cast<std::size_t>(e.u) * words + (b >> 6)] |= 1ULL << (b & 63);
  }

  for (int a1 = 0; a1 < half; ++a1) {
    const std::uint64_t* row1 = &bits[static_cast<std::size_t>(a1) * words];
    for (int a2 = a1 + 1; a2 < half; ++a2) {
      const std::uint64_t* row2 = &bits[static_cast<std::size_t>(a2) * words];
      long long common = 0;
      for (int w = 0; w < words; ++w)
        common += std::popcount(row1[w] & row2[w]);
      report.min_common = std::min(report.min_common, common);
      if (static_cast<double>(common) < report.threshold)
        report.violators.emplace_back(a1, a2);
    }
  }
  report.pass = report.violators.empty();
  return report;
}

namespace {

// Table of the squared pair (a1, a2): the label pairs that agree on every
// common neighbor. Survivor filtering keeps the cost near the final table
// size instead of |common| * q^2.
ConstraintTable squared_table(const Instance& game, const BipartiteAdj& adj,
                              int a1, int a2) {
  const int q = game.q();
  std::vector<std::pair<int, int>> survivors;
  survivors.reserve(static_cast<std::size_t>(q) * q);
  for (int s1 = 0; s1 < q; ++s1)
    for (int s2 = 0; s2 < q; ++s2) survivors.emplace_back(s1, s2);

  const auto& nb1 = adj.nb_a[static_cast<std::size_t>(a1)];
  const auto& nb2 = adj.nb_a[static_cast<std::size_t>(a2)];
  const auto& ed1 = adj.eid_a[static_cast<std::size_t>(a1)];
  const auto& ed2 = adj.eid_a[static_cast<std::size_t>(a2)];

  std::size_t i = 0, j = 0;
  while (i < nb1.size() && j < nb2.size() && !survivors.empty()) {
    if (nb1[i] < nb2[j]) {
      ++i;
    } else if (nb1[i] > nb2[j]) {
      ++j;
    } else {
      const int e1 = ed1[i];
      const int e2 = ed2[j];
      std::size_t kept = 0;
      for (const auto& [s1, s2] : survivors)
        if (game.pi(e1, s1) == game.pi(e2, s2)) survivors[kept++] = {s1, s2};
      survivors.resize(kept);
      ++i;
      ++j;
    }
  }

  ConstraintTable table(q);
  for (const auto& [s1, s2] : survivors) table.set(s1, s2);
  return table;
}

}  // namespace

SquaredGame square_game(const Instance& game, int threads) {
  check_projection_kind(game);
  const int half = game.side_size();
  if (half % 2 != 0) throw ValidationError("squaring needs an even |A|");
  const int quarter = half / 2;
  const int q = game.q();
  const BipartiteAdj adj(game);

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(quarter) * quarter);
  for (int i = 0; i < quarter; ++i)
    for (int j = 0; j < quarter; ++j)
      edges.push_back(Edge{i, quarter + j});

  std::vector<ConstraintTable> tables(edges.size());
  const auto fill_rows = [&](int row_begin, int row_end) {
    for (int i = row_begin; i < row_end; ++i)
      for (int j = 0; j < quarter; ++j)
        tables[static_cast<std::size_t>(i) * quarter + j] =
            squared_table(game, adj, i, quarter + j);
  };

  threads = std::max(1, std::min(threads, quarter));
  if (threads == 1) {
    fill_rows(0, quarter);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (quarter + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(quarter, begin + chunk);
      if (begin < end) pool.emplace_back(fill_rows, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  SquaredGame out{Instance(Kind::FreeGame, q, half, std::move(edges), std::move(tables)),
                  std::vector<int>(static_cast<std::size_t>(half))};
  for (int v = 0; v < half; ++v) out.origin[static_cast<std::size_t>(v)] = v;
  return out;
}

DecodeResult decode_projection(const Instance& game,
                               const std::vector<int>& phi_on_a) {
  check_projection_kind(game);
  const int half = game.side_size();
  const int q = game.q();
  if (static_cast<int>(phi_on_a.size()) != half)
    throw InvalidAssignmentError("decode needs one label per A vertex");
  for (int l : phi_on_a)
    if (l < 0 || l >= q) throw InvalidAssignmentError("label out of range");

  const BipartiteAdj adj(game);
  std::vector<int> labels(static_cast<std::size_t>(game.n()), 0);
  for (int a = 0; a < half; ++a) labels[static_cast<std::size_t>(a)] = phi_on_a[static_cast<std::size_t>(a)];

  std::vector<int> votes(static_cast<std::size_t>(q));
  for (int b = 0; b < half; ++b) {
    const auto& nb = adj.nb_b[static_cast<std::size_t>(b)];
    if (nb.empty()) continue;  // isolated: label 0
    std::fill(votes.begin(), votes.end(), 0);
    const auto& eid = adj.eid_b[static_cast<std::size_t>(b)];
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const int a = nb[i];
      ++votes[static_cast<std::size_t>(game.pi(eid[i], phi_on_a[static_cast<std::size_t>(a)]))];
    }
    int best = 0;
    for (int l = 1; l < q; ++l)
      if (votes[static_cast<std::size_t>(l)] > votes[static_cast<std::size_t>(best)]) best = l;
    labels[static_cast<std::size_t>(half + b)] = best;
  }

  DecodeResult out;
  out.full = Assignment(std::move(labels));
  out.satisfied = evaluate(game, out.full);
  return out;
}

SolveReport solve_projection(const Instance& game, double gamma,
                             std::uint64_t seed,
                             const ProjectionSolveOptions& options,
                             ProjectionSolveDetail* detail) {
  check_projection_kind(game);
  const int level = level_for_gamma(gamma);

  SquaredGame squared = square_game(game, options.threads);
  LevelParams params;
  params.level = level;
  params.max_work = options.max_work;
  params.max_level = options.max_level;
  const AlphabetRestriction full =
      AlphabetRestriction::full(squared.game.n(), squared.game.q());
  SolveReport fg = approx_free_game(squared.game, full, params, seed);

  // Squared vertices are the A vertices of the projection game.
  DecodeResult decoded = decode_projection(game, fg.assignment.labels);

  SolveReport report = make_report(game, std::move(decoded.full), seed, level);
  report.work = fg.work;

  bool checks_pass = false;
  bool checks_run = false;
  if (options.p) {
    checks_run = true;
    const DegreeReport deg = check_degree_bounds(game, *options.p);
    const CommonNeighborReport common = check_common_neighbors(game, *options.p);
    checks_pass = deg.pass && common.pass;
    if (detail) {
      detail->degree_check = deg.pass;
      detail->common_neighbor_check = common.pass;
    }
  }
  if (detail) {
    detail->checks_run = checks_run;
    detail->squared_satisfied = fg.satisfied;
    detail->squared_edges = fg.edge_total;
  }

  GuaranteeInfo g;
  if (fg.satisfied == 0) {
    g.form = GuaranteeInfo::Form::Exact;
    g.bound = PowerProduct::zero();
  } else {
    // decoded value >= (squared value) / 8000, as a satisfied-edge count.
    g.form = GuaranteeInfo::Form::Exact;
    g.bound.mul(Rational(fg.satisfied, fg.edge_total) *
                Rational(game.edge_count(), 8000));
  }
  g.preconditions_verified = checks_run && checks_pass;
  g.met = g.bound.compare(Rational(report.satisfied)) <= 0;
  g.note = checks_run
               ? (checks_pass ? "random-graph checks passed"
                              : "unverified precondition: a random-graph check failed")
               : "unverified precondition: run with --p to enable the graph checks";
  report.guarantee = g;
  return report;
}

}  // namespace densecsp
