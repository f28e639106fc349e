#include "densecsp/generate.hpp"

#include <algorithm>

#include "densecsp/rng.hpp"

namespace densecsp {

namespace {

Assignment draw_planted(int n, int q, Rng& rng) {
  Assignment planted;
  planted.labels.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) planted.labels.push_back(rng.label(q));
  return planted;
}

// Table carrying the planted pair plus independent noise entries.
ConstraintTable planted_table(int q, int planted_u, int planted_v,
                              double table_density, Rng& rng) {
  ConstraintTable table(q);
  for (int su = 0; su < q; ++su)
    for (int sv = 0; sv < q; ++sv)
      if (rng.bernoulli(table_density)) table.set(su, sv);
  table.set(planted_u, planted_v);
  return table;
}

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge{u, v});
  return edges;
}

std::vector<Edge> random_edge_subset(int n, int edge_count, Rng& rng) {
  std::vector<Edge> pool = all_pairs(n);
  const int total = static_cast<int>(pool.size());
  if (edge_count < 0 || edge_count > total)
    throw ValidationError("edge count must lie in [0, n(n-1)/2]");
  // Partial Fisher-Yates, then restore a deterministic edge order.
  for (int i = 0; i < edge_count; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(total - i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(edge_count));
  std::sort(pool.begin(), pool.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  return pool;
}

}  // namespace

PlantedInstance planted_complete_instance(int n, int q, std::uint64_t seed,
                                          double table_density) {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (q < 1) throw ValidationError("q must be at least 1");
  Rng rng(seed);
  Assignment planted = draw_planted(n, q, rng);

  std::vector<Edge> edges = all_pairs(n);
  std::vector<ConstraintTable> tables;
  tables.reserve(edges.size());
  for (const Edge& e : edges)
    tables.push_back(planted_table(q, planted.labels[static_cast<std::size_t>(e.u)],
                                   planted.labels[static_cast<std::size_t>(e.v)],
                                   table_density, rng));
  return PlantedInstance{
      Instance(Kind::Complete, q, n, std::move(edges), std::move(tables)),
      std::move(planted)};
}

PlantedInstance planted_dense_instance(int n, int q, int edge_count,
                                       std::uint64_t seed, double table_density) {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (q < 1) throw ValidationError("q must be at least 1");
  if (edge_count < 1) throw ValidationError("edge count must be at least 1");
  Rng rng(seed);
  Assignment planted = draw_planted(n, q, rng);

  std::vector<Edge> edges = random_edge_subset(n, edge_count, rng);
  std::vector<ConstraintTable> tables;
  tables.reserve(edges.size());
  for (const Edge& e : edges)
    tables.push_back(planted_table(q, planted.labels[static_cast<std::size_t>(e.u)],
                                   planted.labels[static_cast<std::size_t>(e.v)],
                                   table_density, rng));
  return PlantedInstance{
      Instance(Kind::General, q, n, std::move(edges), std::move(tables)),
      std::move(planted)};
}

PlantedInstance planted_free_game(int side, int q, std::uint64_t seed,
                                  double table_density) {
  if (side < 1) throw ValidationError("side must be at least 1");
  if (q < 1) throw ValidationError("q must be at least 1");
  Rng rng(seed);
  Assignment planted = draw_planted(2 * side, q, rng);

  std::vector<Edge> edges;
  std::vector<ConstraintTable> tables;
  for (int a = 0; a < side; ++a) {
    for (int b = 0; b < side; ++b) {
      edges.push_back(Edge{a, side + b});
      tables.push_back(planted_table(q, planted.labels[static_cast<std::size_t>(a)],
                                     planted.labels[static_cast<std::size_t>(side + b)],
                                     table_density, rng));
    }
  }
  return PlantedInstance{
      Instance(Kind::FreeGame, q, 2 * side, std::move(edges), std::move(tables)),
      std::move(planted)};
}

Instance random_free_game(int side, int q, std::uint64_t seed,
                          double table_density) {
  if (side < 1) throw ValidationError("side must be at least 1");
  if (q < 1) throw ValidationError("q must be at least 1");
  Rng rng(seed);

  std::vector<Edge> edges;
  std::vector<ConstraintTable> tables;
  for (int a = 0; a < side; ++a) {
    for (int b = 0; b < side; ++b) {
      edges.push_back(Edge{a, side + b});
      ConstraintTable table(q);
      for (int su = 0; su < q; ++su)
        for (int sv = 0; sv < q; ++sv)
          if (rng.bernoulli(table_density)) table.set(su, sv);
      tables.push_back(std::move(table));
    }
  }
  return Instance(Kind::FreeGame, q, 2 * side, std::move(edges), std::move(tables));
}

Instance random_instance(int n, int q, int edge_count, std::uint64_t seed,
                         double table_density) {
  if (n < 2) throw ValidationError("n must be at least 2");
  if (q < 1) throw ValidationError("q must be at least 1");
  Rng rng(seed);
  std::vector<Edge> edges = random_edge_subset(n, edge_count, rng);
  std::vector<ConstraintTable> tables;
  tables.reserve(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    ConstraintTable table(q);
    for (int su = 0; su < q; ++su)
      for (int sv = 0; sv < q; ++sv)
        if (rng.bernoulli(table_density)) table.set(su, sv);
    tables.push_back(std::move(table));
  }
  return Instance(Kind::General, q, n, std::move(edges), std::move(tables));
}

SimpleGraph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ValidationError("n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("p must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) edges.push_back(Edge{u, v});
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph planted_clique_graph(int n, int k, double p, std::uint64_t seed) {
  if (k < 1 || k > n) throw ValidationError("clique size must lie in [1, n]");
  Rng rng(seed);

  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
  }
  std::vector<bool> in_clique(static_cast<std::size_t>(n), false);
  for (int i = 0; i < k; ++i) in_clique[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = true;

  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool clique_pair = in_clique[static_cast<std::size_t>(u)] &&
                               in_clique[static_cast<std::size_t>(v)];
      if (clique_pair || rng.bernoulli(p)) edges.push_back(Edge{u, v});
    }
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(Edge{i, (i + 1) % 5});            // outer cycle
    edges.push_back(Edge{i, i + 5});                  // spokes
    edges.push_back(Edge{5 + i, 5 + (i + 2) % 5});    // inner pentagram
  }
  return SimpleGraph(10, std::move(edges));
}

}  // namespace densecsp
