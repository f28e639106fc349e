#include "densecsp/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace densecsp {

SimpleGraph::SimpleGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), adj_(static_cast<std::size_t>(std::max(n, 0))) {
  if (n < 0) throw ValidationError("graph needs n >= 0");
  for (const Edge& e : edges_) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ValidationError("graph edge endpoint out of range");
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool SimpleGraph::adjacent(int u, int v) const {
  const auto& nb = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

long long SimpleGraph::count_induced_edges(const std::vector<int>& vertices) const {
  long long count = 0;
  const std::size_t k = vertices.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (adjacent(vertices[i], vertices[j])) ++count;
  return count;
}

std::vector<std::string> validate_graph(const SimpleGraph& g) {
  std::vector<std::string> out;
  if (g.n() < 1) out.push_back("graph must have at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges()) {
    if (e.u == e.v)
      out.push_back("self-loop (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      out.push_back("duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  return out;
}

void throw_if_invalid(const SimpleGraph& g) {
  auto violations = validate_graph(g);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid graph:";
  for (const auto& v : violations) msg << " [" << v << "]";
  throw ValidationError(msg.str());
}

}  // namespace densecsp
