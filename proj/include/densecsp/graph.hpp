#pragma once

#include <string>
#include <vector>

#include "densecsp/instance.hpp"

namespace densecsp {

// Plain simple graph, input of the Densest k-Subgraph pipeline.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  bool adjacent(int u, int v) const;
  long long count_induced_edges(const std::vector<int>& vertices) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // sorted
};

std::vector<std::string> validate_graph(const SimpleGraph& g);
void throw_if_invalid(const SimpleGraph& g);

}  // namespace densecsp
