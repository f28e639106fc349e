#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "densecsp/errors.hpp"
#include "densecsp/rational.hpp"

namespace densecsp {

enum class Kind { General, FreeGame, Projection, Complete };

std::string kind_name(Kind kind);
std::optional<Kind> kind_from_name(const std::string& name);

struct Edge {
  int u = 0;
  int v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Allowed-pair set of one binary constraint: a q*q bitset oriented by the
// stored (u, v) order of its edge. Lookups for the reversed order transpose
// the indices.
class ConstraintTable {
 public:
  ConstraintTable() = default;
  explicit ConstraintTable(int q);
  static ConstraintTable all_true(int q);

  int q() const { return q_; }

  bool allows(int label_u, int label_v) const {
    const int idx = label_u * q_ + label_v;
    return (bits_[static_cast<std::size_t>(idx) >> 6] >> (idx & 63)) & 1u;
  }

  void set(int label_u, int label_v, bool allowed = true);
  ConstraintTable transposed() const;
  int count() const;
  bool any() const;

  friend bool operator==(const ConstraintTable&, const ConstraintTable&) = default;

 private:
  int q_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Total map vertex -> label in [0, q).
struct Assignment {
  std::vector<int> labels;

  Assignment() = default;
  explicit Assignment(std::vector<int> l) : labels(std::move(l)) {}

  int size() const { return static_cast<int>(labels.size()); }
  friend bool operator==(const Assignment&, const Assignment&) = default;
};

// Per-vertex candidate label sets (sorted, unique). Empty sets are legal;
// they contribute zero to every guarantee.
class AlphabetRestriction {
 public:
  AlphabetRestriction() = default;
  AlphabetRestriction(int n, int q) : q_(q), sets_(static_cast<std::size_t>(n)) {}

  static AlphabetRestriction full(int n, int q);

  int n() const { return static_cast<int>(sets_.size()); }
  int q() const { return q_; }

  const std::vector<int>& set(int v) const { return sets_[static_cast<std::size_t>(v)]; }
  bool contains(int v, int label) const;
  void assign(int v, std::vector<int> labels);  // sorts, dedups, range-checks
  void clear(int v) { sets_[static_cast<std::size_t>(v)].clear(); }

  friend bool operator==(const AlphabetRestriction&, const AlphabetRestriction&) = default;

 private:
  int q_ = 0;
  std::vector<std::vector<int>> sets_;
};

// A Max 2-CSP instance. Immutable after construction; all operations on it
// are pure and safe to call concurrently.
//
// Conventions:
//   - vertices and labels are 0-indexed;
//   - bipartite kinds (free games, projection games) place side A at
//     [0, n/2) and side B at [n/2, n), with every edge stored (a, b);
//   - projection instances carry the per-edge map pi (flattened, stride q)
//     and derive their allowed-pair tables from it.
class Instance {
 public:
  Instance(Kind kind, int q, int n, std::vector<Edge> edges,
           std::vector<ConstraintTable> tables, std::vector<int> pi_flat = {});

  Kind kind() const { return kind_; }
  int q() const { return q_; }
  int n() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  bool has_pi() const { return !pi_.empty(); }
  int pi(int e, int sigma_a) const { return pi_[static_cast<std::size_t>(e) * q_ + sigma_a]; }
  const std::vector<int>& pi_flat() const { return pi_; }

  // Allowed-pair membership in the stored (u, v) orientation of edge e.
  bool allows(int e, int label_u, int label_v) const {
    if (has_pi()) return pi(e, label_u) == label_v;
    return tables_[static_cast<std::size_t>(e)].allows(label_u, label_v);
  }

  // Materializes the table of edge e (projection instances derive it).
  ConstraintTable table(int e) const;
  bool has_stored_tables() const { return !tables_.empty(); }

  // Side size n/2 for the bipartite-layout kinds.
  int side_size() const { return n_ / 2; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Kind kind_ = Kind::General;
  int q_ = 1;
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<ConstraintTable> tables_;
  std::vector<int> pi_;  // flattened |E| x q, projection kind only
};

// Number of edges whose constraint accepts phi. Throws
// InvalidAssignmentError if phi is not total over [0, n) or uses a label
// outside [0, q).
long long evaluate(const Instance& inst, const Assignment& phi);

// |E| / n^2, exact.
Rational density(const Instance& inst);

// Checks every instance invariant including the kind-specific ones.
// Returns one message per violation; empty means valid.
std::vector<std::string> validate(const Instance& inst);

// Throws ValidationError carrying the first violations, if any.
void throw_if_invalid(const Instance& inst);

}  // namespace densecsp
