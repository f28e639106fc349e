#include "densecsp/instance.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace densecsp {

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::General: return "general";
    case Kind::FreeGame: return "free-game";
    case Kind::Projection: return "projection";
    case Kind::Complete: return "complete";
  }
  return "general";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  if (name == "general") return Kind::General;
  if (name == "free-game") return Kind::FreeGame;
  if (name == "projection") return Kind::Projection;
  if (name == "complete") return Kind::Complete;
  return std::nullopt;
}

ConstraintTable::ConstraintTable(int q) : q_(q) {
  if (q < 1) throw ValidationError("constraint table needs q >= 1");
  bits_.assign((static_cast<std::size_t>(q) * q + 63) / 64, 0);
}

ConstraintTable ConstraintTable::all_true(int q) {
  ConstraintTable t(q);
  const int total = q * q;
  for (std::size_t w = 0; w < t.bits_.size(); ++w) t.bits_[w] = ~0ULL;
  const int spare = static_cast<int>(t.bits_.size()) * 64 - total;
  if (spare > 0) t.bits_.back() >>= spare;
  return t;
}

void ConstraintTable::set(int label_u, int label_v, bool allowed) {
  const int idx = label_u * q_ + label_v;
  const std::uint64_t mask = 1ULL << (idx & 63);
  if (allowed)
    bits_[static_cast<std::size_t>(idx) >> 6] |= mask;
  else
    bits_[static_cast<std::size_t>(idx) >> 6] &= ~mask;
}

ConstraintTable ConstraintTable::transposed() const {
  ConstraintTable t(q_);
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b)
      if (allows(a, b)) t.set(b, a);
  return t;
}

int ConstraintTable::count() const {
  int total = 0;
  for (auto w : bits_) total += std::popcount(w);
  return total;
}

bool ConstraintTable::any() const {
  for (auto w : bits_)
    if (w != 0) return true;
  return false;
}

AlphabetRestriction AlphabetRestriction::full(int n, int q) {
  AlphabetRestriction r(n, q);
  std::vector<int> all(static_cast<std::size_t>(q));
  for (int l = 0; l < q; ++l) all[static_cast<std::size_t>(l)] = l;
  for (int v = 0; v < n; ++v) r.sets_[static_cast<std::size_t>(v)] = all;
  return r;
}

bool AlphabetRestriction::contains(int v, int label) const {
  const auto& s = sets_[static_cast<std::size_t>(v)];
  return std::binary_search(s.begin(), s.end(), label);
}

void AlphabetRestriction::assign(int v, std::vector<int> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (int l : labels)
    if (l < 0 || l >= q_)
      throw ValidationError("restriction label out of range");
  sets_[static_cast<std::size_t>(v)] = std::move(labels);
}

Instance::Instance(Kind kind, int q, int n, std::vector<Edge> edges,
                   std::vector<ConstraintTable> tables, std::vector<int> pi_flat)
    : kind_(kind), q_(q), n_(n), edges_(std::move(edges)),
      tables_(std::move(tables)), pi_(std::move(pi_flat)) {
  if (q_ < 1) throw ValidationError("instance needs q >= 1");
  if (n_ < 0) throw ValidationError("instance needs n >= 0");
  if (!pi_.empty()) {
    if (pi_.size() != edges_.size() * static_cast<std::size_t>(q_))
      throw ValidationError("pi array length must be |edges| * q");
    for (int entry : pi_)
      if (entry < 0 || entry >= q_) throw ValidationError("pi entry out of range");
  } else {
    if (tables_.size() != edges_.size())
      throw ValidationError("one constraint table per edge required");
  }
  if (!tables_.empty() && tables_.size() != edges_.size())
    throw ValidationError("one constraint table per edge required");
  for (const auto& t : tables_)
    if (t.q() != q_) throw ValidationError("constraint table alphabet mismatch");
}

ConstraintTable Instance::table(int e) const {
  if (!tables_.empty()) return tables_[static_cast<std::size_t>(e)];
  ConstraintTable t(q_);
  for (int sa = 0; sa < q_; ++sa) t.set(sa, pi(e, sa));
  return t;
}

long long evaluate(const Instance& inst, const Assignment& phi) {
  if (phi.size() != inst.n())
    throw InvalidAssignmentError("assignment covers " + std::to_string(phi.size()) +
                                 " vertices, instance has " + std::to_string(inst.n()));
  for (int l : phi.labels)
    if (l < 0 || l >= inst.q())
      throw InvalidAssignmentError("label " + std::to_string(l) + " out of range [0," +
                                   std::to_string(inst.q()) + ")");
  long long satisfied = 0;
  const int m = inst.edge_count();
  for (int e = 0; e < m; ++e) {
    const Edge& ed = inst.edge(e);
    if (inst.allows(e, phi.labels[static_cast<std::size_t>(ed.u)],
                    phi.labels[static_cast<std::size_t>(ed.v)]))
      ++satisfied;
  }
  return satisfied;
}

Rational density(const Instance& inst) {
  return Rational(inst.edge_count(), static_cast<long long>(inst.n()) * inst.n());
}

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

std::vector<std::string> validate(const Instance& inst) {
  std::vector<std::string> out;
  const int n = inst.n();
  const int q = inst.q();
  if (q < 1) out.push_back("q must be at least 1");
  if (n < 2) out.push_back("n must be at least 2");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (inst.edge_count() < 1) out.push_back("instance must have at least one edge");
  if (inst.edge_count() > max_edges)
    out.push_back("edge count exceeds n(n-1)/2");

  std::set<std::pair<int, int>> seen;
  for (const Edge& e : inst.edges()) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      out.push_back("edge endpoint out of range " + edge_str(e));
      continue;
    }
    if (e.u == e.v) out.push_back("self-loop " + edge_str(e));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) out.push_back("duplicate edge " + edge_str(e));
  }

  const int half = n / 2;
  switch (inst.kind()) {
    case Kind::General:
      break;
    case Kind::FreeGame: {
      if (n % 2 != 0) {
        out.push_back("free game needs an even vertex count");
        break;
      }
      bool oriented = true;
      std::set<std::pair<int, int>> pairs;
      for (const Edge& e : inst.edges()) {
        if (!(e.u >= 0 && e.u < half && e.v >= half && e.v < n)) {
          oriented = false;
          break;
        }
        pairs.emplace(e.u, e.v);
      }
      if (!oriented)
        out.push_back("free-game edges must be stored (a, b) with a < n/2 <= b");
      else if (pairs.size() != static_cast<std::size_t>(half) * half)
        out.push_back("free-game edges must cover A x B exactly");
      break;
    }
    case Kind::Projection: {
      if (n % 2 != 0) {
        out.push_back("projection game needs an even vertex count");
        break;
      }
      for (const Edge& e : inst.edges())
        if (!(e.u >= 0 && e.u < half && e.v >= half && e.v < n)) {
          out.push_back("projection edges must be stored (a, b) with a < n/2 <= b");
          break;
        }
      if (!inst.has_pi()) out.push_back("projection instance missing pi");
      const int m = inst.edge_count();
      for (int e = 0; e < m; ++e) {
        for (int sa = 0; sa < q; ++sa) {
          int allowed = 0;
          for (int sb = 0; sb < q; ++sb)
            if (inst.allows(e, sa, sb)) ++allowed;
          if (allowed != 1) {
            out.push_back("not a projection: edge " + edge_str(inst.edge(e)) +
                          " allows " + std::to_string(allowed) +
                          " b-labels for a-label " + std::to_string(sa));
            break;
          }
        }
      }
      break;
    }
    case Kind::Complete: {
      if (inst.edge_count() != max_edges || seen.size() != static_cast<std::size_t>(max_edges))
        out.push_back("complete instance must carry all n(n-1)/2 edges");
      break;
    }
  }
  return out;
}

void throw_if_invalid(const Instance& inst) {
  auto violations = validate(inst);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid instance:";
  for (const auto& v : violations) msg << " [" << v << "]";
  throw ValidationError(msg.str());
}

}  // namespace densecsp
