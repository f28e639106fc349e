#include "densecsp/report.hpp"

namespace densecsp {

SolveReport make_report(const Instance& inst, Assignment phi,
                        std::uint64_t seed, int level) {
  SolveReport r;
  r.satisfied = evaluate(inst, phi);
  r.assignment = std::move(phi);
  r.edge_total = inst.edge_count();
  r.value = Rational(r.satisfied, r.edge_total);
  r.seed = seed;
  r.level = level;
  return r;
}

}  // namespace densecsp
