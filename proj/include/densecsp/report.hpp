#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "densecsp/instance.hpp"
#include "densecsp/rational.hpp"

namespace densecsp {

// A claimed lower bound on the satisfied-edge count of a run. Bounds that
// are products of rational powers (q^{-1/i}, (1-eps)|E|, eps/8000 * |E|,
// ...) are carried exactly; the free-game P(i) sum bound is carried as a
// high-precision float evaluated with documented 1e-12 slack.
struct GuaranteeInfo {
  enum class Form { None, Exact, Approx };

  Form form = Form::None;
  PowerProduct bound;          // satisfied-count lower bound (Exact form)
  double approx_bound = 0.0;   // satisfied-count lower bound (Approx form)
  bool preconditions_verified = false;
  std::optional<bool> met;     // set whenever the comparison was computable
  std::string note;
};

struct SolveReport {
  Assignment assignment;
  long long satisfied = 0;
  long long edge_total = 0;
  Rational value;              // satisfied / edge_total, exact
  GuaranteeInfo guarantee;
  std::uint64_t seed = 0;
  int level = 0;
  double elapsed_seconds = 0.0;  // informational only; never serialized
  std::uint64_t work = 0;
};

// Fills assignment/satisfied/value for inst; guarantee left at None.
SolveReport make_report(const Instance& inst, Assignment phi,
                        std::uint64_t seed, int level);

}  // namespace densecsp
