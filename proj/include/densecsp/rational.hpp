#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace densecsp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& base, unsigned exp);

// Accepts "3", "0.25", "1/2". Throws ValidationError on anything else.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& r);
double rational_to_double(const Rational& r);

// Exact product of rational powers of positive rationals,
//   prod_k base_k ^ (pnum_k / pden_k),
// comparable against a rational by cross-powering in big integers. This is
// how bounds like q^{-1/i} or (delta*lambda)^{(i+1)/2} are compared without
// floating-point rounding.
class PowerProduct {
 public:
  struct Factor {
    Rational base;  // > 0
    long exp_num = 1;
    long exp_den = 1;
  };

  PowerProduct() = default;

  static PowerProduct zero();

  // Multiplies in base^(exp_num/exp_den). Negative exponents are folded
  // into the base. base must be positive (use zero() for a vacuous bound).
  PowerProduct& mul(Rational base, long exp_num = 1, long exp_den = 1);

  bool is_zero() const { return zero_; }
  bool empty() const { return factors_.empty() && !zero_; }
  const std::vector<Factor>& factors() const { return factors_; }

  // Sign of (product - x), computed exactly.
  int compare(const Rational& x) const;
  bool at_least(const Rational& x) const { return compare(x) >= 0; }

  double to_double() const;

 private:
  std::vector<Factor> factors_;
  bool zero_ = false;
};

}  // namespace densecsp
