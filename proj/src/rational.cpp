#include "densecsp/rational.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "densecsp/errors.hpp"

namespace densecsp {

Rational rational_pow(const Rational& base, unsigned exp) {
  BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(base), exp);
  BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(base), exp);
  return Rational(num, den);
}

namespace {

// Decimal-only integer parse; base-prefix interpretation (octal "025") is
// never wanted here.
BigInt parse_decimal(const std::string& text) {
  std::string s = text;
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  if (s.empty()) throw ValidationError("bad integer literal '" + text + "'");
  BigInt value = 0;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw ValidationError("bad integer literal '" + text + "'");
    value = value * 10 + (c - '0');
  }
  return neg ? -value : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ValidationError("empty rational literal");
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const BigInt num = parse_decimal(text.substr(0, slash));
    const BigInt den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_decimal(text));
  const std::string head = text.substr(0, dot);
  const std::string tail = text.substr(dot + 1);
  bool neg = false;
  std::string digits = head;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    neg = digits[0] == '-';
    digits = digits.substr(1);
  }
  digits += tail;
  if (digits.empty()) throw ValidationError("bad rational literal '" + text + "'");
  BigInt num = parse_decimal(digits);
  if (neg) num = -num;
  BigInt den = 1;
  for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
  return Rational(num, den);
}

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << boost::multiprecision::numerator(r) << "/"
      << boost::multiprecision::denominator(r);
  return out.str();
}

double rational_to_double(const Rational& r) {
  return static_cast<double>(r);
}

PowerProduct PowerProduct::zero() {
  PowerProduct p;
  p.zero_ = true;
  return p;
}

PowerProduct& PowerProduct::mul(Rational base, long exp_num, long exp_den) {
  if (base <= 0) throw ValidationError("PowerProduct factor must be positive");
  if (exp_den <= 0) throw ValidationError("PowerProduct exponent denominator must be positive");
  if (exp_num == 0) return *this;
  if (exp_num < 0) {
    base = 1 / base;
    exp_num = -exp_num;
  }
  factors_.push_back(Factor{std::move(base), exp_num, exp_den});
  return *this;
}

int PowerProduct::compare(const Rational& x) const {
  if (zero_) return x < 0 ? 1 : (x == 0 ? 0 : -1);
  if (x <= 0) return 1;  // product of positive factors is positive
  long lcm = 1;
  for (const auto& f : factors_) lcm = std::lcm(lcm, f.exp_den);
  // (product)^lcm vs x^lcm, both exact rationals.
  Rational lhs = 1;
  for (const auto& f : factors_) {
    const long e = f.exp_num * (lcm / f.exp_den);
    lhs *= rational_pow(f.base, static_cast<unsigned>(e));
  }
  const Rational rhs = rational_pow(x, static_cast<unsigned>(lcm));
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

double PowerProduct::to_double() const {
  if (zero_) return 0.0;
  double log_sum = 0.0;
  for (const auto& f : factors_) {
    const double b = rational_to_double(f.base);
    log_sum += (static_cast<double>(f.exp_num) / static_cast<double>(f.exp_den)) * std::log(b);
  }
  return std::exp(log_sum);
}

}  // namespace densecsp
