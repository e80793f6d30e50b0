#pragma once

#include <string>
#include <vector>

#include "crc/rational.hpp"

namespace crc {

// N(q)/(1-q)^k with N not divisible by (1-q). The only denominators that arise
// from summing eventually-polynomial q-series are powers of (1-q).
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_{Rational{c}} { normalize(); }
  explicit RationalFunction(Rational c) : num_{std::move(c)} { normalize(); }
  RationalFunction(std::vector<Rational> numerator, int denominatorPower);

  static RationalFunction q();
  static RationalFunction monomial(int power, Rational c = Rational{1});
  // c * q^first / (1 - q): the sum of c*q^n over n >= first.
  static RationalFunction geometric_tail(int first, Rational c = Rational{1});
  // Sum over d >= 1 of d^m q^d for m >= 0.
  static RationalFunction power_sum(int m);

  const std::vector<Rational>& numerator() const { return num_; }
  int denominator_power() const { return den_; }
  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const { return den_ == 0; }

  Rational eval(const Rational& v) const;
  // q * d/dq
  RationalFunction q_derivative() const;
  // Taylor coefficients at q = 0 up to and including q^order.
  std::vector<Rational> taylor(int order) const;

  std::string to_string(const std::string& var) const;
  std::string to_string() const { return to_string("q1"); }

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o) { return *this += -o; }
  RationalFunction& operator*=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

 private:
  void normalize();

  std::vector<Rational> num_;  // ascending powers, no trailing zeros
  int den_ = 0;
};

Rational ratfn_eval(const RationalFunction& f, const Rational& v);

}  // namespace crc
