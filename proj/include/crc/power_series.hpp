#pragma once

#include <string>
#include <vector>

#include "crc/rational.hpp"

namespace crc {

// Truncated power series over Q(i); coefficient k is the s^k coefficient, k <= order.
class PowerSeries {
 public:
  PowerSeries(std::string variable, int order);
  PowerSeries(std::string variable, std::vector<GaussRational> coefficients);

  static PowerSeries constant(std::string variable, int order, const GaussRational& c);
  static PowerSeries variable_series(std::string variable, int order);
  static PowerSeries sin_series(std::string variable, int order, const Rational& scale = Rational{1});
  static PowerSeries cos_series(std::string variable, int order, const Rational& scale = Rational{1});

  const std::string& variable() const { return var_; }
  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<GaussRational>& coefficients() const { return c_; }
  const GaussRational& operator[](int k) const { return c_.at(k); }
  GaussRational& operator[](int k) { return c_.at(k); }

  bool is_real() const;
  bool is_zero() const;
  PowerSeries derivative() const;  // keeps the order; the top coefficient becomes 0
  PowerSeries scaled(const GaussRational& c) const;
  std::string to_string() const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

 private:
  void check_compatible(const PowerSeries& o) const;

  std::string var_;
  std::vector<GaussRational> c_;
};

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_div(const PowerSeries& a, const PowerSeries& b);
PowerSeries series_compose_exp(const GaussRational& c, int order, const std::string& variable = "s");

}  // namespace crc
