#include "crc/power_series.hpp"

#include <sstream>
#include <stdexcept>

#include "crc/errors.hpp"

namespace crc {

PowerSeries::PowerSeries(std::string variable, int order) : var_(std::move(variable)) {
  if (order < 0) throw std::invalid_argument("PowerSeries: negative order");
  c_.assign(static_cast<std::size_t>(order) + 1, GaussRational{0});
}

PowerSeries::PowerSeries(std::string variable, std::vector<GaussRational> coefficients)
    : var_(std::move(variable)), c_(std::move(coefficients)) {
  if (c_.empty()) throw std::invalid_argument("PowerSeries: needs at least one coefficient");
}

PowerSeries PowerSeries::constant(std::string variable, int order, const GaussRational& c) {
  PowerSeries s(std::move(variable), order);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::variable_series(std::string variable, int order) {
  PowerSeries s(std::move(variable), order);
  if (order >= 1) s.c_[1] = GaussRational{1};
  return s;
}

PowerSeries PowerSeries::sin_series(std::string variable, int order, const Rational& scale) {
  PowerSeries s(std::move(variable), order);
  for (int k = 1; k <= order; k += 2) {
    Rational sign = ((k - 1) / 2) % 2 == 0 ? Rational{1} : Rational{-1};
    s.c_[k] = GaussRational(sign * scale.pow(k) / factorial(k));
  }
  return s;
}

PowerSeries PowerSeries::cos_series(std::string variable, int order, const Rational& scale) {
  PowerSeries s(std::move(variable), order);
  for (int k = 0; k <= order; k += 2) {
    Rational sign = (k / 2) % 2 == 0 ? Rational{1} : Rational{-1};
    s.c_[k] = GaussRational(sign * scale.pow(k) / factorial(k));
  }
  return s;
}

bool PowerSeries::is_real() const {
  for (const auto& c : c_)
    if (!c.is_real()) return false;
  return true;
}

bool PowerSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

PowerSeries PowerSeries::derivative() const {
  PowerSeries d(var_, order());
  for (int k = 1; k <= order(); ++k) d.c_[k - 1] = c_[k] * GaussRational(k);
  return d;
}

PowerSeries PowerSeries::scaled(const GaussRational& c) const {
  PowerSeries out = *this;
  for (auto& x : out.c_) x *= c;
  return out;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[k].to_string() << ")";
    if (k == 1) os << "*" << var_;
    else if (k > 1) os << "*" << var_ << "^" << k;
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << var_ << "^" << order() + 1 << ")";
  return os.str();
}

void PowerSeries::check_compatible(const PowerSeries& o) const {
  if (var_ != o.var_ || order() != o.order())
    throw std::invalid_argument("PowerSeries: variable or order mismatch");
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  check_compatible(o);
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  a.check_compatible(b);
  PowerSeries out(a.var_, a.order());
  for (int i = 0; i <= a.order(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order(); ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) { return a * b; }

PowerSeries series_div(const PowerSeries& a, const PowerSeries& b) {
  if (a.variable() != b.variable() || a.order() != b.order())
    throw std::invalid_argument("series_div: variable or order mismatch");
  if (b[0].is_zero()) throw DivisionByNonUnit("series_div: divisor has zero constant term");
  GaussRational inv = b[0].inverse();
  PowerSeries c(a.variable(), a.order());
  for (int k = 0; k <= a.order(); ++k) {
    GaussRational acc = a[k];
    for (int j = 1; j <= k; ++j) acc -= b[j] * c[k - j];
    c[k] = acc * inv;
  }
  return c;
}

PowerSeries series_compose_exp(const GaussRational& c, int order, const std::string& variable) {
  if (order < 0) throw std::invalid_argument("series_compose_exp: negative order");
  PowerSeries s(variable, order);
  GaussRational term{1};
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    term = term * c * GaussRational(Rational{1, k + 1});
  }
  return s;
}

}  // namespace crc
