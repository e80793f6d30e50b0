#include "crc/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "crc/errors.hpp"

namespace crc {
namespace {

using Poly = std::vector<Rational>;

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Poly one_minus_q_pow(int k) {
  Poly out{Rational{1}};
  for (int i = 0; i < k; ++i) out = poly_mul(out, Poly{Rational{1}, Rational{-1}});
  return out;
}

Rational horner(const Poly& p, const Rational& v) {
  Rational acc{0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * v + *it;
  return acc;
}

std::string poly_string(const Poly& p, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero()) continue;
    std::string c = p[k].to_string();
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    if (mono.empty()) os << c;
    else if (c == "1") os << mono;
    else os << c << "*" << mono;
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

RationalFunction::RationalFunction(std::vector<Rational> numerator, int denominatorPower)
    : num_(std::move(numerator)), den_(denominatorPower) {
  if (den_ < 0) throw std::invalid_argument("RationalFunction: negative denominator power");
  normalize();
}

void RationalFunction::normalize() {
  while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
  if (num_.empty()) {
    den_ = 0;
    return;
  }
  while (den_ > 0 && horner(num_, Rational{1}).is_zero()) {
    Poly m(num_.size() - 1, Rational{0});
    Rational acc{0};
    for (std::size_t k = 0; k + 1 < num_.size(); ++k) {
      acc += num_[k];
      m[k] = acc;
    }
    num_ = std::move(m);
    --den_;
    while (!num_.empty() && num_.back().is_zero()) num_.pop_back();
  }
}

RationalFunction RationalFunction::q() { return monomial(1); }

RationalFunction RationalFunction::monomial(int power, Rational c) {
  Poly p(static_cast<std::size_t>(power) + 1, Rational{0});
  p[power] = std::move(c);
  return RationalFunction(std::move(p), 0);
}

RationalFunction RationalFunction::geometric_tail(int first, Rational c) {
  Poly p(static_cast<std::size_t>(first) + 1, Rational{0});
  p[first] = std::move(c);
  return RationalFunction(std::move(p), 1);
}

RationalFunction RationalFunction::power_sum(int m) {
  RationalFunction f = geometric_tail(1);
  for (int k = 0; k < m; ++k) f = f.q_derivative();
  return f;
}

Rational RationalFunction::eval(const Rational& v) const {
  if (num_.empty()) return Rational{0};
  Rational base = Rational{1} - v;
  if (den_ > 0 && base.is_zero())
    throw PoleError("RationalFunction: pole at q = " + v.to_string() + " in " + to_string());
  return horner(num_, v) / base.pow(den_);
}

RationalFunction RationalFunction::q_derivative() const {
  if (num_.empty()) return {};
  // q (N'(1-q) + k N) / (1-q)^(k+1)
  Poly deriv(num_.size() > 1 ? num_.size() - 1 : 0, Rational{0});
  for (std::size_t k = 1; k < num_.size(); ++k) deriv[k - 1] = num_[k] * Rational(static_cast<long>(k));
  Poly top = poly_mul(deriv, Poly{Rational{1}, Rational{-1}});
  if (top.size() < num_.size()) top.resize(num_.size(), Rational{0});
  for (std::size_t k = 0; k < num_.size(); ++k) top[k] += num_[k] * Rational(den_);
  top.insert(top.begin(), Rational{0});
  return RationalFunction(std::move(top), den_ + 1);
}

std::vector<Rational> RationalFunction::taylor(int order) const {
  std::vector<Rational> inv(order + 1, Rational{0});
  for (int n = 0; n <= order; ++n) inv[n] = den_ == 0 ? Rational(n == 0 ? 1 : 0) : binomial(n + den_ - 1, den_ - 1);
  std::vector<Rational> out(order + 1, Rational{0});
  for (std::size_t i = 0; i < num_.size() && static_cast<int>(i) <= order; ++i)
    for (int j = 0; static_cast<int>(i) + j <= order; ++j) out[i + j] += num_[i] * inv[j];
  return out;
}

std::string RationalFunction::to_string(const std::string& var) const {
  std::string n = poly_string(num_, var);
  if (den_ == 0) return n;
  std::string d = "(1 - " + var + ")";
  if (den_ > 1) d += "^" + std::to_string(den_);
  bool single = num_.size() == 1 || (std::count_if(num_.begin(), num_.end(), [](const Rational& r) { return !r.is_zero(); }) == 1 &&
                                     num_.back().sign() > 0);
  return (single ? n : "(" + n + ")") + "/" + d;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.empty()) return *this;
  int k = std::max(den_, o.den_);
  Poly a = poly_mul(num_, one_minus_q_pow(k - den_));
  Poly b = poly_mul(o.num_, one_minus_q_pow(k - o.den_));
  if (a.size() < b.size()) a.resize(b.size(), Rational{0});
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  num_ = std::move(a);
  den_ = k;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  num_ = poly_mul(num_, o.num_);
  den_ += o.den_;
  normalize();
  return *this;
}

RationalFunction operator-(const RationalFunction& a) {
  RationalFunction out = a;
  for (auto& c : out.num_) c = -c;
  return out;
}

Rational ratfn_eval(const RationalFunction& f, const Rational& v) { return f.eval(v); }

}  // namespace crc
