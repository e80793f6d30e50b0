#include "crc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace crc {

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string{} : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  if (s.front() == '+') s.erase(0, 1);
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& t) {
    std::size_t start = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (start == t.size()) return false;
    for (std::size_t k = start; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits_ok(num) || !digits_ok(den) || den[0] == '-')
    throw std::invalid_argument("Rational::parse: malformed rational '" + std::string(text) + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::domain_error("Rational::parse: zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result{1}, base = *this;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational{0};
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational GaussRational::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw std::domain_error("GaussRational: inverse of zero");
  return GaussRational(re_ / n, -im_ / n);
}

GaussRational GaussRational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  GaussRational result{1}, base = *this;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
  }
  return result;
}

std::string GaussRational::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string imag;
  if (im_ == Rational{1}) imag = "i";
  else if (im_ == Rational{-1}) imag = "-i";
  else imag = im_.to_string() + "i";
  if (re_.is_zero()) return imag;
  return re_.to_string() + (im_.sign() > 0 ? "+" : "") + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& z) { return os << z.to_string(); }

}  // namespace crc
