#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

namespace crc {

// Exact rational in lowest terms with positive denominator, backed by GMP.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : v_(value) {}
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  // Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  Rational inverse() const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }
  Rational pow(int exponent) const;
  std::string to_string() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(int n);
Rational binomial(int n, int k);

// Element of Q(i). Promotion from Rational is explicit; integers convert implicitly.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long value) : re_(value) {}
  explicit GaussRational(Rational re, Rational im = Rational{}) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRational i() { return GaussRational(Rational{0}, Rational{1}); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  GaussRational conj() const { return GaussRational(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussRational inverse() const;
  GaussRational pow(int exponent) const;
  std::string to_string() const;

  GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return GaussRational(-a.re_, -a.im_); }
  friend bool operator==(const GaussRational& a, const GaussRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& z);

inline GaussRational promote(const Rational& r) { return GaussRational(r); }

template <class T>
concept RingElement = std::regular<T> && std::constructible_from<T, long> &&
    requires(const T& a, const T& b) {
      { a + b } -> std::same_as<T>;
      { a - b } -> std::same_as<T>;
      { a * b } -> std::same_as<T>;
      { -a } -> std::same_as<T>;
      { a.is_zero() } -> std::same_as<bool>;
      { a.to_string() } -> std::convertible_to<std::string>;
    };

template <class T>
concept FieldElement = RingElement<T> && requires(const T& a) {
  { a.inverse() } -> std::same_as<T>;
};

}  // namespace crc
