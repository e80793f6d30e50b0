#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "crc/graded_algebra.hpp"
#include "crc/gw_tables.hpp"
#include "crc/multipoly.hpp"
#include "crc/ratfunc.hpp"

namespace crc {

// Polynomial in the degree-2 quantum parameter with coefficients in C
// (Rational, or RationalFunction in the degree-0 parameter q1).
template <RingElement C>
class QPoly {
 public:
  QPoly() = default;
  QPoly(long c) { add(0, C{c}); }
  static QPoly constant(const C& c) { return monomial(0, c); }
  static QPoly monomial(int power, const C& c) {
    QPoly p;
    p.add(power, c);
    return p;
  }

  const std::map<int, C>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  C coefficient(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? C{0} : it->second;
  }
  void add(int power, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(power, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  template <class F>
  auto map(F f) const -> QPoly<decltype(f(std::declval<const C&>()))> {
    QPoly<decltype(f(std::declval<const C&>()))> out;
    for (const auto& [k, c] : terms_) out.add(k, f(c));
    return out;
  }

  friend QPoly operator+(QPoly a, const QPoly& b) {
    for (const auto& [k, c] : b.terms_) a.add(k, c);
    return a;
  }
  friend QPoly operator-(const QPoly& a) { return a.map([](const C& c) { return -c; }); }
  friend QPoly operator-(const QPoly& a, const QPoly& b) { return a + (-b); }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly out;
    for (const auto& [i, x] : a.terms_)
      for (const auto& [j, y] : b.terms_) out.add(i + j, x * y);
    return out;
  }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  std::string to_string() const { return to_string("q"); }
  std::string to_string(const std::string& param) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string q = k == 0 ? "" : (k == 1 ? param : param + "^" + std::to_string(k));
      s += q.empty() ? "(" + c.to_string() + ")" : "(" + c.to_string() + ")*" + q;
    }
    return s;
  }

 private:
  std::map<int, C> terms_;
};

template <RingElement C>
using QElement = std::vector<QPoly<C>>;

template <RingElement C>
class QuantumRing {
 public:
  QuantumRing(std::shared_ptr<const GradedAlgebra> base, std::string parameter,
              std::vector<std::vector<QElement<C>>> table)
      : base_(std::move(base)), param_(std::move(parameter)), table_(std::move(table)) {}

  const GradedAlgebra& base() const { return *base_; }
  const std::shared_ptr<const GradedAlgebra>& base_ptr() const { return base_; }
  const std::string& parameter() const { return param_; }
  std::size_t dimension() const { return table_.size(); }
  const QElement<C>& product(int a, int b) const { return table_.at(a).at(b); }
  const std::vector<std::vector<QElement<C>>>& table() const { return table_; }

  QElement<C> zero() const { return QElement<C>(dimension()); }
  QElement<C> basis(int i) const {
    auto e = zero();
    e.at(i) = QPoly<C>(1);
    return e;
  }
  QElement<C> scalar(const QPoly<C>& p) const {
    auto e = zero();
    e[base_->unit()] = p;
    return e;
  }
  int index(const std::string& name) const { return base_->index_of(name); }

  QElement<C> multiply(const QElement<C>& x, const QElement<C>& y) const {
    auto out = zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j].is_zero()) continue;
        QPoly<C> xy = x[i] * y[j];
        const auto& p = table_[i][j];
        for (std::size_t k = 0; k < p.size(); ++k)
          if (!p[k].is_zero()) out[k] = out[k] + xy * p[k];
      }
    }
    return out;
  }

  template <class F>
  auto map_coefficients(F f) const -> QuantumRing<decltype(f(std::declval<const C&>()))> {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<std::vector<QElement<D>>> t(table_.size());
    for (std::size_t a = 0; a < table_.size(); ++a)
      for (const auto& e : table_[a]) {
        QElement<D> m;
        for (const auto& p : e) m.push_back(p.map(f));
        t[a].push_back(std::move(m));
      }
    return QuantumRing<D>(base_, param_, std::move(t));
  }

 private:
  std::shared_ptr<const GradedAlgebra> base_;
  std::string param_;
  std::vector<std::vector<QElement<C>>> table_;
};

template <RingElement C>
bool is_zero(const QElement<C>& e) {
  for (const auto& p : e)
    if (!p.is_zero()) return false;
  return true;
}

// How the q1-direction of one q2-row is summed: explicitly from the table up to
// q1^explicitUpTo, then either a closed-form family or zero (a vanishing theorem of
// the recursion, never an extrapolation).
struct Q1Series {
  enum class Tail { Zero, Family };
  int row = 0;
  int explicitUpTo = 0;
  Tail tail = Tail::Zero;
};

// Row 0 from the multiple-cover family; rows 1, 2, 3 vanish past n = 2, 3, 4.
std::vector<Q1Series> default_q1_config();

// Sum over n of <insertions>^{(n, s.row)} q1^n; row 0 starts at n = 1.
RationalFunction q1_row_sum(const InvariantTable& y, const std::vector<int>& insertions, const Q1Series& s);

QuantumRing<Rational> build_x_quantum_ring(const InvariantTable& x);
QuantumRing<RationalFunction> build_y_quantum_ring(const InvariantTable& y,
                                                   const std::vector<Q1Series>& config = default_q1_config());

// Every coefficient evaluated at q1 = v; PoleError at v = 1.
QuantumRing<Rational> specialize_q1(const QuantumRing<RationalFunction>& ring, const Rational& v);

template <RingElement C>
struct AssociativityFailure {
  int a, b, c;
  QElement<C> residual;
};

template <RingElement C>
struct AssociativityReport {
  std::size_t triples = 0;
  std::vector<AssociativityFailure<C>> failures;
  bool ok() const { return failures.empty(); }
};

template <RingElement C>
AssociativityReport<C> check_associativity(const QuantumRing<C>& r) {
  AssociativityReport<C> rep;
  int n = static_cast<int>(r.dimension());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        ++rep.triples;
        auto lhs = r.multiply(r.product(a, b), r.basis(c));
        auto rhs = r.multiply(r.basis(a), r.product(b, c));
        QElement<C> res(lhs.size());
        for (std::size_t k = 0; k < lhs.size(); ++k) res[k] = lhs[k] - rhs[k];
        if (!is_zero(res)) rep.failures.push_back({a, b, c, std::move(res)});
      }
  return rep;
}

template <RingElement C>
bool is_commutative(const QuantumRing<C>& r) {
  int n = static_cast<int>(r.dimension());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(r.product(a, b) == r.product(b, a))) return false;
  return true;
}

// deg(class) + 2 * (q-power) = deg(a) + deg(b) for every term; q1 is weightless.
template <RingElement C>
bool is_homogeneous(const QuantumRing<C>& r) {
  const auto& A = r.base();
  int n = static_cast<int>(r.dimension());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Rational target = A.basis_class(a).degree + A.basis_class(b).degree;
      const auto& e = r.product(a, b);
      for (int c = 0; c < n; ++c)
        for (const auto& [k, coeff] : e[c].terms())
          if (A.basis_class(c).degree + Rational{2 * k} != target) return false;
    }
  return true;
}

// Setting every quantum parameter to zero recovers the classical structure constants.
bool classical_limit_matches(const QuantumRing<Rational>& r);
bool classical_limit_matches(const QuantumRing<RationalFunction>& r);

// Value of a polynomial in generator classes and the degree-2 parameter, every product
// taken in the quantum ring. Variables other than the parameter must be basis names.
template <RingElement C>
QElement<C> evaluate(const QuantumRing<C>& r, const MultiPoly<C>& poly) {
  const auto& vars = poly.variables();
  std::vector<QElement<C>> images;
  for (const auto& v : vars)
    images.push_back(v == r.parameter() ? r.scalar(QPoly<C>::monomial(1, C{1})) : r.basis(r.index(v)));
  auto out = r.zero();
  for (const auto& [e, c] : poly.terms()) {
    auto term = r.scalar(QPoly<C>::constant(c));
    for (std::size_t k = 0; k < e.size(); ++k)
      for (int p = 0; p < e[k]; ++p) term = r.multiply(term, images[k]);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] + term[k];
  }
  return out;
}

template <RingElement C>
bool verify_presentation(const QuantumRing<C>& r, const std::vector<MultiPoly<C>>& relations) {
  for (const auto& rel : relations)
    if (!is_zero(evaluate(r, rel))) return false;
  return true;
}

// Relations of the quantum rings as printed, in variables (S1, S2, q) and (T1, T2, q2).
std::vector<MultiPoly<Rational>> x_quantum_relations();
std::vector<MultiPoly<RationalFunction>> y_quantum_relations();
// The q1 = -1 relations 5T2^2 - 6T1T2 + 3T1^2 - 2q2 and T1^3 + 3T1^2T2 + (66T1 - 70T2)q2.
std::vector<MultiPoly<Rational>> y_specialized_relations();

// One product in the printed layout, e.g. "T1*T1 = T3 + (-18*T3 + 6*T4)*q1/(1 - q1) + ...".
std::string format_element(const QuantumRing<Rational>& r, const QElement<Rational>& e);
std::string format_element(const QuantumRing<RationalFunction>& r, const QElement<RationalFunction>& e);

// Upper-triangular products over the non-unit classes, one line each.
std::string format_table(const QuantumRing<Rational>& r);
std::string format_table(const QuantumRing<RationalFunction>& r);
// {"space", "parameter", "products": [{"a","b","value","terms":[{"class","power","coefficient"}]}]}
std::string table_json(const QuantumRing<Rational>& r, const std::string& space);
std::string table_json(const QuantumRing<RationalFunction>& r, const std::string& space);

}  // namespace crc
