#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "crc/errors.hpp"
#include "crc/rational.hpp"

namespace crc {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over a coefficient ring.
template <RingElement Coeff>
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

  static MultiPoly constant(std::vector<std::string> variables, const Coeff& c) {
    MultiPoly p(std::move(variables));
    p.add_term(Exponent(p.vars_.size(), 0), c);
    return p;
  }
  static MultiPoly variable(std::vector<std::string> variables, std::string_view name) {
    MultiPoly p(std::move(variables));
    Exponent e(p.vars_.size(), 0);
    e[p.index_of(name)] = 1;
    p.add_term(std::move(e), Coeff{1});
    return p;
  }
  static MultiPoly monomial(std::vector<std::string> variables, Exponent e, const Coeff& c) {
    MultiPoly p(std::move(variables));
    p.add_term(std::move(e), c);
    return p;
  }

  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<Exponent, Coeff>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  std::size_t index_of(std::string_view name) const {
    for (std::size_t k = 0; k < vars_.size(); ++k)
      if (vars_[k] == name) return k;
    throw UnboundSymbol("MultiPoly: unknown variable '" + std::string(name) + "'");
  }
  bool has_variable(std::string_view name) const {
    return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
  }

  Coeff coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Coeff{0} : it->second;
  }
  Coeff constant_term() const { return coefficient(Exponent(vars_.size(), 0)); }

  void add_term(Exponent e, const Coeff& c) {
    if (e.size() != vars_.size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  // Re-embeds into a variable list that contains every current variable.
  MultiPoly with_variables(const std::vector<std::string>& target) const {
    std::vector<std::size_t> map(vars_.size());
    for (std::size_t k = 0; k < vars_.size(); ++k) {
      auto it = std::find(target.begin(), target.end(), vars_[k]);
      if (it == target.end()) {
        bool used = std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[k] != 0; });
        if (used) throw UnboundSymbol("MultiPoly: variable '" + vars_[k] + "' missing from target");
        map[k] = target.size();
        continue;
      }
      map[k] = static_cast<std::size_t>(it - target.begin());
    }
    MultiPoly out(target);
    for (const auto& [e, c] : terms_) {
      Exponent ne(target.size(), 0);
      for (std::size_t k = 0; k < e.size(); ++k)
        if (map[k] < target.size()) ne[map[k]] = e[k];
      out.add_term(std::move(ne), c);
    }
    return out;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, Coeff{1}); }
  MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, Coeff{-1}); }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a) { return a.scaled(Coeff{-1}); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    auto vars = merged_variables(a.vars_, b.vars_);
    MultiPoly x = a.with_variables(vars), y = b.with_variables(vars);
    MultiPoly out(vars);
    for (const auto& [ea, ca] : x.terms_)
      for (const auto& [eb, cb] : y.terms_) {
        Exponent e(ea.size());
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        out.add_term(std::move(e), ca * cb);
      }
    return out;
  }

  MultiPoly scaled(const Coeff& c) const {
    MultiPoly out(vars_);
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
  }

  MultiPoly pow(int exponent) const {
    MultiPoly result = constant(vars_, Coeff{1});
    for (int k = 0; k < exponent; ++k) result = result * *this;
    return result;
  }

  // Weighted degree of the highest term; -1 for the zero polynomial.
  int degree(const std::vector<int>& weights) const {
    int best = -1;
    for (const auto& [e, c] : terms_) best = std::max(best, weighted(e, weights));
    return best;
  }
  MultiPoly homogeneous_part(const std::vector<int>& weights, int d) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_)
      if (weighted(e, weights) == d) out.add_term(e, c);
    return out;
  }
  MultiPoly truncated(const std::vector<int>& weights, int maxDegree) const {
    MultiPoly out(vars_);
    for (const auto& [e, c] : terms_)
      if (weighted(e, weights) <= maxDegree) out.add_term(e, c);
    return out;
  }

  template <class F>
  auto map_coefficients(F f) const -> MultiPoly<decltype(f(std::declval<const Coeff&>()))> {
    using Out = decltype(f(std::declval<const Coeff&>()));
    MultiPoly<Out> out(vars_);
    for (const auto& [e, c] : terms_) out.add_term(e, f(c));
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Coeff>> ordered(terms_.begin(), terms_.end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
      int da = std::accumulate(a.first.begin(), a.first.end(), 0);
      int db = std::accumulate(b.first.begin(), b.first.end(), 0);
      if (da != db) return da > db;
      return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ordered) {
      std::string mono = monomial_string(e);
      std::string cs = c.to_string();
      bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('i') != std::string::npos;
      if (compound) cs = "(" + cs + ")";
      bool negative = !compound && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      if (!first) os << (negative ? " - " : " + ");
      else if (negative) os << "-";
      if (mono.empty()) os << cs;
      else if (cs == "1") os << mono;
      else os << cs << "*" << mono;
      first = false;
    }
    return os.str();
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    auto vars = merged_variables(a.vars_, b.vars_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
  }

  static std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                                   const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b)
      if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    return out;
  }

  std::string monomial_string(const Exponent& e) const {
    std::string s;
    for (std::size_t k = 0; k < e.size(); ++k) {
      if (e[k] == 0) continue;
      if (!s.empty()) s += "*";
      s += vars_[k];
      if (e[k] > 1) s += "^" + std::to_string(e[k]);
    }
    return s;
  }

 private:
  static int weighted(const Exponent& e, const std::vector<int>& w) {
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += e[k] * (k < w.size() ? w[k] : 1);
    return d;
  }

  MultiPoly& accumulate(const MultiPoly& o, const Coeff& sign) {
    if (o.vars_ != vars_) {
      auto vars = merged_variables(vars_, o.vars_);
      *this = with_variables(vars);
      MultiPoly y = o.with_variables(vars);
      for (const auto& [e, c] : y.terms_) add_term(e, c * sign);
      return *this;
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c * sign);
    return *this;
  }

  std::vector<std::string> vars_;
  std::map<Exponent, Coeff> terms_;
};

// Ring homomorphism determined by images of the variables of p.
template <RingElement Coeff>
MultiPoly<Coeff> poly_substitute(const MultiPoly<Coeff>& p,
                                 const std::map<std::string, MultiPoly<Coeff>>& assignment) {
  std::vector<std::string> target;
  std::vector<const MultiPoly<Coeff>*> images;
  for (const auto& v : p.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw UnboundSymbol("poly_substitute: no assignment for '" + v + "'");
    images.push_back(&it->second);
    target = MultiPoly<Coeff>::merged_variables(target, it->second.variables());
  }
  std::vector<std::vector<MultiPoly<Coeff>>> powers(images.size());
  auto power = [&](std::size_t k, int e) -> const MultiPoly<Coeff>& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(MultiPoly<Coeff>::constant(target, Coeff{1}));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * *images[k]);
    return cache[e];
  };
  MultiPoly<Coeff> out(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<Coeff> term = MultiPoly<Coeff>::constant(target, c);
    for (std::size_t k = 0; k < e.size(); ++k)
      if (e[k] > 0) term = term * power(k, e[k]);
    out += term.with_variables(target);
  }
  return out.with_variables(target);
}

inline MultiPoly<GaussRational> promote(const MultiPoly<Rational>& p) {
  return p.map_coefficients([](const Rational& r) { return GaussRational(r); });
}

}  // namespace crc
