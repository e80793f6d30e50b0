#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "crc/errors.hpp"
#include "crc/multipoly.hpp"

namespace crc {

struct Generator {
  std::string name;
  int degree = 1;
  bool parameter = false;  // quantum parameters are never rewritten
};

template <RingElement K>
struct RewriteRule {
  Exponent lhs;      // leading monomial being eliminated
  MultiPoly<K> rhs;  // what it is replaced by
};

enum class RuleOrder { FirstMatch, LastMatch };

// Quotient ring given by generators, relations, and an oriented rewrite system
// whose irreducible monomials (ignoring parameters) are exactly monomialBasis.
template <FieldElement K>
class Presentation {
 public:
  Presentation(std::vector<Generator> generators, std::vector<MultiPoly<K>> relations,
               std::vector<RewriteRule<K>> rules, std::vector<Exponent> monomialBasis, int stepBound = 20000)
      : gens_(std::move(generators)), rules_(std::move(rules)), basis_(std::move(monomialBasis)), bound_(stepBound) {
    for (const auto& g : gens_) vars_.push_back(g.name);
    for (auto& r : relations) relations_.push_back(r.with_variables(vars_));
    for (auto& rule : rules_) {
      if (rule.lhs.size() != vars_.size()) throw std::invalid_argument("Presentation: rule arity mismatch");
      rule.rhs = rule.rhs.with_variables(vars_);
    }
    for (const auto& m : basis_)
      if (m.size() != vars_.size()) throw std::invalid_argument("Presentation: basis monomial arity mismatch");
  }

  const std::vector<Generator>& generators() const { return gens_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<MultiPoly<K>>& relations() const { return relations_; }
  const std::vector<RewriteRule<K>>& rules() const { return rules_; }
  const std::vector<Exponent>& monomial_basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  std::vector<int> weights() const {
    std::vector<int> w;
    for (const auto& g : gens_) w.push_back(g.degree);
    return w;
  }
  bool has_parameters() const {
    return std::any_of(gens_.begin(), gens_.end(), [](const Generator& g) { return g.parameter; });
  }

  MultiPoly<K> one() const { return MultiPoly<K>::constant(vars_, K{1}); }
  MultiPoly<K> variable(std::string_view name) const { return MultiPoly<K>::variable(vars_, name); }
  MultiPoly<K> monomial(const Exponent& e, const K& c = K{1}) const { return MultiPoly<K>::monomial(vars_, e, c); }

  // Rewrites until every term is a basis monomial times parameters.
  MultiPoly<K> reduce(const MultiPoly<K>& poly, RuleOrder order = RuleOrder::FirstMatch) const {
    std::map<Exponent, K> work;
    MultiPoly<K> input = poly.with_variables(vars_);
    for (const auto& [e, c] : input.terms()) work.emplace(e, c);
    MultiPoly<K> result(vars_);
    int steps = 0;
    while (!work.empty()) {
      auto it = std::prev(work.end());
      Exponent mono = it->first;
      K coeff = it->second;
      work.erase(it);
      const RewriteRule<K>* rule = find_rule(mono, order);
      if (!rule) {
        if (!is_standard(mono))
          throw std::logic_error("Presentation: irreducible monomial outside the basis: " + result.monomial_string(mono));
        result.add_term(mono, coeff);
        continue;
      }
      if (++steps > bound_) throw NonTerminatingReduction("Presentation: rewrite step bound exceeded");
      Exponent rest(mono.size());
      for (std::size_t k = 0; k < mono.size(); ++k) rest[k] = mono[k] - rule->lhs[k];
      for (const auto& [e, c] : rule->rhs.terms()) {
        Exponent ne(e.size());
        for (std::size_t k = 0; k < e.size(); ++k) ne[k] = e[k] + rest[k];
        K add = c * coeff;
        auto [slot, inserted] = work.try_emplace(ne, add);
        if (!inserted) {
          slot->second = slot->second + add;
          if (slot->second.is_zero()) work.erase(slot);
        }
      }
    }
    return result;
  }

  // Coordinates over monomialBasis; only for parameter-free input.
  std::vector<K> normal_form(const MultiPoly<K>& poly) const {
    MultiPoly<K> r = reduce(poly);
    std::vector<K> out(basis_.size(), K{0});
    for (const auto& [e, c] : r.terms()) {
      auto it = std::find(basis_.begin(), basis_.end(), e);
      if (it == basis_.end())
        throw std::invalid_argument("Presentation::normal_form: parameter-dependent term " + r.monomial_string(e));
      out[static_cast<std::size_t>(it - basis_.begin())] = c;
    }
    return out;
  }

  MultiPoly<K> from_coordinates(const std::vector<K>& coords) const {
    MultiPoly<K> out(vars_);
    for (std::size_t k = 0; k < coords.size(); ++k) out.add_term(basis_[k], coords[k]);
    return out;
  }

  bool relations_reduce_to_zero() const {
    return std::all_of(relations_.begin(), relations_.end(), [&](const MultiPoly<K>& r) { return reduce(r).is_zero(); });
  }

  // Reduces every generator monomial up to the given weighted degree with both
  // rule-selection orders; a confluent system gives the same answer.
  bool confluent_through(int maxDegree) const {
    for (const auto& e : monomials_through(maxDegree)) {
      auto m = monomial(e);
      if (!(reduce(m, RuleOrder::FirstMatch) == reduce(m, RuleOrder::LastMatch))) return false;
    }
    return true;
  }

  std::vector<Exponent> monomials_through(int maxDegree) const {
    std::vector<Exponent> out;
    Exponent e(vars_.size(), 0);
    enumerate(0, maxDegree, e, out);
    return out;
  }

  int degree_of(const Exponent& e) const {
    int d = 0;
    for (std::size_t k = 0; k < e.size(); ++k) d += e[k] * gens_[k].degree;
    return d;
  }

 private:
  void enumerate(std::size_t k, int budget, Exponent& e, std::vector<Exponent>& out) const {
    if (k == e.size()) {
      out.push_back(e);
      return;
    }
    if (gens_[k].parameter) {
      e[k] = 0;
      enumerate(k + 1, budget, e, out);
      return;
    }
    for (int p = 0; p * gens_[k].degree <= budget; ++p) {
      e[k] = p;
      enumerate(k + 1, budget - p * gens_[k].degree, e, out);
    }
    e[k] = 0;
  }

  bool divides(const Exponent& lhs, const Exponent& mono) const {
    for (std::size_t k = 0; k < mono.size(); ++k)
      if (lhs[k] > mono[k]) return false;
    return true;
  }

  const RewriteRule<K>* find_rule(const Exponent& mono, RuleOrder order) const {
    if (order == RuleOrder::FirstMatch) {
      for (const auto& r : rules_)
        if (divides(r.lhs, mono)) return &r;
    } else {
      for (auto it = rules_.rbegin(); it != rules_.rend(); ++it)
        if (divides(it->lhs, mono)) return &*it;
    }
    return nullptr;
  }

  bool is_standard(const Exponent& mono) const {
    Exponent stripped = mono;
    for (std::size_t k = 0; k < gens_.size(); ++k)
      if (gens_[k].parameter) stripped[k] = 0;
    return std::find(basis_.begin(), basis_.end(), stripped) != basis_.end();
  }

  std::vector<Generator> gens_;
  std::vector<std::string> vars_;
  std::vector<MultiPoly<K>> relations_;
  std::vector<RewriteRule<K>> rules_;
  std::vector<Exponent> basis_;
  int bound_;
};

template <FieldElement K>
std::vector<K> normal_form(const Presentation<K>& p, const MultiPoly<K>& poly) {
  return p.normal_form(poly);
}

}  // namespace crc
