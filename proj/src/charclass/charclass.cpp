#include "crc/charclass.hpp"

#include "crc/errors.hpp"

namespace crc {

TotalClass::TotalClass(RingPtr ambient, const MultiPoly<Rational>& value)
    : ambient_(std::move(ambient)), value_(ambient_->reduce(value)) {
  if (value_.constant_term() != Rational{1})
    throw std::invalid_argument("TotalClass: constant term must be 1, got " + value_.to_string());
}

TotalClass TotalClass::one(RingPtr ambient) {
  auto v = ambient->one();
  return TotalClass(std::move(ambient), v);
}

MultiPoly<Rational> TotalClass::component(int degree) const {
  return value_.homogeneous_part(ambient_->weights(), degree);
}

int TotalClass::top_nonzero_degree() const { return value_.degree(ambient_->weights()); }

TotalClass whitney(const TotalClass& a, const TotalClass& b) {
  if (a.ambient_ptr() != b.ambient_ptr()) throw std::invalid_argument("whitney: different ambient rings");
  return TotalClass(a.ambient_ptr(), a.value() * b.value());
}

TotalClass whitney_inverse(const TotalClass& a) {
  const auto& ring = a.ambient();
  auto u = a.value() - ring.one();
  auto term = ring.one();
  auto sum = ring.one();
  int top = 0;
  for (const auto& e : ring.monomial_basis()) top = std::max(top, ring.degree_of(e));
  for (int k = 1; k <= top; ++k) {
    term = ring.reduce(term * u).scaled(Rational{-1});
    sum += term;
  }
  return TotalClass(a.ambient_ptr(), sum);
}

TotalClass sym2_rank2(const TotalClass& c) {
  if (c.top_nonzero_degree() > 2) throw std::invalid_argument("sym2_rank2: class has components above degree 2");
  auto c1 = c.component(1);
  auto c2 = c.component(2);
  const auto& ring = c.ambient();
  auto value = ring.one() + c1.scaled(Rational{3}) + (c1 * c1).scaled(Rational{2}) + c2.scaled(Rational{4}) +
               (c1 * c2).scaled(Rational{4});
  return TotalClass(c.ambient_ptr(), value);
}

RingPtr projective_space_ring(int n, const std::string& generator) {
  std::vector<Generator> gens{{generator, 1, false}};
  MultiPoly<Rational> rel = MultiPoly<Rational>::monomial({generator}, {n + 1}, Rational{1});
  std::vector<RewriteRule<Rational>> rules{{{n + 1}, MultiPoly<Rational>({generator})}};
  std::vector<Exponent> basis;
  for (int k = 0; k <= n; ++k) basis.push_back({k});
  return std::make_shared<Presentation<Rational>>(gens, std::vector{rel}, rules, basis);
}

RingPtr point_ring() {
  return std::make_shared<Presentation<Rational>>(std::vector<Generator>{}, std::vector<MultiPoly<Rational>>{},
                                                  std::vector<RewriteRule<Rational>>{}, std::vector<Exponent>{Exponent{}});
}

ProjectiveBundle proj_bundle(const TotalClass& baseTangent, const TotalClass& cV, const std::string& fiberClass) {
  if (baseTangent.ambient_ptr() != cV.ambient_ptr())
    throw std::invalid_argument("proj_bundle: tangent class and bundle over different bases");
  if (cV.top_nonzero_degree() > 2) throw std::invalid_argument("proj_bundle: bundle is not rank 2");
  const auto& base = cV.ambient();
  std::vector<Generator> gens = base.generators();
  gens.push_back({fiberClass, 1, false});
  std::vector<std::string> vars;
  for (const auto& g : gens) vars.push_back(g.name);

  auto xi = MultiPoly<Rational>::variable(vars, fiberClass);
  auto c1 = cV.component(1).with_variables(vars);
  auto c2 = cV.component(2).with_variables(vars);
  auto relation = xi * xi + c1 * xi + c2;

  std::vector<MultiPoly<Rational>> relations;
  for (const auto& r : base.relations()) relations.push_back(r.with_variables(vars));
  relations.push_back(relation);

  std::vector<RewriteRule<Rational>> rules;
  for (const auto& r : base.rules()) {
    Exponent lhs = r.lhs;
    lhs.push_back(0);
    rules.push_back({lhs, r.rhs.with_variables(vars)});
  }
  Exponent xi2(vars.size(), 0);
  xi2.back() = 2;
  rules.push_back({xi2, (c1 * xi + c2).scaled(Rational{-1})});

  std::vector<Exponent> basis;
  for (int p = 0; p < 2; ++p)
    for (auto e : base.monomial_basis()) {
      e.push_back(p);
      basis.push_back(e);
    }
  auto ring = std::make_shared<Presentation<Rational>>(gens, relations, rules, basis);

  auto relative = ring->one() + xi.scaled(Rational{2}) + c1;
  TotalClass tangent(ring, baseTangent.value().with_variables(vars) * relative);
  return {ring, tangent};
}

Vec poincare_dual_solve(const GradedAlgebra& ring, const Rational& degree,
                        const std::vector<std::pair<Vec, Rational>>& constraints) {
  std::vector<int> slots;
  for (const auto& b : ring.basis())
    if (b.degree == degree) slots.push_back(b.index);
  Matrix<Rational> a;
  std::vector<Rational> rhs;
  for (const auto& [test, value] : constraints) {
    std::vector<Rational> row;
    for (int s : slots) row.push_back(ring.pairing(test, ring.basis_vector(s)));
    a.push_back(row);
    rhs.push_back(value);
  }
  auto sol = solve_linear(a, rhs);
  if (!sol.consistent) throw InconsistentPairing("poincare_dual_solve: constraints are inconsistent");
  if (!sol.unique || slots.empty()) throw UnderdeterminedDual("poincare_dual_solve: constraints do not determine the class");
  Vec out(ring.dimension(), Rational{0});
  for (std::size_t k = 0; k < slots.size(); ++k) out[slots[k]] = sol.solution[k];
  return out;
}

Rational normal_bundle_c1(const std::vector<Rational>& ambientC1, const std::vector<Rational>& restriction,
                          const Rational& curveC1) {
  if (ambientC1.size() != restriction.size()) throw std::invalid_argument("normal_bundle_c1: size mismatch");
  Rational restricted{0};
  for (std::size_t k = 0; k < ambientC1.size(); ++k) restricted += ambientC1[k] * restriction[k];
  return restricted - curveC1;
}

Rational curve_c1_pairing(const std::vector<Rational>& c1, const std::vector<Rational>& curve, const Rational& factor) {
  if (c1.size() != curve.size()) throw std::invalid_argument("curve_c1_pairing: size mismatch");
  Rational acc{0};
  for (std::size_t k = 0; k < c1.size(); ++k) acc += c1[k] * curve[k];
  return factor * acc;
}

}  // namespace crc
