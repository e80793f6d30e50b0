#include "crc/rings.hpp"

#include "crc/errors.hpp"

namespace crc {
namespace {

using P = MultiPoly<Rational>;

RingPtr flag_presentation() {
  std::vector<std::string> v{"p1", "p2"};
  auto p1 = P::variable(v, "p1"), p2 = P::variable(v, "p2");
  std::vector<P> relations{p1 * p2 - p1 * p1 - p2 * p2, p1 * p2 * p2 - p1 * p1 * p2};
  std::vector<RewriteRule<Rational>> rules{
      {{0, 2}, p1 * p2 - p1 * p1},
      {{3, 0}, P(v)},
  };
  std::vector<Exponent> basis{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
  return std::make_shared<Presentation<Rational>>(std::vector<Generator>{{"p1", 1}, {"p2", 1}}, relations, rules, basis);
}

// Coordinates of `target` in the span of `columns`, or nullopt.
std::optional<std::vector<Rational>> express(const std::vector<std::vector<Rational>>& columns,
                                             const std::vector<Rational>& target) {
  Matrix<Rational> a(target.size(), std::vector<Rational>(columns.size(), Rational{0}));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (std::size_t r = 0; r < target.size(); ++r) a[r][c] = columns[c][r];
  auto sol = solve_linear(a, target);
  if (!sol.consistent || !sol.unique) return std::nullopt;
  return sol.solution;
}

}  // namespace

GradedAlgebra algebra_from_presentation(const Presentation<Rational>& p, const std::vector<Exponent>& monomials,
                                        const std::vector<std::string>& names, const Exponent& top) {
  std::size_t n = monomials.size();
  if (names.size() != n) throw std::invalid_argument("algebra_from_presentation: names/monomials mismatch");
  std::vector<std::vector<Rational>> columns;
  for (const auto& m : monomials) columns.push_back(p.normal_form(p.monomial(m)));
  auto top_coords = p.normal_form(p.monomial(top));
  std::vector<BasisClass> basis;
  for (std::size_t k = 0; k < n; ++k)
    basis.push_back({static_cast<int>(k), names[k], Rational(p.degree_of(monomials[k])), Sector::Untwisted});

  auto integrate = [&](const std::vector<Rational>& nf) {
    // The top monomial's normal form is a multiple of one basis monomial.
    for (std::size_t k = 0; k < nf.size(); ++k)
      if (!top_coords[k].is_zero()) return nf[k] / top_coords[k];
    throw std::logic_error("algebra_from_presentation: top monomial reduces to zero");
  };
  Matrix<Rational> metric(n, std::vector<Rational>(n, Rational{0}));
  std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto prod = p.normal_form(p.monomial(monomials[i]) * p.monomial(monomials[j]));
      metric[i][j] = integrate(prod);
      auto coords = express(columns, prod);
      if (!coords) throw std::logic_error("algebra_from_presentation: monomials do not span the ring");
      structure[i][j] = *coords;
    }
  int unit = -1;
  for (std::size_t k = 0; k < n; ++k)
    if (p.degree_of(monomials[k]) == 0) unit = static_cast<int>(k);
  return GradedAlgebra(std::move(basis), unit, std::move(metric), std::move(structure));
}

PresentedRing build_flag_ring() {
  auto p = flag_presentation();
  const auto& basis = p->monomial_basis();
  auto algebra = algebra_from_presentation(*p, basis, {"1", "p1", "p2", "p1^2", "p1p2", "p1^2p2"}, Exponent{2, 1});
  return {std::move(algebra), p};
}

SectorMapData flag_involution_sector_data() {
  std::vector<std::string> v{"p1", "p2"};
  auto h = P::variable(v, "p1") + P::variable(v, "p2");
  std::vector<std::string> x{"x"};
  SectorMapData d;
  d.classes = {
      {"S0", Sector::Untwisted, P::constant(v, Rational{1})},
      {"S1", Sector::Untwisted, h},
      {"S2", Sector::Twisted, P::constant(x, Rational{1})},
      {"S3", Sector::Untwisted, h * h},
      {"S4", Sector::Twisted, P::variable(x, "x")},
      {"S5", Sector::Untwisted, h * h * h},
  };
  d.restriction = {{"p1", Rational{2}}, {"p2", Rational{2}}};
  d.fixedLocusMetricFactor = Rational{1, 2};
  d.fixedLocusTop = "x";
  d.ageShift = Rational{1};
  return d;
}

GradedAlgebra build_orbifold_ring(const SectorMapData& d) {
  auto flag = flag_presentation();
  auto curve = projective_space_ring(1, d.fixedLocusTop);
  auto integrate_flag = [&](const P& poly) { return flag->normal_form(poly)[5]; };
  auto integrate_curve = [&](const P& poly) { return curve->normal_form(poly)[1]; };

  std::map<std::string, P> assignment;
  for (const auto& g : flag->generators()) {
    auto it = d.restriction.find(g.name);
    if (it == d.restriction.end()) throw InconsistentPairing("build_orbifold_ring: no restriction for " + g.name);
    assignment.emplace(g.name, P::variable({d.fixedLocusTop}, d.fixedLocusTop).scaled(it->second));
  }
  auto restrict_to_curve = [&](const P& u) { return curve->reduce(poly_substitute(u.with_variables(flag->variables()), assignment)); };

  std::size_t n = d.classes.size();
  std::vector<int> untwisted, twisted;
  std::vector<BasisClass> basis;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& c = d.classes[k];
    if (c.cls.is_zero()) throw InconsistentPairing("build_orbifold_ring: zero class " + c.name);
    Rational degree;
    if (c.sector == Sector::Untwisted) {
      untwisted.push_back(static_cast<int>(k));
      degree = Rational(c.cls.degree(std::vector<int>(c.cls.variables().size(), 1)));
    } else {
      twisted.push_back(static_cast<int>(k));
      degree = Rational(c.cls.degree(std::vector<int>(c.cls.variables().size(), 1))) + d.ageShift;
    }
    basis.push_back({static_cast<int>(k), c.name, degree, c.sector});
  }

  Matrix<Rational> metric(n, std::vector<Rational>(n, Rational{0}));
  for (int i : untwisted)
    for (int j : untwisted) metric[i][j] = d.fixedLocusMetricFactor * integrate_flag(d.classes[i].cls * d.classes[j].cls);
  for (int i : twisted)
    for (int j : twisted) metric[i][j] = d.fixedLocusMetricFactor * integrate_curve(d.classes[i].cls * d.classes[j].cls);

  std::vector<std::vector<Rational>> u_cols, t_cols;
  for (int i : untwisted) u_cols.push_back(flag->normal_form(d.classes[i].cls));
  for (int i : twisted) t_cols.push_back(curve->normal_form(d.classes[i].cls));

  auto embed = [&](const std::vector<int>& slots, const std::vector<Rational>& coords) {
    Vec v(n, Rational{0});
    for (std::size_t k = 0; k < slots.size(); ++k) v[slots[k]] = coords[k];
    return v;
  };

  std::vector<std::vector<Vec>> structure(n, std::vector<Vec>(n, Vec(n, Rational{0})));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& a = d.classes[i];
      const auto& b = d.classes[j];
      if (a.sector == Sector::Untwisted && b.sector == Sector::Untwisted) {
        auto coords = express(u_cols, flag->normal_form(a.cls * b.cls));
        if (!coords) throw InconsistentPairing("build_orbifold_ring: untwisted product leaves the invariant span");
        structure[i][j] = embed(untwisted, *coords);
      } else if (a.sector != b.sector) {
        const auto& u = a.sector == Sector::Untwisted ? a : b;
        const auto& t = a.sector == Sector::Untwisted ? b : a;
        auto coords = express(t_cols, curve->normal_form(restrict_to_curve(u.cls) * t.cls));
        if (!coords) throw InconsistentPairing("build_orbifold_ring: mixed product leaves the twisted span");
        structure[i][j] = embed(twisted, *coords);
      } else {
        // Solve G(w, u) = factor * int_C a b u|_C over untwisted u.
        Matrix<Rational> g;
        std::vector<Rational> rhs;
        for (int r : untwisted) {
          std::vector<Rational> row;
          for (int c : untwisted) row.push_back(metric[r][c]);
          g.push_back(row);
          rhs.push_back(d.fixedLocusMetricFactor * integrate_curve(a.cls * b.cls * restrict_to_curve(d.classes[r].cls)));
        }
        auto sol = solve_linear(g, rhs);
        if (!sol.consistent || !sol.unique)
          throw InconsistentPairing("build_orbifold_ring: twisted product has no untwisted adjoint");
        structure[i][j] = embed(untwisted, sol.solution);
      }
    }
  int unit = -1;
  for (int i : untwisted)
    if (basis[i].degree.is_zero()) unit = i;
  return GradedAlgebra(std::move(basis), unit, std::move(metric), std::move(structure));
}

RingPtr orbifold_presentation() {
  std::vector<std::string> v{"S1", "S2"};
  auto s1 = P::variable(v, "S1"), s2 = P::variable(v, "S2");
  std::vector<P> relations{s2 * s2 * s2, (s2 * s2).scaled(Rational{3}) - (s1 * s1).scaled(Rational{2})};
  std::vector<RewriteRule<Rational>> rules{
      {{2, 0}, (s2 * s2).scaled(Rational{3, 2})},
      {{0, 3}, P(v)},
  };
  std::vector<Exponent> basis{{0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 2}, {1, 2}};
  return std::make_shared<Presentation<Rational>>(std::vector<Generator>{{"S1", 1}, {"S2", 1}}, relations, rules, basis);
}

TotalClass resolution_bundle_class(const RingPtr& base) {
  auto t1 = base->variable("T1");
  TotalClass w = whitney_inverse(TotalClass(base, base->one() + t1));
  return sym2_rank2(w);
}

ResolutionRing build_y_ring(const TotalClass& cV) {
  const RingPtr& base = cV.ambient_ptr();
  auto t1 = base->variable("T1");
  TotalClass base_tangent(base, (base->one() + t1).pow(3));
  auto bundle = proj_bundle(base_tangent, cV, "T2");
  std::vector<Exponent> monomials{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}};
  auto algebra = algebra_from_presentation(*bundle.ring, monomials, {"T0", "T1", "T2", "T3", "T4", "T5"}, Exponent{2, 1});
  return {std::move(algebra), bundle.ring, bundle.tangent};
}

ResolutionRing build_y_ring() {
  auto base = projective_space_ring(2, "T1");
  return build_y_ring(resolution_bundle_class(base));
}

}  // namespace crc
