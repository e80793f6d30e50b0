#include "crc/errors.hpp"
#include "crc/rings.hpp"
#include "doctest.h"

using namespace crc;

namespace {

MultiPoly<Rational> poly(const RingPtr& r, std::initializer_list<std::pair<Exponent, Rational>> terms) {
  MultiPoly<Rational> p(r->variables());
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("c(W) and c(Sym^2 W) over the plane") {
  auto base = projective_space_ring(2, "T1");
  auto t1 = base->variable("T1");
  TotalClass h(base, base->one() + t1);
  auto w = whitney_inverse(h);
  CHECK(w.value() == poly(base, {{{0}, 1}, {{1}, -1}, {{2}, 1}}));
  CHECK(whitney(h, w) == TotalClass::one(base));
  CHECK(whitney(w, h) == TotalClass::one(base));
  CHECK(whitney(w, TotalClass::one(base)) == w);

  auto v = sym2_rank2(w);
  CHECK(v.value() == poly(base, {{{0}, 1}, {{1}, -3}, {{2}, 6}}));
  CHECK(whitney(v, TotalClass::one(base)) == v);
  CHECK(sym2_rank2(TotalClass::one(base)) == TotalClass::one(base));
  CHECK(sym2_rank2(h).value() == poly(base, {{{0}, 1}, {{1}, 3}, {{2}, 2}}));

  auto p3 = projective_space_ring(3, "h");
  TotalClass cubic(p3, (p3->one() + p3->variable("h")).pow(3));
  CHECK_THROWS(sym2_rank2(cubic));
  CHECK_THROWS(TotalClass(base, t1));
}

TEST_CASE("whitney is commutative and associative") {
  auto base = projective_space_ring(3, "h");
  auto h = base->variable("h");
  TotalClass a(base, base->one() + h.scaled(Rational{2}) + (h * h).scaled(Rational{-1, 3}));
  TotalClass b(base, base->one() - h + (h * h * h).scaled(Rational{5}));
  TotalClass c(base, base->one() + (h * h).scaled(Rational{7}));
  CHECK(whitney(a, b) == whitney(b, a));
  CHECK(whitney(whitney(a, b), c) == whitney(a, whitney(b, c)));
  CHECK(whitney(a, whitney_inverse(a)) == TotalClass::one(base));
}

TEST_CASE("sym2 commutes with rescaling the generator") {
  auto base = projective_space_ring(2, "T1");
  auto t1 = base->variable("T1");
  for (Rational lambda : {Rational{2}, Rational(-1, 3), Rational(5, 7)}) {
    TotalClass c(base, base->one() + t1.scaled(Rational{-1}) + (t1 * t1).scaled(Rational{4}));
    std::map<std::string, MultiPoly<Rational>> scale{{"T1", t1.scaled(lambda)}};
    TotalClass scaled(base, poly_substitute(c.value(), scale));
    CHECK(sym2_rank2(scaled).value() == base->reduce(poly_substitute(sym2_rank2(c).value(), scale)));
  }
}

TEST_CASE("projective bundle over the plane") {
  auto base = projective_space_ring(2, "T1");
  auto t1 = base->variable("T1");
  TotalClass tangent(base, (base->one() + t1).pow(3));
  auto cv = resolution_bundle_class(base);
  auto bundle = proj_bundle(tangent, cv, "T2");
  const auto& ring = *bundle.ring;
  CHECK(ring.dimension() == 2 * base->dimension());
  auto T1 = ring.variable("T1"), T2 = ring.variable("T2");
  auto expected_rel = T2 * T2 - (T1 * T2).scaled(Rational{3}) + (T1 * T1).scaled(Rational{6});
  CHECK(ring.relations().back() == expected_rel);
  auto expected_tangent = ring.one() + T2.scaled(Rational{2}) - (T1 * T1).scaled(Rational{6}) +
                          (T1 * T2).scaled(Rational{6}) + (T1 * T1 * T2).scaled(Rational{6});
  CHECK(bundle.tangent.value() == expected_tangent);
}

TEST_CASE("trivial bundle over a point is the projective line") {
  auto pt = point_ring();
  auto one = TotalClass::one(pt);
  auto bundle = proj_bundle(one, one, "xi");
  auto xi = bundle.ring->variable("xi");
  CHECK(bundle.ring->relations().back() == xi * xi);
  CHECK(bundle.tangent.value() == bundle.ring->one() + xi.scaled(Rational{2}));
  CHECK(bundle.ring->dimension() == 2);
}

TEST_CASE("Poincare dual of the fixed conic") {
  auto flag = build_flag_ring();
  const auto& f = flag.algebra;
  auto pd = poincare_dual_solve(f, Rational{2}, {{f.basis_vector(1), Rational{2}}, {f.basis_vector(2), Rational{2}}});
  CHECK(pd == Vec{0, 0, 0, 0, 2, 0});
  auto fundamental = poincare_dual_solve(f, Rational{0}, {{f.basis_vector(5), Rational{1}}});
  CHECK(fundamental == f.basis_vector(0));
  CHECK_THROWS_AS(poincare_dual_solve(f, Rational{2}, {{f.basis_vector(1), Rational{2}}}), UnderdeterminedDual);
}

TEST_CASE("normal bundle and orbifold c1") {
  // c1(TF) = 2p1 + 2p2, p_i|_C = 2x, c1(TC) = 2x.
  CHECK(normal_bundle_c1({2, 2}, {2, 2}, Rational{2}) == Rational{6});
  CHECK(curve_c1_pairing({2, 2}, {1, 1}, Rational(1, 2)) == Rational{2});
}
