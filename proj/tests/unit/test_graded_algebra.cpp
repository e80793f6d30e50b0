#include "crc/errors.hpp"
#include "crc/rings.hpp"
#include "doctest.h"

using namespace crc;

namespace {

Matrix<Rational> int_matrix(const std::vector<std::vector<long>>& rows) {
  Matrix<Rational> m;
  for (const auto& r : rows) {
    std::vector<Rational> row;
    for (long v : r) row.push_back(Rational{v});
    m.push_back(row);
  }
  return m;
}

Vec vec(std::initializer_list<Rational> xs) { return Vec(xs); }

}  // namespace

TEST_CASE("flag ring normal forms") {
  auto flag = build_flag_ring();
  const auto& p = *flag.presentation;
  auto p1 = p.variable("p1"), p2 = p.variable("p2");
  CHECK(p.reduce(p1 * p1 * p1).is_zero());
  CHECK(p.reduce(p.one()) == p.one());
  CHECK(p.normal_form((p1 + p2).pow(3)) == vec({0, 0, 0, 0, 0, 6}));
  CHECK(p.normal_form((p1 + p2).pow(2)) == vec({0, 0, 0, 0, 3, 0}));
  CHECK(p.normal_form(p1 * p2 * p2) == vec({0, 0, 0, 0, 0, 1}));
  CHECK(p.relations_reduce_to_zero());
  CHECK(p.confluent_through(6));
  auto r = p.reduce(p1 * p2 + p2 * p2);
  CHECK(p.reduce(r) == r);

  const auto& a = flag.algebra;
  CHECK(a.pairing(a.basis_vector(5), a.basis_vector(0)) == Rational{1});
  CHECK(check_axioms(a).all());
  CHECK(a.graded_dimensions() == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("orbifold ring of the involution quotient") {
  auto x = build_orbifold_ring(flag_involution_sector_data());
  CHECK(x.metric() == Matrix<Rational>{
                          {0, 0, 0, 0, 0, 3},
                          {0, 0, 0, 3, 0, 0},
                          {0, 0, 0, 0, Rational(1, 2), 0},
                          {0, 3, 0, 0, 0, 0},
                          {0, 0, Rational(1, 2), 0, 0, 0},
                          {3, 0, 0, 0, 0, 0},
                      });
  CHECK(x.product(2, 2) == vec({0, 0, 0, Rational(2, 3), 0, 0}));
  CHECK(x.product(2, 4) == vec({0, 0, 0, 0, 0, Rational(1, 6)}));
  CHECK(x.product(1, 2) == vec({0, 0, 0, 0, 4, 0}));
  CHECK(x.product(1, 1) == vec({0, 0, 0, 1, 0, 0}));
  CHECK(x.product(1, 3) == vec({0, 0, 0, 0, 0, 1}));
  CHECK(x.product(1, 4) == vec({0, 0, 0, 0, 0, 0}));
  CHECK(x.product(2, 3) == vec({0, 0, 0, 0, 0, 0}));
  for (int k = 0; k < 6; ++k) CHECK(x.product(0, k) == x.basis_vector(k));
  CHECK(x.basis_class(2).sector == Sector::Twisted);
  CHECK(x.basis_class(2).degree == Rational{1});
  CHECK(x.basis_class(4).degree == Rational{2});
  CHECK(x.graded_dimensions() == std::vector<int>{1, 2, 2, 1});
  CHECK(check_axioms(x).all());

  auto dual = dual_basis(x);
  CHECK(dual[0] == vec({0, 0, 0, 0, 0, Rational(1, 3)}));
  CHECK(dual[2] == vec({0, 0, 0, 0, 2, 0}));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(x.pairing(dual[i], x.basis_vector(j)) == Rational(i == j ? 1 : 0));
}

TEST_CASE("orbifold presentation agrees with the algebra") {
  auto x = build_orbifold_ring(flag_involution_sector_data());
  auto pres = orbifold_presentation();
  CHECK(pres->relations_reduce_to_zero());
  CHECK(pres->confluent_through(5));
  Vec s1 = x.basis_vector(1), s2 = x.basis_vector(2);
  CHECK(x.multiply(s2, x.multiply(s2, s2)) == Vec(6, Rational{0}));
  Vec rel = x.multiply(s2, s2);
  for (auto& c : rel) c *= Rational{3};
  Vec s11 = x.multiply(s1, s1);
  for (std::size_t k = 0; k < 6; ++k) rel[k] -= Rational{2} * s11[k];
  CHECK(rel == Vec(6, Rational{0}));
}

TEST_CASE("non-invariant untwisted class is rejected") {
  auto d = flag_involution_sector_data();
  d.classes[1].cls = MultiPoly<Rational>::variable({"p1", "p2"}, "p1");
  CHECK_THROWS_AS(build_orbifold_ring(d), InconsistentPairing);
}

TEST_CASE("resolution ring") {
  auto y = build_y_ring();
  const auto& p = *y.presentation;
  auto t1 = p.variable("T1"), t2 = p.variable("T2");
  CHECK(p.reduce(t2 * t2) == (t1 * t2).scaled(Rational{3}) - (t1 * t1).scaled(Rational{6}));
  CHECK(p.reduce(t2 * t2 * t2) == (t1 * t1 * t2).scaled(Rational{3}));
  CHECK(p.confluent_through(6));
  CHECK(p.dimension() == 6);

  const auto& a = y.algebra;
  CHECK(a.metric() == int_matrix({{0, 0, 0, 0, 0, 1},
                                  {0, 0, 0, 0, 1, 0},
                                  {0, 0, 0, 1, 3, 0},
                                  {0, 0, 1, 0, 0, 0},
                                  {0, 1, 3, 0, 0, 0},
                                  {1, 0, 0, 0, 0, 0}}));
  CHECK(a.inverse_metric() == int_matrix({{0, 0, 0, 0, 0, 1},
                                          {0, 0, 0, -3, 1, 0},
                                          {0, 0, 0, 1, 0, 0},
                                          {0, -3, 1, 0, 0, 0},
                                          {0, 1, 0, 0, 0, 0},
                                          {1, 0, 0, 0, 0, 0}}));
  auto dual = dual_basis(a);
  CHECK(dual[1] == vec({0, 0, 0, -3, 1, 0}));
  CHECK(dual[3] == vec({0, -3, 1, 0, 0, 0}));
  CHECK(check_axioms(a).all());
  CHECK(a.graded_dimensions() == std::vector<int>{1, 2, 2, 1});
}

TEST_CASE("identity metric gives the basis as its own dual") {
  std::vector<BasisClass> basis{{0, "e0", Rational{0}, Sector::Untwisted}, {1, "e1", Rational{0}, Sector::Untwisted}};
  std::vector<std::vector<Vec>> structure{{vec({1, 0}), vec({0, 1})}, {vec({0, 1}), vec({1, 0})}};
  GradedAlgebra a(basis, 0, identity_matrix<Rational>(2), structure);
  auto dual = dual_basis(a);
  CHECK(dual[0] == a.basis_vector(0));
  CHECK(dual[1] == a.basis_vector(1));
  CHECK_THROWS_AS(GradedAlgebra(basis, 0, int_matrix({{1, 1}, {1, 1}}), structure), SingularMetric);
}
