#include <random>

#include "crc/errors.hpp"
#include "crc/gw_tables.hpp"
#include "doctest.h"

using namespace crc;

namespace {

InvariantKey xkey(std::vector<std::string> names, int d) {
  const auto& m = space_model(Space::X);
  std::vector<int> ins;
  for (auto& n : names) ins.push_back(m.index(n));
  return InvariantKey(ins, CurveClass::x(d));
}

InvariantKey ykey(std::vector<std::string> names, int n, int i) {
  const auto& m = space_model(Space::Y);
  std::vector<int> ins;
  for (auto& s : names) ins.push_back(m.index(s));
  return InvariantKey(ins, CurveClass::y(n, i));
}

}  // namespace

TEST_CASE("curve classes") {
  CHECK(CurveClass::y(1, 2).leq(CurveClass::y(3, 2)));
  CHECK_FALSE(CurveClass::y(1, 3).leq(CurveClass::y(3, 2)));
  CHECK_FALSE((CurveClass::y(1, 0) - CurveClass::y(2, 0)).effective());
  CHECK(CurveClass::zero(Space::Y).is_zero());
  CHECK(classes_below(CurveClass::y(6, 3)).size() == 28);
  CHECK(classes_below(CurveClass::x(4)).size() == 5);
  CHECK(CurveClass::y(2, 1).to_string() == "(2,1)");
}

TEST_CASE("keys are permutation invariant") {
  CHECK(ykey({"T5", "T1", "T3"}, 1, 1) == ykey({"T1", "T3", "T5"}, 1, 1));
  auto seeds = seed_tables();
  CHECK(seeds.y.value(ykey({"T4", "T2", "T4"}, 2, 1)) == Rational{25});
  CHECK(seeds.y.value(ykey({"T4", "T4", "T2"}, 2, 1)) == Rational{25});
}

TEST_CASE("dimension and parity filters") {
  CHECK(dimension_filter(Space::X, xkey({"S1", "S3", "S3"}, 1)));
  CHECK(dimension_filter(Space::X, xkey({"S5", "S5", "S5"}, 3)));
  for (int n = 0; n < 8; ++n) CHECK_FALSE(dimension_filter(Space::Y, ykey({"T2", "T3", "T3"}, n, 2)));
  CHECK(parity_filter(Space::X, xkey({"S2", "S3", "S4"}, 1)));
  CHECK_FALSE(parity_filter(Space::X, xkey({"S2", "S3", "S3"}, 1)));
  CHECK(parity_filter(Space::X, xkey({"S1", "S3", "S3"}, 1)));
  CHECK(dimension_filter(Space::Y, ykey({"T2", "T5"}, 0, 1)));
}

TEST_CASE("exactly nine orbifold candidates") {
  auto c = enumerate_candidates(Space::X, 3);
  CHECK(c.size() == 9);
  CHECK(std::find(c.begin(), c.end(), xkey({"S1", "S4", "S4"}, 1)) != c.end());
  CHECK(std::find(c.begin(), c.end(), xkey({"S3", "S3", "S5"}, 2)) != c.end());
  // Nothing survives above degree 3.
  CHECK(enumerate_candidates(Space::X, 6).size() == 9);
}

TEST_CASE("divisor pairings") {
  const auto& y = space_model(Space::Y);
  CHECK(*y.divisor_pairing(1, CurveClass::y(3, 2)) == Rational{3});
  CHECK(*y.divisor_pairing(2, CurveClass::y(3, 2)) == Rational{2});
  CHECK_FALSE(y.divisor_pairing(3, CurveClass::y(3, 2)));
  CHECK(space_model(Space::X).c1_pairing(CurveClass::x(2)) == Rational{4});
  CHECK(y.c1_pairing(CurveClass::y(5, 2)) == Rational{4});

  auto r = divisor_reduce(ykey({"T1", "T1", "T5"}, 3, 1));
  REQUIRE(r);
  CHECK(r->first == Rational{3});
  auto r2 = divisor_reduce(r->second);
  REQUIRE(r2);
  CHECK(r->first * r2->first == Rational{9});
  CHECK(r2->second == ykey({"T5"}, 3, 1));

  auto t2 = divisor_reduce(ykey({"T2", "T1", "T1"}, 4, 0), 2);
  REQUIRE(t2);
  CHECK(t2->first == Rational{0});

  CHECK_FALSE(divisor_reduce(ykey({"T1", "T1", "T1"}, 0, 0)));
  CHECK_FALSE(divisor_reduce(ykey({"T3", "T4", "T5"}, 1, 2)));

  // <S1,S4,S4>^1 = 1 * <S4,S4>^1.
  auto x = divisor_reduce(xkey({"S1", "S4", "S4"}, 1));
  REQUIRE(x);
  CHECK(x->first == Rational{1});
}

TEST_CASE("divisor reduction is order independent") {
  auto seeds = seed_tables();
  // <T1,T2,T5>^{n,1}: remove T1 then T2, or T2 then T1.
  for (int n = 1; n <= 3; ++n) {
    auto key = ykey({"T1", "T2", "T5"}, n, 1);
    auto a = divisor_reduce(key, 1);
    auto b = divisor_reduce(key, 2);
    REQUIRE(a);
    REQUIRE(b);
    auto a2 = divisor_reduce(a->second, 2);
    auto b2 = divisor_reduce(b->second, 1);
    REQUIRE(a2);
    REQUIRE(b2);
    CHECK(a2->second == b2->second);
    CHECK(a->first * a2->first == b->first * b2->first);
    // Consistency with the stored tables through <T2,T2,T5>^{n,1} = 1 * <T2,T5>^{n,1}.
    CHECK(seeds.y.value(key) == Rational{n} * seeds.y.value(ykey({"T2", "T2", "T5"}, n, 1)));
  }
}

TEST_CASE("orbifold seed table") {
  auto x = seed_tables().x;
  CHECK(x.value(xkey({"S1", "S3", "S3"}, 1)) == Rational{9});
  CHECK(x.value(xkey({"S1", "S1", "S5"}, 1)) == Rational{6});
  CHECK(x.value(xkey({"S3", "S3", "S5"}, 2)) == Rational{54});
  CHECK(x.value(xkey({"S1", "S5", "S5"}, 2)) == Rational{36});
  CHECK(x.value(xkey({"S5", "S5", "S5"}, 3)) == Rational{0});
  CHECK(x.value(xkey({"S1", "S4", "S4"}, 1)) == Rational{1});
  CHECK(x.value(xkey({"S2", "S3", "S4"}, 1)) == Rational{3});
  CHECK(x.value(xkey({"S2", "S2", "S5"}, 1)) == Rational{6});
  CHECK(x.value(xkey({"S4", "S4", "S5"}, 2)) == Rational{3});
  // Degree zero comes from the classical ring.
  CHECK(x.value(xkey({"S0", "S2", "S4"}, 0)) == Rational(1, 2));
  CHECK(x.value(xkey({"S1", "S2", "S2"}, 0)) == Rational(2, 3) * Rational{3});
  CHECK(x.value(xkey({"S2", "S2", "S3"}, 0)) == Rational{0});
  // Known zero by dimension even past the bound.
  CHECK(x.value(xkey({"S5", "S5", "S5"}, 5)) == Rational{0});
  CHECK(x.value(xkey({"S2", "S3", "S3"}, 1)) == Rational{0});
  CHECK(x.value(xkey({"S0", "S3", "S3"}, 1)) == Rational{0});
  CHECK_THROWS_AS(x.value(xkey({"S5", "S5", "S5", "S5"}, 4)), OutOfTableRange);
  // Divisor axiom through the stored <S1,S4,S4>^1 in both directions.
  CHECK(x.value(xkey({"S1", "S1", "S4", "S4"}, 1)) == Rational{1});
  CHECK(x.value(xkey({"S4", "S4"}, 1)) == Rational{1});
  CHECK(x.value(xkey({"S1", "S1", "S1", "S5"}, 1)) == Rational{6});
  CHECK_THROWS_AS(x.value(xkey({"S2", "S2", "S4", "S4"}, 1)), OutOfTableRange);
  CHECK_THROWS_AS(x.set(xkey({"S2", "S3", "S3"}, 1), Rational{1}), std::invalid_argument);
}

TEST_CASE("resolution seed table") {
  auto y = seed_tables().y;
  CHECK(y.value(ykey({"T2", "T4", "T4"}, 2, 1)) == Rational{25});
  CHECK(y.value(ykey({"T5", "T5", "T5"}, 3, 3)) == Rational{12});
  CHECK(y.value(ykey({"T1", "T5", "T5"}, 3, 2)) == Rational{3});
  CHECK(y.value(ykey({"T1", "T1", "T5"}, 2, 1)) == Rational{4});
  CHECK(y.value(ykey({"T2", "T5"}, 0, 1)) == Rational{1});
  CHECK(y.value(ykey({"T4", "T4"}, 0, 1)) == Rational{1});
  CHECK(y.value(ykey({"T3", "T5"}, 0, 1)) == Rational{0});
  for (int n = 1; n <= 40; ++n) {
    CHECK(y.value(ykey({"T1", "T1", "T1"}, n, 0)) == Rational{6});
    CHECK(y.value(ykey({}, n, 0)) == Rational(6) / Rational{n}.pow(3));
    CHECK(y.value(ykey({"T1", "T1", "T2"}, n, 0)) == Rational{0});
  }
  CHECK(y.value(ykey({"T1", "T1", "T1", "T1"}, 3, 0)) == Rational{18});
  CHECK(y.value(ykey({"T5", "T5", "T5"}, 5, 3)) == Rational{0});
  CHECK_THROWS_AS(y.value(ykey({"T5", "T5", "T5"}, 7, 3)), OutOfTableRange);
  CHECK_THROWS_AS(y.value(ykey({"T5", "T5", "T5", "T5"}, 2, 4)), OutOfTableRange);

  // Every stored value passes the filters.
  for (const auto& [k, v] : y.entries()) CHECK(passes_filters(Space::Y, k));
  auto x = seed_tables().x;
  for (const auto& [k, v] : x.entries()) CHECK(passes_filters(Space::X, k));
}

TEST_CASE("multiple-cover family in closed form") {
  auto f = y_multiple_cover_family();
  auto g = f.generating({1, 1, 1});
  REQUIRE(g);
  CHECK(g->to_string() == "6*q1/(1 - q1)");
  CHECK(ratfn_eval(*g, Rational{-1}) == Rational{-3});
  auto zero = f.generating({1, 1, 3});
  REQUIRE(zero);
  CHECK(zero->is_zero());
  CHECK_FALSE(f.generating({1, 1}));
}

TEST_CASE("json round trip") {
  auto seeds = seed_tables();
  for (const auto* t : {&seeds.x, &seeds.y}) {
    auto text = table_to_json(*t);
    auto back = table_from_json(text);
    CHECK(back.space() == t->space());
    CHECK(back.entries() == t->entries());
    CHECK(table_to_json(back) == text);
  }
  auto y = table_from_json(table_to_json(seeds.y));
  CHECK(y.value(ykey({"T1", "T1", "T1"}, 9, 0)) == Rational{6});
  CHECK_THROWS_AS(table_from_json("{\"space\": \"Z\", \"invariants\": []}"), ConfigError);
  CHECK_THROWS_AS(table_from_json("not json"), ConfigError);
}
