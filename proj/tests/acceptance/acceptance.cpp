// Acceptance criteria 1-10, one PASS/FAIL line each. Criterion 5 compares against a
// determinant formula that the a-system rows do not satisfy; it is the single expected
// failure and the exit code is 0 exactly when the failed set is {5}.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "../common/published_potentials.hpp"
#include "crc/charclass.hpp"
#include "crc/crc_verify.hpp"
#include "crc/quantum_ring.hpp"
#include "crc/rings.hpp"
#include "crc/wdvv.hpp"

using namespace crc;

namespace {

struct Verdict {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

MultiPoly<Rational> var(const std::vector<std::string>& vars, const std::string& name) {
  return MultiPoly<Rational>::variable(vars, name);
}

Rational r(long p, long q = 1) { return Rational(p, q); }

Verdict nine_invariants() {
  auto t0 = Clock::now();
  auto t = reconstruct(Space::X, x_moduli_seeds(), 3, 4);
  double s = since(t0);
  struct Want {
    std::vector<std::string> names;
    int d;
    Rational v;
  };
  std::vector<Want> want{{{"S2", "S3", "S4"}, 1, r(3)},  {{"S2", "S2", "S5"}, 1, r(6)},
                         {{"S3", "S3", "S5"}, 2, r(54)}, {{"S1", "S5", "S5"}, 2, r(36)},
                         {{"S5", "S5", "S5"}, 3, r(0)},  {{"S4", "S4", "S5"}, 2, r(3)},
                         {{"S1", "S3", "S3"}, 1, r(9)},  {{"S1", "S1", "S5"}, 1, r(6)},
                         {{"S1", "S4", "S4"}, 1, r(1)}};
  int ok = 0;
  std::string got;
  for (const auto& w : want) {
    auto v = t.value(w.names, CurveClass::x(w.d));
    ok += v == w.v;
    got += (got.empty() ? "" : " ") + v.to_string();
  }
  return {ok == 9 && s < 1.0, "values " + got + " in " + fmt_seconds(s)};
}

Verdict x_table() {
  auto ring = build_x_quantum_ring(seed_tables().x);
  // As displayed, in the printed order of factors.
  std::vector<std::string> displayed{
      "S1*S1 = S3 + 2*q",    "S1*S2 = 4*S4",          "S1*S3 = S5 + 3*q*S1",     "S1*S4 = 2*q*S2",
      "S1*S5 = 2*q*S3 + 12*q^2", "S2*S2 = 2/3*S3 + 2*q", "S2*S3 = 6*q*S2",       "S2*S4 = 1/6*S5 + q*S1",
      "S2*S5 = 12*q*S4",      "S3*S3 = 3*q*S3 + 18*q^2", "S3*S4 = 6*q*S4",        "S3*S5 = 18*q^2*S1",
      "S4*S4 = 1/3*q*S3 + q^2", "S4*S5 = 6*q^2*S2",     "S5*S5 = 12*q^2*S3"};
  std::istringstream lines(format_table(ring));
  std::set<std::string> computed;
  for (std::string l; std::getline(lines, l);) computed.insert(l);
  int matched = 0;
  for (const auto& d : displayed) matched += computed.count(d) > 0;

  std::vector<std::string> v{"S1", "S2", "q"};
  auto S1 = var(v, "S1"), S2 = var(v, "S2"), q = var(v, "q");
  bool pres = verify_presentation(ring, {S2.pow(3) - (q * S2).scaled(r(6)),
                                         S2.pow(2).scaled(r(3)) - S1.pow(2).scaled(r(2)) - q.scaled(r(2))});
  return {matched == static_cast<int>(displayed.size()) && pres,
          std::to_string(matched) + "/" + std::to_string(displayed.size()) +
              " displayed products match; presentation " + (pres ? "verifies" : "fails")};
}

Verdict y_recursion() {
  auto t0 = Clock::now();
  auto s = run_recursion(20, true);
  double secs = since(t0);
  using A = std::array<Rational, 4>;
  auto zero4 = A{r(0), r(0), r(0), r(0)};
  std::vector<A> a{{r(1), r(0), r(0), r(1)}, {r(4), r(1), r(5), r(19)}, {r(1), r(4), r(10), r(25)}};
  std::vector<A> b{zero4, {r(2), r(0), r(1), r(7)}, {r(8), r(6), r(20), r(64)},
                   {r(2), r(8), r(21), r(55)}};
  std::vector<std::pair<Rational, Rational>> C{{r(0), r(-6)}, {r(-12), r(-30)}, {r(0), r(0)}};
  std::vector<Rational> c{r(0), r(0), r(6), r(12), r(6)};
  int bad = 0;
  for (int n = 0; n <= 20; ++n) {
    bad += s.a.at(n) != (n < 3 ? a[n] : zero4);
    bad += s.b.at(n) != (n < 4 ? b[n] : zero4);
    bad += s.c.at(n) != (n < 5 ? c[n] : r(0));
    if (n >= 1 && n <= 3) bad += s.C.at(n) != C[n - 1];
  }
  return {bad == 0 && secs < 5.0, std::to_string(bad) + " mismatches over n <= 20 in " + fmt_seconds(secs)};
}

Verdict exhaustive_wdvv() {
  auto t0 = Clock::now();
  auto seeds = seed_tables();
  auto y = check_all_parallel(seeds.y, CurveClass::y(6, 3), false);
  auto x = check_all_parallel(seeds.x, CurveClass::x(4), true);
  double secs = since(t0);
  std::ostringstream d;
  d << "Y: " << wdvv_tuples(Space::Y, false).size() << " tuples, " << y.instances << " instances, "
    << y.failures.size() << " nonzero; X: " << wdvv_tuples(Space::X, true).size() << " tuples, " << x.instances
    << " instances, " << x.failures.size() << " nonzero; " << fmt_seconds(secs);
  return {y.ok() && x.ok() && wdvv_tuples(Space::Y, false).size() == 625 && secs < 60.0, d.str()};
}

Verdict determinant_identity() {
  auto s = run_recursion(20, false);
  int agree = 0;
  std::string first;
  for (int n = 1; n <= 20; ++n) {
    auto det = determinant(build_a_system(n, s).matrix);
    Rational N(n);
    auto printed = N * N * (r(6) * N - r(1)) * (r(3) * N * N - r(6) * N + r(1));
    if (det == printed)
      ++agree;
    else if (first.empty())
      first = "n=" + std::to_string(n) + ": det " + det.to_string() + " vs " + printed.to_string();
  }
  std::string detail = std::to_string(agree) + "/20 agree with n^2(6n-1)(3n^2-6n+1)";
  if (!first.empty()) detail += "; first " + first + " (expected: rows give 3n(n^2-3n+1)(6n^2-3n+1))";
  return {agree == 20, detail};
}

Verdict chern_pipeline() {
  auto base = projective_space_ring(2, "T1");
  auto T1 = base->variable("T1");
  auto one = base->one();
  auto cw = whitney_inverse(TotalClass(base, one + T1));
  bool w = cw.value() == one - T1 + T1 * T1;
  bool sym = sym2_rank2(cw).value() == one - T1.scaled(r(3)) + (T1 * T1).scaled(r(6));

  auto y = build_y_ring();
  const auto& P = *y.presentation;
  auto t1 = P.variable("T1"), t2 = P.variable("T2");
  bool rel = P.relations().back() == t2 * t2 - (t1 * t2).scaled(r(3)) + (t1 * t1).scaled(r(6));
  bool tangent = y.tangent.value() == P.reduce(P.one() + t2.scaled(r(2)) - (t1 * t1).scaled(r(6)) +
                                               (t1 * t2).scaled(r(6)) + (t1 * t1 * t2).scaled(r(6)));

  auto flag = build_flag_ring();
  const auto& f = flag.algebra;
  auto pd = poincare_dual_solve(f, r(2), {{f.basis_vector(f.index_of("p1")), r(2)}, {f.basis_vector(f.index_of("p2")), r(2)}});
  auto twice = f.basis_vector(f.index_of("p1p2"));
  for (auto& x : twice) x *= r(2);
  bool dual = pd == twice;
  bool normal = fixed_curve_normal_c1() == r(6);
  int ok = w + sym + rel + tangent + dual + normal;
  return {ok == 6, std::to_string(ok) + "/6 identities: c(W) = " + cw.to_string() + ", c(TY) = " + y.tangent.to_string() +
                       ", P.D.[C] = " + f.format(pd) + ", c1(N) = " + fixed_curve_normal_c1().to_string()};
}

Verdict specialization() {
  auto s = specialize_q1(build_y_quantum_ring(seed_tables().y), r(-1));
  auto elem = [&](std::initializer_list<std::pair<const char*, QPoly<Rational>>> terms) {
    auto e = s.zero();
    for (const auto& [n, p] : terms) e[s.index(n)] = p;
    return e;
  };
  int t1 = s.index("T1"), t2 = s.index("T2");
  bool products = s.product(t1, t1) == elem({{"T3", 10}, {"T4", -3}}) &&
                  s.product(t1, t2) == elem({{"T4", 1}, {"T0", QPoly<Rational>::monomial(1, r(-2))}});
  std::vector<std::string> v{"T1", "T2", "q2"};
  auto T1 = var(v, "T1"), T2 = var(v, "T2"), q2 = var(v, "q2");
  bool rels = verify_presentation(
      s, {T2.pow(2).scaled(r(5)) - (T1 * T2).scaled(r(6)) + T1.pow(2).scaled(r(3)) - q2.scaled(r(2)),
          T1.pow(3) + (T1 * T1 * T2).scaled(r(3)) + (T1.scaled(r(66)) - T2.scaled(r(70))) * q2});
  auto iso = isomorphism_report(derive_change_of_variables());
  return {products && rels && iso.ok(),
          std::string("T1*T1 = ") + format_element(s, s.product(t1, t1)) + "; R~1, R~2 " + (rels ? "verify" : "fail") +
              "; forward relations " + (iso.forwardRelations ? "0" : "nonzero") + ", inverse relations " +
              (iso.inverseRelations ? "0" : "nonzero") + ", products " + (iso.productsMatch ? "match" : "differ")};
}

Verdict potential_equality() {
  auto seeds = seed_tables();
  auto hodge = hodge_from_tan(1);
  auto fy = assemble_potential(Space::Y, seeds.y, hodge);
  auto fx = assemble_potential(Space::X, seeds.x, hodge);
  int displayed = 0, reproduced = 0;
  for (const auto& t : published::resolution()) {
    ++displayed;
    reproduced += fy.coefficient(t.monomial) == published::coefficient(t);
  }
  for (const auto& t : published::orbifold()) {
    ++displayed;
    reproduced += fx.coefficient(t.monomial) == published::coefficient(t);
  }
  bool complete = fy.cubic.size() == published::resolution().size() && fx.cubic.size() == published::orbifold().size();
  auto cmp = compare_potentials(derive_change_of_variables(), fy, fx);
  auto printed = compare_potentials(printed_change_of_variables(), fy, fx);
  std::ostringstream d;
  d << reproduced << "/" << displayed << " displayed coefficients assembled; F^Y(substituted) - F^X has "
    << cmp.residual_terms() << " terms with t4 = 3s3 + (i/2)s4 (printed i*s4 leaves " << printed.residual_terms()
    << ", informational)";
  return {reproduced == displayed && complete && cmp.ok(), d.str()};
}

Verdict tan_identity_criterion() {
  auto rep = tan_identity_report(15);
  auto hodge = hodge_from_tan(2);
  bool L = hodge.L(1) == r(1, 4) && hodge.L(2) == r(1, 8);
  bool cross = true;
  for (const auto& c : hodge_cross_check(hodge)) cross = cross && c.fromResolution == c.fromHodge;
  auto seeds = seed_tables();
  auto fx = assemble_potential(Space::X, seeds.x, hodge, 6);
  auto fy = assemble_potential(Space::Y, seeds.y, hodge, 6);
  bool feed = compare_potentials(derive_change_of_variables(), fy, fx).ok();
  bool real = rep.reference.is_real() && rep.orbifold.is_real() && rep.resolution.is_real();
  return {rep.ok() && real && L && cross && feed,
          std::string("order 15, four series equal ") + (rep.ok() ? "yes" : "no") + ", real " + (real ? "yes" : "no") +
              "; L1 = " + hodge.L(1).to_string() + ", L2 = " + hodge.L(2).to_string() + ", F^X through s2^6 " +
              (feed ? "consistent" : "inconsistent")};
}

Verdict fault_injection() {
  auto seeds = seed_tables();
  auto sites = fault_sites(seeds);
  std::size_t detected = 0, localized = 0;
  std::string missed;
  for (const auto& [space, key] : sites) {
    auto rep = inject_fault(seeds, space, key);
    if (rep.detected()) ++detected;
    else if (missed.empty()) missed = to_string(space_model(space), key);
    if (rep.firstWdvvFailure || rep.potentialMismatch) ++localized;
  }
  std::string d = std::to_string(detected) + "/" + std::to_string(sites.size()) + " perturbed seeds detected, " +
                  std::to_string(localized) + " with a named instance or monomial";
  if (!missed.empty()) d += "; first undetected " + missed;
  return {!sites.empty() && detected == sites.size() && localized == sites.size(), d};
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Verdict()>>> criteria{
      {1, nine_invariants}, {2, x_table},           {3, y_recursion},        {4, exhaustive_wdvv},
      {5, determinant_identity}, {6, chern_pipeline}, {7, specialization}, {8, potential_equality},
      {9, tan_identity_criterion}, {10, fault_injection}};
  const std::set<int> expectedFailures{5};
  std::set<int> failed;
  for (const auto& [n, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.passed) failed.insert(n);
    std::printf("%s criterion %d: %s%s\n", v.passed ? "PASS" : "FAIL", n, v.detail.c_str(),
                !v.passed && expectedFailures.count(n) ? " [expected failure]" : "");
  }
  bool ok = failed == expectedFailures;
  std::printf("%zu/%zu criteria pass; failures %s the expected set {5}\n", criteria.size() - failed.size(),
              criteria.size(), ok ? "match" : "do not match");
  return ok ? 0 : 1;
}
