#include "crc/quantum_ring.hpp"

#include <sstream>
#include <tuple>

#include "crc/errors.hpp"
#include "json.hpp"

namespace crc {

std::vector<Q1Series> default_q1_config() {
  using T = Q1Series::Tail;
  return {{0, 0, T::Family}, {1, 2, T::Zero}, {2, 3, T::Zero}, {3, 4, T::Zero}};
}

namespace {

// Largest q-power allowed by dimension: 3 + c1 * k <= 3 * top.
int max_row(const GradedAlgebra& A, const Rational& c1PerUnit) {
  int k = 0;
  while (Rational{3} + c1PerUnit * Rational{k + 1} <= Rational{3} * A.top_degree()) ++k;
  return k;
}

const ClosedFormFamily* family_for(const InvariantTable& t, const CurveClass& beta) {
  for (const auto& f : t.families())
    if (f.covers(beta)) return &f;
  return nullptr;
}

}  // namespace

QuantumRing<Rational> build_x_quantum_ring(const InvariantTable& x) {
  if (x.space() != Space::X) throw std::invalid_argument("build_x_quantum_ring: not an X table");
  const auto& model = x.model();
  const auto& A = *model.algebra;
  auto dual = dual_basis(A);
  int n = static_cast<int>(A.dimension());
  int top = max_row(A, model.c1_pairing(CurveClass::x(1)));
  std::vector<std::vector<QElement<Rational>>> table(n, std::vector<QElement<Rational>>(n, QElement<Rational>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& e = table[a][b];
      const auto& cl = A.product(a, b);
      for (int k = 0; k < n; ++k) e[k].add(0, cl[k]);
      for (int d = 1; d <= top; ++d)
        for (int c = 0; c < n; ++c) {
          Rational v = x.value(InvariantKey({a, b, c}, CurveClass::x(d)));
          if (v.is_zero()) continue;
          for (int k = 0; k < n; ++k) e[k].add(d, v * dual[c][k]);
        }
    }
  return QuantumRing<Rational>(model.algebra, "q", std::move(table));
}

RationalFunction q1_row_sum(const InvariantTable& y, const std::vector<int>& insertions, const Q1Series& s) {
  const auto& model = y.model();
  int row = s.row;
  RationalFunction coeff;
  InvariantKey probe(insertions, CurveClass::y(0, row));
  for (int m = row == 0 ? 1 : 0; m <= s.explicitUpTo; ++m)
    coeff += RationalFunction::monomial(m, y.value(InvariantKey(probe.insertions, CurveClass::y(m, row))));
  int first = std::max(s.explicitUpTo + 1, row == 0 ? 1 : 0);
  if (s.tail == Q1Series::Tail::Family) {
    const auto* fam = family_for(y, CurveClass::y(first, row));
    if (!fam) throw ConfigError("no closed-form family covers q2-row " + std::to_string(row));
    auto g = fam->generating(probe.insertions);
    if (!g) throw ConfigError("family '" + fam->name + "' has no generating function for " + to_string(model, probe));
    // The family sums from its own first class; drop what was already counted explicitly.
    auto taylor = g->taylor(first - 1);
    RationalFunction head;
    for (int m = 0; m < first; ++m) head += RationalFunction::monomial(m, taylor[m]);
    coeff += *g - head;
  } else if (auto bound = y.bound()) {
    // Cross-check the vanishing claim wherever the table reaches.
    for (int m = first; m <= bound->coords[0]; ++m) {
      InvariantKey k(probe.insertions, CurveClass::y(m, row));
      auto v = y.try_value(k);
      if (v && !v->is_zero())
        throw InconsistentDerivation("vanishing claim for q2-row " + std::to_string(row) + " contradicted by " +
                                     to_string(model, k));
    }
  }
  return coeff;
}

QuantumRing<RationalFunction> build_y_quantum_ring(const InvariantTable& y, const std::vector<Q1Series>& config) {
  if (y.space() != Space::Y) throw std::invalid_argument("build_y_quantum_ring: not a Y table");
  const auto& model = y.model();
  const auto& A = *model.algebra;
  auto dual = dual_basis(A);
  int n = static_cast<int>(A.dimension());
  int top = max_row(A, model.c1_pairing(CurveClass::y(0, 1)));
  std::map<int, Q1Series> rows;
  for (const auto& s : config) rows[s.row] = s;
  for (int r = 0; r <= top; ++r)
    if (!rows.count(r)) throw ConfigError("q1 configuration has no entry for q2-row " + std::to_string(r));

  std::vector<std::vector<QElement<RationalFunction>>> table(
      n, std::vector<QElement<RationalFunction>>(n, QElement<RationalFunction>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto& e = table[a][b];
      const auto& cl = A.product(a, b);
      for (int k = 0; k < n; ++k) e[k].add(0, RationalFunction(cl[k]));
      for (int row = 0; row <= top; ++row) {
        const auto& s = rows[row];
        for (int c = 0; c < n; ++c) {
          RationalFunction coeff = q1_row_sum(y, {a, b, c}, s);
          if (coeff.is_zero()) continue;
          for (int k = 0; k < n; ++k)
            if (!dual[c][k].is_zero()) e[k].add(row, coeff * RationalFunction(dual[c][k]));
        }
      }
    }
  return QuantumRing<RationalFunction>(model.algebra, "q2", std::move(table));
}

QuantumRing<Rational> specialize_q1(const QuantumRing<RationalFunction>& ring, const Rational& v) {
  return ring.map_coefficients([&](const RationalFunction& f) { return ratfn_eval(f, v); });
}

bool classical_limit_matches(const QuantumRing<Rational>& r) {
  int n = static_cast<int>(r.dimension());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& cl = r.base().product(a, b);
      for (int k = 0; k < n; ++k)
        if (r.product(a, b)[k].coefficient(0) != cl[k]) return false;
    }
  return true;
}

bool classical_limit_matches(const QuantumRing<RationalFunction>& r) {
  return classical_limit_matches(specialize_q1(r, Rational{0}));
}

std::vector<MultiPoly<Rational>> x_quantum_relations() {
  std::vector<std::string> v{"S1", "S2", "q"};
  auto S1 = MultiPoly<Rational>::variable(v, "S1");
  auto S2 = MultiPoly<Rational>::variable(v, "S2");
  auto q = MultiPoly<Rational>::variable(v, "q");
  auto c = [&](long x) { return MultiPoly<Rational>::constant(v, Rational{x}); };
  return {S2.pow(3) - c(6) * q * S2, c(3) * S2.pow(2) - c(2) * S1.pow(2) - c(2) * q};
}

std::vector<MultiPoly<RationalFunction>> y_quantum_relations() {
  using P = MultiPoly<RationalFunction>;
  std::vector<std::string> v{"T1", "T2", "q2"};
  auto T1 = P::variable(v, "T1");
  auto T2 = P::variable(v, "T2");
  auto q2 = P::variable(v, "q2");
  auto c = [&](const RationalFunction& f) { return P::constant(v, f); };
  auto n = [&](long x) { return c(RationalFunction(x)); };
  auto q1 = c(RationalFunction::q());
  auto g = c(RationalFunction::geometric_tail(1));
  P r1 = T2 * T2 - n(3) * T1 * T2 + n(6) * T1 * T1 - q2 - n(16) * q1 * q2 - n(19) * q1 * q1 * q2 +
         n(18) * g * (T1 * T2 - T2 * T2 + q2 - q1 * q1 * q2);
  P r2 = T1.pow(3) + (n(-6) * T1 - T2) * q1 * q2 - n(8) * T2 * q1 * q1 * q2 -
         n(6) * g * (T1 * T1 * T2 + (n(-10) * T1 - n(3) * T2) * q1 * q2 + (n(10) * T1 - n(24) * T2) * q1 * q1 * q2);
  return {r1, r2};
}

std::vector<MultiPoly<Rational>> y_specialized_relations() {
  std::vector<std::string> v{"T1", "T2", "q2"};
  auto T1 = MultiPoly<Rational>::variable(v, "T1");
  auto T2 = MultiPoly<Rational>::variable(v, "T2");
  auto q2 = MultiPoly<Rational>::variable(v, "q2");
  auto c = [&](long x) { return MultiPoly<Rational>::constant(v, Rational{x}); };
  return {c(5) * T2 * T2 - c(6) * T1 * T2 + c(3) * T1 * T1 - c(2) * q2,
          T1.pow(3) + c(3) * T1 * T1 * T2 + (c(66) * T1 - c(70) * T2) * q2};
}

namespace {

// (q2-power, non-polynomial?, lowest q1 power, shape text) orders the printed groups.
using ShapeKey = std::tuple<int, bool, int, std::string>;

std::string power(const std::string& var, int k) {
  if (k == 0) return "";
  return k == 1 ? var : var + "^" + std::to_string(k);
}

std::string join_mul(const std::vector<std::string>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    s += (s.empty() ? "" : "*") + p;
  }
  return s;
}

std::string render(const GradedAlgebra& A, const std::map<ShapeKey, Vec>& groups) {
  std::vector<std::string> terms;
  for (const auto& [key, vec] : groups) {
    const std::string& shape = std::get<3>(key);
    std::vector<std::size_t> nz;
    for (std::size_t k = 0; k < vec.size(); ++k)
      if (!vec[k].is_zero()) nz.push_back(k);
    if (nz.empty()) continue;
    auto name = [&](std::size_t k) {
      return static_cast<int>(k) == A.unit() ? std::string() : A.basis_class(static_cast<int>(k)).name;
    };
    if (nz.size() == 1) {
      const Rational& s = vec[nz[0]];
      std::string nm = name(nz[0]);
      std::string coef = s.to_string();
      bool bare = nm.empty() && shape.empty();
      if (!bare && s == Rational{1}) coef = "";
      if (!bare && s == Rational{-1}) coef = "-";
      std::string body = join_mul({coef == "-" ? "" : coef, shape, nm});
      terms.push_back(coef == "-" ? "-" + body : body);
    } else {
      std::string lin;
      for (std::size_t k : nz) {
        std::string c = vec[k].to_string();
        bool neg = c[0] == '-';
        if (neg) c.erase(0, 1);
        std::string nm = name(k);
        std::string t = nm.empty() ? c : (c == "1" ? nm : c + "*" + nm);
        lin += lin.empty() ? (neg ? "-" : "") + t : (neg ? " - " : " + ") + t;
      }
      terms.push_back(shape.empty() ? lin : join_mul({"(" + lin + ")", shape}));
    }
  }
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (out.empty()) out = t;
    else if (t[0] == '-') out += " - " + t.substr(1);
    else out += " + " + t;
  }
  return out;
}

}  // namespace

std::string format_element(const QuantumRing<Rational>& r, const QElement<Rational>& e) {
  std::map<ShapeKey, Vec> groups;
  for (std::size_t c = 0; c < e.size(); ++c)
    for (const auto& [k, v] : e[c].terms()) {
      auto& g = groups[{k, false, 0, power(r.parameter(), k)}];
      g.resize(e.size(), Rational{0});
      g[c] += v;
    }
  return render(r.base(), groups);
}

std::string format_element(const QuantumRing<RationalFunction>& r, const QElement<RationalFunction>& e) {
  std::map<ShapeKey, Vec> groups;
  for (std::size_t c = 0; c < e.size(); ++c)
    for (const auto& [k, f] : e[c].terms()) {
      const auto& num = f.numerator();
      if (f.is_polynomial()) {
        for (std::size_t m = 0; m < num.size(); ++m) {
          if (num[m].is_zero()) continue;
          int mi = static_cast<int>(m);
          auto& g = groups[{k, false, mi, join_mul({power("q1", mi), power(r.parameter(), k)})}];
          g.resize(e.size(), Rational{0});
          g[c] += num[m];
        }
        continue;
      }
      // Constant term joins the polynomial groups; the rest vanishes at q1 = 0.
      if (!num[0].is_zero()) {
        auto& g0 = groups[{k, false, 0, power(r.parameter(), k)}];
        g0.resize(e.size(), Rational{0});
        g0[c] += num[0];
      }
      RationalFunction tail = f - RationalFunction(num[0]);
      const auto& tn = tail.numerator();
      std::size_t lead = 0;
      while (tn[lead].is_zero()) ++lead;
      Rational s = tn[lead];
      std::vector<Rational> scaled;
      for (const auto& x : tn) scaled.push_back(x / s);
      RationalFunction shape(scaled, tail.denominator_power());
      auto& g = groups[{k, true, static_cast<int>(lead), join_mul({shape.to_string("q1"), power(r.parameter(), k)})}];
      g.resize(e.size(), Rational{0});
      g[c] += s;
    }
  return render(r.base(), groups);
}

namespace {

template <class C>
std::string format_table_impl(const QuantumRing<C>& r) {
  std::ostringstream os;
  const auto& A = r.base();
  int n = static_cast<int>(r.dimension());
  for (int a = 0; a < n; ++a) {
    if (a == A.unit()) continue;
    for (int b = a; b < n; ++b) {
      if (b == A.unit()) continue;
      os << A.basis_class(a).name << "*" << A.basis_class(b).name << " = " << format_element(r, r.product(a, b)) << "\n";
    }
  }
  return os.str();
}

template <class C>
std::string table_json_impl(const QuantumRing<C>& r, const std::string& space) {
  using nlohmann::ordered_json;
  const auto& A = r.base();
  ordered_json j;
  j["space"] = space;
  j["parameter"] = r.parameter();
  ordered_json prods = ordered_json::array();
  int n = static_cast<int>(r.dimension());
  for (int a = 0; a < n; ++a) {
    if (a == A.unit()) continue;
    for (int b = a; b < n; ++b) {
      if (b == A.unit()) continue;
      ordered_json p;
      p["a"] = A.basis_class(a).name;
      p["b"] = A.basis_class(b).name;
      p["value"] = format_element(r, r.product(a, b));
      ordered_json terms = ordered_json::array();
      const auto& e = r.product(a, b);
      for (int c = 0; c < n; ++c)
        for (const auto& [k, coeff] : e[c].terms())
          terms.push_back({{"class", A.basis_class(c).name}, {"power", k}, {"coefficient", coeff.to_string()}});
      p["terms"] = terms;
      prods.push_back(p);
    }
  }
  j["products"] = prods;
  return j.dump(2);
}

}  // namespace

std::string format_table(const QuantumRing<Rational>& r) { return format_table_impl(r); }
std::string format_table(const QuantumRing<RationalFunction>& r) { return format_table_impl(r); }
std::string table_json(const QuantumRing<Rational>& r, const std::string& space) { return table_json_impl(r, space); }
std::string table_json(const QuantumRing<RationalFunction>& r, const std::string& space) {
  return table_json_impl(r, space);
}

}  // namespace crc
