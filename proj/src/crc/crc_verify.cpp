#include "crc/crc_verify.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "crc/charclass.hpp"
#include "crc/errors.hpp"
#include "crc/rings.hpp"

namespace crc {

namespace {

using GPoly = MultiPoly<GaussRational>;

GaussRational gauss(const Rational& r) { return GaussRational(r); }

std::vector<std::string> basis_names(Space s) {
  std::vector<std::string> out;
  for (const auto& b : space_model(s).algebra->basis()) out.push_back(b.name);
  return out;
}

std::vector<std::string> insertion_names(Space s) {
  auto out = basis_names(s);
  for (auto& n : out)
    std::transform(n.begin(), n.end(), n.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string parameter_name(Space s) { return s == Space::Y ? "q2" : "q"; }

// Largest curve degree (q2-row on Y) a three-point invariant can have.
int top_row(Space s) {
  const auto& model = space_model(s);
  CurveClass unit = s == Space::Y ? CurveClass::y(0, 1) : CurveClass::x(1);
  Rational step = model.c1_pairing(unit);
  Rational limit = Rational{3} * model.algebra->top_degree();
  int k = 0;
  while (Rational{3} + step * Rational{k + 1} <= limit) ++k;
  return k;
}

QElement<GaussRational> element(const std::vector<GaussRational>& v) {
  QElement<GaussRational> e(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) e[k] = QPoly<GaussRational>::constant(v[k]);
  return e;
}

std::vector<GaussRational> q_free(const QElement<GaussRational>& e) {
  std::vector<GaussRational> out;
  for (const auto& p : e) out.push_back(p.coefficient(0));
  return out;
}

// X element to Y: classes through the matrix, q^k -> (qToQ2 q2)^k.
QElement<GaussRational> push(const ChangeOfVariables& cov, const QElement<GaussRational>& e) {
  std::size_t n = cov.classMap.size();
  QElement<GaussRational> out(n);
  for (std::size_t i = 0; i < e.size(); ++i)
    for (const auto& [k, c] : e[i].terms()) {
      GaussRational scaled = c * cov.qToQ2.pow(k);
      for (std::size_t j = 0; j < n; ++j)
        if (!cov.classMap[j][i].is_zero()) out[j].add(k, scaled * cov.classMap[j][i]);
    }
  return out;
}

// Every source class name goes to sum_j m[j][i] * (target class j); the source parameter
// goes to paramScale * (target parameter).
std::map<std::string, GPoly> linear_assignment(const Matrix<GaussRational>& m, Space source, Space target,
                                               const GaussRational& paramScale) {
  auto src = basis_names(source);
  auto vars = basis_names(target);
  vars.push_back(parameter_name(target));
  std::map<std::string, GPoly> out;
  for (std::size_t i = 0; i < src.size(); ++i) {
    GPoly img(vars);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m[j][i].is_zero()) img += GPoly::variable(vars, vars[j]).scaled(m[j][i]);
    out[src[i]] = img;
  }
  out[parameter_name(source)] = GPoly::variable(vars, parameter_name(target)).scaled(paramScale);
  return out;
}

Matrix<GaussRational> require_inverse(const ChangeOfVariables& cov) {
  auto inv = cov.inverse_class_map();
  if (!inv) throw std::domain_error("change of variables: class map is singular");
  return *inv;
}

GaussRational at_q1(const RationalFunction& f, const Rational& q1) { return gauss(ratfn_eval(f, q1)); }

GPoly evaluate_q1(const MultiPoly<RationalFunction>& p, const Rational& q1) {
  return p.map_coefficients([&](const RationalFunction& f) { return at_q1(f, q1); });
}

// Cubic part of the source after t_j -> sum_i M[j][i] s_i, q1 -> q1Value, q2 -> q / qToQ2.
GPoly substituted_cubic(const ChangeOfVariables& cov, const Potential& source, const Potential& target) {
  auto tv = target.variables();
  std::map<std::string, GPoly> assign;
  for (std::size_t j = 0; j < source.insertionVariables.size(); ++j) {
    GPoly img(tv);
    for (std::size_t i = 0; i < target.insertionVariables.size(); ++i)
      if (!cov.classMap.at(j).at(i).is_zero())
        img += GPoly::variable(tv, target.insertionVariables[i]).scaled(cov.classMap[j][i]);
    assign[source.insertionVariables[j]] = img;
  }
  assign[source.parameter] = GPoly::variable(tv, target.parameter).scaled(cov.qToQ2.inverse());
  return poly_substitute(evaluate_q1(source.cubic, cov.q1Value), assign).with_variables(tv);
}

// Coefficient of x^k (k > 3, no parameter) of the substituted source, x the target direction.
// Above cubic order the source only carries its own direction, whose image must be a
// multiple of the target direction.
GaussRational source_direction_image(const ChangeOfVariables& cov, const Potential& source, int targetDirection,
                                     int k) {
  const auto& row = cov.classMap.at(source.directionIndex);
  for (std::size_t i = 0; i < row.size(); ++i)
    if (static_cast<int>(i) != targetDirection && !row[i].is_zero())
      throw ConfigError("change of variables: the kept directions of the two potentials do not correspond");
  return at_q1(source.direction_coefficient(k), cov.q1Value) * row.at(targetDirection).pow(k);
}

Exponent pure_power(std::size_t nvars, int index, int k) {
  Exponent e(nvars, 0);
  e.at(index) = k;
  return e;
}

}  // namespace

// ---- rings and the change of variables ----

SpecializedRings specialized_rings(const SeedTables& tables, const Rational& q1) {
  auto lift = [](const Rational& r) { return gauss(r); };
  return {build_x_quantum_ring(tables.x).map_coefficients(lift),
          specialize_q1(build_y_quantum_ring(tables.y), q1).map_coefficients(lift)};
}

const SpecializedRings& default_rings() {
  static const SpecializedRings rings = specialized_rings(seed_tables());
  return rings;
}

ChangeOfVariables ChangeOfVariables::identity(std::size_t n) {
  ChangeOfVariables c;
  c.classMap.assign(n, std::vector<GaussRational>(n, GaussRational{0}));
  for (std::size_t k = 0; k < n; ++k) c.classMap[k][k] = GaussRational{1};
  c.qToQ2 = GaussRational{1};
  return c;
}

std::optional<Matrix<GaussRational>> ChangeOfVariables::inverse_class_map() const { return inverse(classMap); }

std::string ChangeOfVariables::to_string() const {
  auto t = insertion_names(Space::Y), s = insertion_names(Space::X);
  std::ostringstream os;
  for (std::size_t j = 0; j < classMap.size(); ++j) {
    GPoly img(s);
    for (std::size_t i = 0; i < classMap[j].size(); ++i)
      if (!classMap[j][i].is_zero()) img += GPoly::variable(s, s[i]).scaled(classMap[j][i]);
    os << (j < t.size() ? t[j] : "t" + std::to_string(j)) << " = " << img.to_string() << "\n";
  }
  os << "q1 = " << q1Value.to_string() << "\n";
  os << "q2 = " << GPoly::variable({"q"}, "q").scaled(qToQ2.inverse()).to_string() << "\n";
  return os.str();
}

std::map<std::string, std::vector<GaussRational>> forward_generator_images() {
  const auto& Y = space_model(Space::Y);
  std::size_t n = Y.algebra->dimension();
  std::vector<GaussRational> s1(n, GaussRational{0}), s2(n, GaussRational{0});
  s1[Y.index("T2")] = GaussRational{1};
  s2[Y.index("T2")] = GaussRational::i();
  s2[Y.index("T1")] = -GaussRational::i();
  return {{"S1", s1}, {"S2", s2}};
}

ChangeOfVariables derive_change_of_variables(const SpecializedRings& rings) {
  const auto& X = *space_model(Space::X).algebra;
  const auto& Y = *space_model(Space::Y).algebra;
  auto gens = forward_generator_images();
  int s1 = X.index_of("S1"), s2 = X.index_of("S2");
  std::size_t n = X.dimension();
  ChangeOfVariables cov;
  cov.classMap.assign(Y.dimension(), std::vector<GaussRational>(n, GaussRational{0}));
  std::vector<bool> found(n, false);
  for (int total = 0; Rational{total} <= X.top_degree(); ++total)
    for (int b = 0; b <= total; ++b) {
      Vec v = X.basis_vector(X.unit());
      auto img = element(q_free(rings.y.basis(Y.unit())));
      for (int k = 0; k < total; ++k) {
        bool second = k < b;
        v = X.multiply(v, X.basis_vector(second ? s2 : s1));
        // Dropping q2 after each product is the quotient map to q2 = 0.
        img = element(q_free(rings.y.multiply(img, element(gens.at(second ? "S2" : "S1")))));
      }
      int hit = -1, nonzero = 0;
      for (std::size_t k = 0; k < n; ++k)
        if (!v[k].is_zero()) ++nonzero, hit = static_cast<int>(k);
      if (nonzero != 1 || found[hit]) continue;
      found[hit] = true;
      GaussRational scale = gauss(v[hit]).inverse();
      auto w = q_free(img);
      for (std::size_t j = 0; j < w.size(); ++j) cov.classMap[j][hit] = w[j] * scale;
    }
  for (std::size_t k = 0; k < n; ++k)
    if (!found[k]) throw std::logic_error("derive_change_of_variables: " + X.basis_class(static_cast<int>(k)).name +
                                          " is not a multiple of a monomial in S1, S2");
  return cov;
}

ChangeOfVariables printed_change_of_variables() {
  const auto& X = space_model(Space::X);
  const auto& Y = space_model(Space::Y);
  ChangeOfVariables cov;
  cov.classMap.assign(6, std::vector<GaussRational>(6, GaussRational{0}));
  auto set = [&](const char* t, const char* s, GaussRational c) { cov.classMap[Y.index(t)][X.index(s)] = c; };
  auto I = GaussRational::i();
  set("T0", "S0", GaussRational{1});
  set("T1", "S2", -I);
  set("T2", "S1", GaussRational{1});
  set("T2", "S2", I);
  set("T3", "S3", GaussRational{-6});
  set("T3", "S4", GaussRational(Rational{0}, Rational(-3, 2)));
  set("T4", "S3", GaussRational{3});
  set("T4", "S4", I);
  set("T5", "S5", GaussRational{3});
  return cov;
}

bool is_invertible(const ChangeOfVariables& cov) { return cov.inverse_class_map().has_value(); }

bool preserves_grading(const ChangeOfVariables& cov) {
  const auto& X = *space_model(Space::X).algebra;
  const auto& Y = *space_model(Space::Y).algebra;
  for (std::size_t j = 0; j < cov.classMap.size(); ++j)
    for (std::size_t i = 0; i < cov.classMap[j].size(); ++i)
      if (!cov.classMap[j][i].is_zero() &&
          Y.basis_class(static_cast<int>(j)).degree != X.basis_class(static_cast<int>(i)).degree)
        return false;
  return true;
}

bool metric_compatible(const ChangeOfVariables& cov) {
  const auto& GX = space_model(Space::X).algebra->metric();
  const auto& GY = space_model(Space::Y).algebra->metric();
  const auto& M = cov.classMap;
  std::size_t n = GX.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      GaussRational acc{0};
      for (std::size_t j = 0; j < M.size(); ++j)
        for (std::size_t k = 0; k < M.size(); ++k)
          if (!GY[j][k].is_zero()) acc += M[j][a] * gauss(GY[j][k]) * M[k][b];
      if (acc != gauss(GX[a][b])) return false;
    }
  return true;
}

MultiPoly<GaussRational> relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel) {
  return poly_substitute(promote(rel), linear_assignment(cov.classMap, Space::X, Space::Y, cov.qToQ2));
}

MultiPoly<GaussRational> inverse_relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel) {
  return poly_substitute(promote(rel),
                         linear_assignment(require_inverse(cov), Space::Y, Space::X, cov.qToQ2.inverse()));
}

bool verify_relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel,
                           const SpecializedRings& rings) {
  return is_zero(evaluate(rings.y, relation_image(cov, rel)));
}

bool verify_inverse_relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel,
                                   const SpecializedRings& rings) {
  return is_zero(evaluate(rings.x, inverse_relation_image(cov, rel)));
}

IsomorphismReport isomorphism_report(const ChangeOfVariables& cov, const SpecializedRings& rings) {
  IsomorphismReport rep;
  auto inv = cov.inverse_class_map();
  if (!inv) {
    rep.mismatches.push_back("class map is singular");
    return rep;
  }
  auto fwd = linear_assignment(cov.classMap, Space::X, Space::Y, cov.qToQ2);
  auto back = linear_assignment(*inv, Space::Y, Space::X, cov.qToQ2.inverse());
  auto xvars = basis_names(Space::X);
  xvars.push_back(parameter_name(Space::X));
  auto yvars = basis_names(Space::Y);
  yvars.push_back(parameter_name(Space::Y));

  auto round_trip = [](const std::vector<std::string>& vars, const std::string& v,
                       const std::map<std::string, GPoly>& there, const std::map<std::string, GPoly>& again) {
    auto start = GPoly::variable(vars, v);
    return poly_substitute(poly_substitute(start, there), again) == start;
  };
  rep.classesRoundTrip = true;
  for (std::size_t k = 0; k + 1 < xvars.size(); ++k)
    if (!round_trip(xvars, xvars[k], fwd, back)) {
      rep.classesRoundTrip = false;
      rep.mismatches.push_back("round trip " + xvars[k]);
    }
  for (std::size_t k = 0; k + 1 < yvars.size(); ++k)
    if (!round_trip(yvars, yvars[k], back, fwd)) {
      rep.classesRoundTrip = false;
      rep.mismatches.push_back("round trip " + yvars[k]);
    }
  rep.parameterRoundTrip = round_trip(xvars, xvars.back(), fwd, back) && round_trip(yvars, yvars.back(), back, fwd);
  if (!rep.parameterRoundTrip) rep.mismatches.push_back("parameter round trip");

  rep.productsMatch = true;
  const auto& X = rings.x.base();
  int n = static_cast<int>(rings.x.dimension());
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      auto lhs = push(cov, rings.x.product(a, b));
      auto rhs = rings.y.multiply(push(cov, rings.x.basis(a)), push(cov, rings.x.basis(b)));
      if (lhs == rhs) continue;
      rep.productsMatch = false;
      rep.mismatches.push_back("product " + X.basis_class(a).name + "*" + X.basis_class(b).name);
    }

  rep.forwardRelations = true;
  for (const auto& rel : x_quantum_relations())
    if (!verify_relation_image(cov, rel, rings)) {
      rep.forwardRelations = false;
      rep.mismatches.push_back("image of " + rel.to_string());
    }
  rep.inverseRelations = true;
  for (const auto& rel : y_specialized_relations())
    if (!verify_inverse_relation_image(cov, rel, rings)) {
      rep.inverseRelations = false;
      rep.mismatches.push_back("inverse image of " + rel.to_string());
    }
  return rep;
}

bool verify_isomorphism() { return isomorphism_report(derive_change_of_variables()).ok(); }

// ---- Hodge values and the tan series ----

PowerSeries tan_half_series(int order) {
  Rational half(1, 2);
  return series_div(PowerSeries::sin_series("s", order, half), PowerSeries::cos_series("s", order, half));
}

HodgeSeries hodge_from_tan(int gmax) {
  if (gmax < 1) throw std::invalid_argument("hodge_from_tan: gmax must be at least 1");
  auto t = tan_half_series(2 * gmax - 1);
  HodgeSeries h;
  for (int g = 1; g <= gmax; ++g) {
    const auto& c = t[2 * g - 1];
    if (!c.is_real()) throw std::logic_error("hodge_from_tan: non-real tan coefficient");
    h.values.push_back(factorial(2 * g - 1) * Rational(1, 2) * c.re());
  }
  return h;
}

Rational fixed_curve_normal_c1() {
  auto d = flag_involution_sector_data();
  // c1(TF) = 2p1 + 2p2; the conic is a P^1.
  return normal_bundle_c1({2, 2}, {d.restriction.at("p1"), d.restriction.at("p2")}, Rational{2});
}

// ---- potentials ----

std::vector<std::string> Potential::variables() const {
  auto v = insertionVariables;
  v.push_back(parameter);
  return v;
}

RationalFunction Potential::direction_coefficient(int k) const {
  if (k < 3) throw std::invalid_argument("direction_coefficient: unstable degree " + std::to_string(k));
  if (k == 3) return cubic.coefficient(pure_power(insertionVariables.size() + 1, directionIndex, 3));
  if (k > order) throw OutOfTableRange("potential assembled only through degree " + std::to_string(order));
  if (family) {
    auto g = family->generating(std::vector<int>(k, directionIndex));
    if (!g) throw OutOfTableRange("family '" + family->name + "' has no closed form at degree " + std::to_string(k));
    return *g * RationalFunction(Rational{1} / factorial(k));
  }
  if (hodge) {
    if (k % 2) return RationalFunction{};
    int g = (k - 2) / 2;
    if (g > hodge->gmax()) throw OutOfTableRange("Hodge series ends at g = " + std::to_string(hodge->gmax()));
    return RationalFunction(-normalC1 * hodge->L(g) / factorial(k));
  }
  return RationalFunction{};
}

RationalFunction Potential::coefficient(const std::string& monomial) const {
  auto vars = variables();
  Exponent e(vars.size(), 0);
  std::string text;
  for (char c : monomial)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text != "1" && !text.empty()) {
    std::istringstream in(text);
    std::string factor;
    while (std::getline(in, factor, '*')) {
      auto caret = factor.find('^');
      std::string name = factor.substr(0, caret);
      int power = caret == std::string::npos ? 1 : std::stoi(factor.substr(caret + 1));
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) throw UnboundSymbol("potential has no variable '" + name + "'");
      e[it - vars.begin()] += power;
    }
  }
  int degree = 0;
  for (std::size_t k = 0; k + 1 < e.size(); ++k) degree += e[k];
  if (degree <= 3) return cubic.coefficient(e);
  if (e.back() == 0 && e[directionIndex] == degree) return direction_coefficient(degree);
  throw OutOfTableRange("monomial " + monomial + " lies beyond cubic order off the kept direction");
}

std::string Potential::to_string() const {
  std::string s = cubic.to_string();
  const auto& x = insertionVariables.at(directionIndex);
  if (family)
    s += " + [degree > 3: 6*sum_{d>=1} d^-3*e^(d*" + x + ")*q1^d]";
  else if (hodge)
    s += " + [degree > 3: -" + normalC1.to_string() + "*sum_{g>=1} L_g*" + x + "^(2g+2)/(2g+2)!]";
  return s;
}

Potential assemble_potential(Space space, const InvariantTable& table, const HodgeSeries& hodge, int order,
                             const std::vector<Q1Series>& config) {
  if (order < 3) throw ConfigError("potential order must be at least 3");
  if (table.space() != space) throw std::invalid_argument("assemble_potential: table is for the other space");
  const auto& model = space_model(space);
  const auto& A = *model.algebra;
  int n = static_cast<int>(A.dimension());
  int top = top_row(space);

  Potential p;
  p.space = space;
  p.order = order;
  p.insertionVariables = insertion_names(space);
  p.parameter = parameter_name(space);
  p.cubic = MultiPoly<RationalFunction>(p.variables());

  std::map<int, Q1Series> rows;
  if (space == Space::Y) {
    for (const auto& s : config) rows[s.row] = s;
    for (int r = 0; r <= top; ++r)
      if (!rows.count(r)) throw ConfigError("q1 configuration has no entry for q2-row " + std::to_string(r));
  }

  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      for (int c = b; c < n; ++c) {
        Exponent e(n + 1, 0);
        ++e[a], ++e[b], ++e[c];
        Rational sym{1};
        for (int k = 0; k < n; ++k) sym *= factorial(e[k]);
        RationalFunction weight(Rational{1} / sym);
        p.cubic.add_term(e, RationalFunction(A.triple(a, b, c)) * weight);
        for (int r = space == Space::Y ? 0 : 1; r <= top; ++r) {
          RationalFunction coeff = space == Space::Y
                                       ? q1_row_sum(table, {a, b, c}, rows[r])
                                       : RationalFunction(table.value(InvariantKey({a, b, c}, CurveClass::x(r))));
          if (coeff.is_zero()) continue;
          Exponent er = e;
          er[n] = r;
          p.cubic.add_term(er, coeff * weight);
        }
      }

  if (space == Space::Y) {
    p.directionIndex = model.index("T1");
    for (const auto& f : table.families())
      if (f.covers(CurveClass::y(1, 0))) p.family = f;
    if (!p.family && order > 3) throw ConfigError("no closed-form family for the t1-direction");
  } else {
    p.directionIndex = model.index("S2");
    p.hodge = hodge;
    p.normalC1 = fixed_curve_normal_c1();
    if (order > 3 && 2 * hodge.gmax() + 2 < order - order % 2)
      throw OutOfTableRange("Hodge series too short for order " + std::to_string(order));
  }
  return p;
}

PotentialComparison compare_potentials(const ChangeOfVariables& cov, const Potential& source,
                                       const Potential& target) {
  PotentialComparison out;
  auto tv = target.variables();
  out.image = substituted_cubic(cov, source, target);
  auto tgt = evaluate_q1(target.cubic, cov.q1Value).with_variables(tv);
  out.residual = out.image - tgt;
  if (!out.residual.is_zero()) {
    const auto& e = out.residual.terms().begin()->first;
    out.firstMismatch = out.residual.monomial_string(e) + ": substituted " + out.image.coefficient(e).to_string() +
                        " vs " + tgt.coefficient(e).to_string();
  }
  int order = std::min(source.order, target.order);
  for (int k = 4; k <= order; ++k) {
    GaussRational lhs = source_direction_image(cov, source, target.directionIndex, k);
    GaussRational rhs = at_q1(target.direction_coefficient(k), cov.q1Value);
    if (lhs == rhs) continue;
    out.directionResiduals.emplace_back(k, lhs - rhs);
    if (!out.firstMismatch)
      out.firstMismatch = target.insertionVariables[target.directionIndex] + "^" + std::to_string(k) +
                          ": substituted " + lhs.to_string() + " vs " + rhs.to_string();
  }
  return out;
}

PotentialComparison compare_potentials(const ChangeOfVariables& cov, int order) {
  auto t = seed_tables();
  auto hodge = hodge_from_tan(std::max(1, (order - 2) / 2));
  return compare_potentials(cov, assemble_potential(Space::Y, t.y, hodge, order),
                            assemble_potential(Space::X, t.x, hodge, order));
}

// ---- the third-partial identity ----

bool TanIdentityReport::ok() const {
  return reference.is_real() && orbifold == reference && resolution == reference &&
         resolutionFromPotential == reference;
}

TanIdentityReport tan_identity_report(int order) {
  if (order < 3) throw std::invalid_argument("tan_identity: order must be at least 3");
  int kmax = order + 3;
  auto hodge = hodge_from_tan(std::max(1, (kmax - 2) / 2));
  auto t = seed_tables();
  auto cov = derive_change_of_variables();
  auto fy = assemble_potential(Space::Y, t.y, hodge, kmax);
  auto fx = assemble_potential(Space::X, t.x, hodge, kmax);
  auto image = substituted_cubic(cov, fy, fx);

  TanIdentityReport rep;
  rep.order = order;
  rep.reference = tan_half_series(order).scaled(GaussRational{-3});
  rep.orbifold = PowerSeries("s", order);
  rep.resolutionFromPotential = PowerSeries("s", order);
  for (int m = 0; m <= order; ++m) {
    int k = m + 3;
    GaussRational falling = gauss(factorial(k) / factorial(m));
    rep.orbifold[m] = at_q1(fx.direction_coefficient(k), cov.q1Value) * falling;
    GaussRational res = k == 3 ? image.coefficient(pure_power(fx.variables().size(), fx.directionIndex, 3))
                               : source_direction_image(cov, fy, fx.directionIndex, k);
    rep.resolutionFromPotential[m] = res * falling;
  }
  auto E = series_compose_exp(-GaussRational::i(), order, "s");
  auto ratio = series_div(E, E + PowerSeries::constant("s", order, GaussRational{1}));
  rep.resolution = PowerSeries::constant("s", order, GaussRational(Rational{0}, Rational{3})) +
                   ratio.scaled(GaussRational(Rational{0}, Rational{-6}));
  return rep;
}

bool tan_identity(int order) { return tan_identity_report(order).ok(); }

std::vector<HodgeCheck> hodge_cross_check(const HodgeSeries& hodge) {
  int order = 2 * hodge.gmax() + 2;
  auto t = seed_tables();
  auto fy = assemble_potential(Space::Y, t.y, hodge, order);
  auto cov = derive_change_of_variables();
  int s2 = space_model(Space::X).index("S2");
  Rational c1 = fixed_curve_normal_c1();
  std::vector<HodgeCheck> out;
  for (int g = 1; g <= hodge.gmax(); ++g) {
    int k = 2 * g + 2;
    GaussRational v = source_direction_image(cov, fy, s2, k) * gauss(factorial(k));
    if (!v.is_real()) throw std::logic_error("hodge_cross_check: non-real invariant");
    out.push_back({g, v.re(), -c1 * hodge.L(g)});
  }
  return out;
}

// ---- fault injection ----

std::vector<std::pair<Space, InvariantKey>> fault_sites(const SeedTables& tables) {
  std::vector<std::pair<Space, InvariantKey>> out;
  for (const auto* t : {&tables.x, &tables.y})
    for (const auto& [k, v] : t->entries())
      if (k.points() == 3) out.emplace_back(t->space(), k);
  return out;
}

FaultReport inject_fault(const SeedTables& tables, Space space, const InvariantKey& key, int threads) {
  SeedTables t = tables;
  auto& table = space == Space::X ? t.x : t.y;
  auto v = table.stored(key);
  if (!v) throw std::invalid_argument("inject_fault: no stored value at " + to_string(table.model(), key));
  table.set(key, *v + Rational{1});

  FaultReport rep;
  rep.space = space;
  rep.key = key;
  auto w = space == Space::Y ? check_all_parallel(table, CurveClass::y(6, 3), false, threads)
                             : check_all_parallel(table, CurveClass::x(4), true, threads);
  rep.wdvvFailures = w.failures.size();
  if (!w.failures.empty()) rep.firstWdvvFailure = w.failures.front();
  try {
    auto hodge = hodge_from_tan(1);
    auto cmp = compare_potentials(derive_change_of_variables(), assemble_potential(Space::Y, t.y, hodge),
                                  assemble_potential(Space::X, t.x, hodge));
    rep.potentialResidualTerms = cmp.residual_terms();
    rep.potentialMismatch = cmp.firstMismatch;
  } catch (const std::exception& e) {
    rep.potentialResidualTerms = 1;
    rep.potentialMismatch = std::string("assembly failed: ") + e.what();
  }
  return rep;
}

}  // namespace crc
