#include "crc/gw_tables.hpp"

#include <algorithm>
#include <sstream>

#include "crc/errors.hpp"
#include "crc/rings.hpp"
#include "json.hpp"

namespace crc {

std::string to_string(Space s) { return s == Space::X ? "X" : "Y"; }

Space parse_space(const std::string& text) {
  if (text == "X") return Space::X;
  if (text == "Y") return Space::Y;
  throw ConfigError("unknown space '" + text + "' (expected X or Y)");
}

CurveClass CurveClass::zero(Space s) { return s == Space::X ? x(0) : y(0, 0); }

bool CurveClass::effective() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

bool CurveClass::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](int c) { return c == 0; });
}

bool CurveClass::leq(const CurveClass& o) const {
  if (space != o.space || coords.size() != o.coords.size()) return false;
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] > o.coords[k]) return false;
  return true;
}

CurveClass CurveClass::operator+(const CurveClass& o) const {
  CurveClass r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] += o.coords.at(k);
  return r;
}

CurveClass CurveClass::operator-(const CurveClass& o) const {
  CurveClass r = *this;
  for (std::size_t k = 0; k < coords.size(); ++k) r.coords[k] -= o.coords.at(k);
  return r;
}

std::string CurveClass::to_string() const {
  if (coords.size() == 1) return std::to_string(coords[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < coords.size(); ++k) s += (k ? "," : "") + std::to_string(coords[k]);
  return s + ")";
}

std::vector<CurveClass> classes_below(const CurveClass& bound) {
  std::vector<CurveClass> out;
  if (bound.coords.size() == 1) {
    for (int d = 0; d <= bound.coords[0]; ++d) out.push_back({bound.space, {d}});
  } else {
    for (int n = 0; n <= bound.coords[0]; ++n)
      for (int i = 0; i <= bound.coords[1]; ++i) out.push_back({bound.space, {n, i}});
  }
  return out;
}

InvariantKey::InvariantKey(std::vector<int> ins, CurveClass b) : insertions(std::move(ins)), beta(std::move(b)) {
  std::sort(insertions.begin(), insertions.end());
}

Rational SpaceModel::c1_pairing(const CurveClass& beta) const {
  Rational acc{0};
  for (std::size_t k = 0; k < c1.size(); ++k) acc += c1[k] * Rational(beta.coords.at(k));
  return acc;
}

std::optional<Rational> SpaceModel::divisor_pairing(int index, const CurveClass& beta) const {
  auto it = divisors.find(index);
  if (it == divisors.end()) return std::nullopt;
  Rational acc{0};
  for (std::size_t k = 0; k < it->second.size(); ++k) acc += it->second[k] * Rational(beta.coords.at(k));
  return acc;
}

namespace {

SpaceModel make_x_model() {
  SpaceModel m;
  m.space = Space::X;
  m.algebra = std::make_shared<const GradedAlgebra>(build_orbifold_ring(flag_involution_sector_data()));
  // <c1(TX), W1+W2> with the 1/2 stacky factor.
  m.c1 = {curve_c1_pairing({Rational{2}, Rational{2}}, {Rational{1}, Rational{1}}, Rational(1, 2))};
  // S1 = p1 + p2 on the class d(W1+W2), normalised as <S1,S4,S4>^1 = <S4,S4>^1.
  m.divisors = {{1, {Rational{1}}}};
  m.default_bound = CurveClass::x(4);
  return m;
}

SpaceModel make_y_model() {
  SpaceModel m;
  m.space = Space::Y;
  m.algebra = std::make_shared<const GradedAlgebra>(build_y_ring().algebra);
  m.c1 = {Rational{0}, Rational{2}};
  m.divisors = {{1, {Rational{1}, Rational{0}}}, {2, {Rational{0}, Rational{1}}}};
  m.default_bound = CurveClass::y(6, 3);
  return m;
}

}  // namespace

const SpaceModel& space_model(Space s) {
  static const SpaceModel x = make_x_model();
  static const SpaceModel y = make_y_model();
  return s == Space::X ? x : y;
}

std::string to_string(const SpaceModel& m, const InvariantKey& k) {
  std::string s = "<";
  for (std::size_t i = 0; i < k.insertions.size(); ++i) s += (i ? "," : "") + m.name(k.insertions[i]);
  return s + ">^" + k.beta.to_string();
}

bool dimension_filter(Space space, const InvariantKey& key) {
  const auto& m = space_model(space);
  Rational total{0};
  for (int i : key.insertions) total += m.algebra->basis_class(i).degree;
  Rational vdim = m.algebra->top_degree() - Rational{3} + m.c1_pairing(key.beta) + Rational(static_cast<long>(key.points()));
  return total == vdim;
}

bool parity_filter(Space space, const InvariantKey& key) {
  if (space != Space::X) return true;
  const auto& a = *space_model(space).algebra;
  auto twisted = std::count_if(key.insertions.begin(), key.insertions.end(),
                               [&](int i) { return a.basis_class(i).sector == Sector::Twisted; });
  return twisted % 2 == 0;
}

bool passes_filters(Space space, const InvariantKey& key) {
  return dimension_filter(space, key) && parity_filter(space, key);
}

ClosedFormFamily y_multiple_cover_family(const Rational& constant) {
  ClosedFormFamily f;
  f.name = "multiple-covers";
  f.covers = [](const CurveClass& b) { return b.space == Space::Y && b.coords[1] == 0 && b.coords[0] > 0; };
  f.value = [constant](const InvariantKey& key) {
    bool all_t1 = std::all_of(key.insertions.begin(), key.insertions.end(), [](int i) { return i == 1; });
    if (!all_t1) return Rational{0};
    int k = static_cast<int>(key.points());
    return constant * Rational(key.beta.coords[0]).pow(k - 3);
  };
  f.generating = [constant](const std::vector<int>& ins) -> std::optional<RationalFunction> {
    bool all_t1 = std::all_of(ins.begin(), ins.end(), [](int i) { return i == 1; });
    if (!all_t1) return RationalFunction{};
    int k = static_cast<int>(ins.size());
    if (k < 3) return std::nullopt;
    return RationalFunction(constant) * RationalFunction::power_sum(k - 3);
  };
  return f;
}

InvariantTable::InvariantTable(Space space) : space_(space) {}

void InvariantTable::set(const InvariantKey& key, const Rational& value) {
  if (key.beta.space != space_) throw std::invalid_argument("InvariantTable: key for the wrong space");
  if (!key.beta.effective()) throw std::invalid_argument("InvariantTable: non-effective class " + key.beta.to_string());
  if (!value.is_zero() && !passes_filters(space_, key))
    throw std::invalid_argument("InvariantTable: nonzero value on a key failing the filters: " + to_string(model(), key));
  entries_[key] = value;
  undetermined_.erase(key);
  if (!key.beta.is_zero()) {
    auto [f, base] = divisor_normal_form(key);
    if (!f.is_zero()) normalized_[base][key] = value / f;
  }
}

void InvariantTable::erase(const InvariantKey& key) {
  entries_.erase(key);
  if (key.beta.is_zero()) return;
  auto [f, base] = divisor_normal_form(key);
  auto it = normalized_.find(base);
  if (it == normalized_.end()) return;
  it->second.erase(key);
  if (it->second.empty()) normalized_.erase(it);
}

std::optional<Rational> InvariantTable::from_divisor_class(const InvariantKey& key) const {
  auto [f, base] = divisor_normal_form(key);
  if (f.is_zero()) return Rational{0};
  if (!(base == key)) {
    if (auto v = try_value(base)) return f * *v;
    return std::nullopt;
  }
  auto it = normalized_.find(base);
  if (it == normalized_.end()) return std::nullopt;
  return it->second.begin()->second;
}

void InvariantTable::set(const std::vector<std::string>& names, const CurveClass& beta, const Rational& value) {
  std::vector<int> ins;
  for (const auto& n : names) ins.push_back(model().index(n));
  set(InvariantKey(ins, beta), value);
}

std::optional<Rational> InvariantTable::stored(const InvariantKey& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

ClosedFormFamily* InvariantTable::family_named(const std::string& name) {
  for (auto& f : families_)
    if (f.name == name) return &f;
  return nullptr;
}

void InvariantTable::set_closure(const CurveClass& bound, std::set<int> points) {
  bound_ = bound;
  closure_points_ = std::move(points);
}

std::optional<Rational> InvariantTable::known_zero_or_throw(const InvariantKey& key, bool throwing) const {
  if (undetermined_.count(key)) {
    if (throwing) throw Underdetermined("invariant not determined by the seeds: " + to_string(model(), key));
    return std::nullopt;
  }
  if (!key.beta.is_zero())
    if (auto v = from_divisor_class(key)) return v;
  int k = static_cast<int>(key.points());
  if ((bound_ && key.beta.leq(*bound_) && closure_points_.count(k)) || complete_.count({key.beta, k}))
    return Rational{0};
  if (throwing) throw OutOfTableRange("invariant outside the computed range: " + to_string(model(), key));
  return std::nullopt;
}

std::optional<Rational> InvariantTable::try_value(const InvariantKey& key) const {
  try {
    return value(key);
  } catch (const OutOfTableRange&) {
    return std::nullopt;
  } catch (const Underdetermined&) {
    return std::nullopt;
  }
}

Rational InvariantTable::value(const InvariantKey& key) const {
  if (key.beta.space != space_) throw std::invalid_argument("InvariantTable: key for the wrong space");
  if (!key.beta.effective()) return Rational{0};
  if (auto v = stored(key)) return *v;
  const auto& m = model();
  int k = static_cast<int>(key.points());
  if (key.beta.is_zero()) {
    if (k == 3) return m.algebra->triple(key.insertions[0], key.insertions[1], key.insertions[2]);
    if (k < 3) return Rational{0};
    bool twisted = std::any_of(key.insertions.begin(), key.insertions.end(),
                               [&](int i) { return m.algebra->basis_class(i).sector == Sector::Twisted; });
    if (!twisted) return Rational{0};
    if (!passes_filters(space_, key)) return Rational{0};
    return *known_zero_or_throw(key, true);
  }
  for (const auto& f : families_)
    if (f.covers(key.beta)) return f.value(key);
  if (!passes_filters(space_, key)) return Rational{0};
  if (std::find(key.insertions.begin(), key.insertions.end(), m.algebra->unit()) != key.insertions.end())
    return Rational{0};
  return *known_zero_or_throw(key, true);
}

Rational InvariantTable::value(const std::vector<std::string>& names, const CurveClass& beta) const {
  std::vector<int> ins;
  for (const auto& n : names) ins.push_back(model().index(n));
  return value(InvariantKey(ins, beta));
}

std::pair<Rational, InvariantKey> divisor_normal_form(const InvariantKey& key) {
  if (key.beta.is_zero()) return {Rational{1}, key};
  const auto& m = space_model(key.beta.space);
  Rational f{1};
  std::vector<int> rest;
  for (int idx : key.insertions) {
    if (auto p = m.divisor_pairing(idx, key.beta)) f *= *p;
    else rest.push_back(idx);
  }
  return {f, InvariantKey(rest, key.beta)};
}

std::optional<std::pair<Rational, InvariantKey>> divisor_reduce(const InvariantKey& key, int divisor) {
  if (key.beta.is_zero()) return std::nullopt;
  const auto& m = space_model(key.beta.space);
  for (std::size_t pos = 0; pos < key.insertions.size(); ++pos) {
    int idx = key.insertions[pos];
    if (divisor >= 0 && idx != divisor) continue;
    auto factor = m.divisor_pairing(idx, key.beta);
    if (!factor) continue;
    std::vector<int> rest = key.insertions;
    rest.erase(rest.begin() + static_cast<long>(pos));
    return std::make_pair(*factor, InvariantKey(rest, key.beta));
  }
  return std::nullopt;
}

namespace {

void multisets(int lo, int hi, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (k == 0) {
    out.push_back(cur);
    return;
  }
  for (int i = lo; i <= hi; ++i) {
    cur.push_back(i);
    multisets(i, hi, k - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<InvariantKey> keys_at(Space space, const CurveClass& beta, int points, bool allowUnit) {
  const auto& m = space_model(space);
  int n = static_cast<int>(m.algebra->dimension());
  std::vector<std::vector<int>> sets;
  std::vector<int> cur;
  multisets(0, n - 1, points, cur, sets);
  std::vector<InvariantKey> out;
  for (auto& s : sets) {
    if (!allowUnit && std::find(s.begin(), s.end(), m.algebra->unit()) != s.end()) continue;
    InvariantKey key(s, beta);
    if (passes_filters(space, key)) out.push_back(std::move(key));
  }
  return out;
}

std::vector<InvariantKey> enumerate_candidates(Space space, int maxDegree, int points) {
  std::vector<InvariantKey> out;
  CurveClass bound = space == Space::X ? CurveClass::x(maxDegree) : CurveClass::y(maxDegree, maxDegree);
  for (const auto& beta : classes_below(bound)) {
    if (beta.is_zero()) continue;
    for (auto& key : keys_at(space, beta, points)) out.push_back(std::move(key));
  }
  return out;
}

SeedTables seed_tables() {
  InvariantTable x(Space::X);
  struct XRow {
    std::vector<std::string> ins;
    int d;
    long v;
  };
  for (const auto& r : std::vector<XRow>{{{"S1", "S3", "S3"}, 1, 9},
                                         {{"S1", "S1", "S5"}, 1, 6},
                                         {{"S3", "S3", "S5"}, 2, 54},
                                         {{"S1", "S5", "S5"}, 2, 36},
                                         {{"S5", "S5", "S5"}, 3, 0},
                                         {{"S1", "S4", "S4"}, 1, 1},
                                         {{"S2", "S3", "S4"}, 1, 3},
                                         {{"S2", "S2", "S5"}, 1, 6},
                                         {{"S4", "S4", "S5"}, 2, 3}})
    x.set(r.ins, CurveClass::x(r.d), Rational{r.v});
  x.set_closure(CurveClass::x(4), {3});

  InvariantTable y = y_two_point_seeds();
  struct YRow {
    std::vector<std::string> ins;
    int n, i;
    long v;
  };
  const std::vector<YRow> rows{
      {{"T2", "T2", "T5"}, 0, 1, 1},   {{"T2", "T4", "T4"}, 0, 1, 1},   {{"T1", "T1", "T5"}, 1, 1, 4},
      {{"T1", "T2", "T5"}, 1, 1, 4},   {{"T1", "T3", "T3"}, 1, 1, 1},   {{"T1", "T3", "T4"}, 1, 1, 5},
      {{"T1", "T4", "T4"}, 1, 1, 19},  {{"T2", "T2", "T5"}, 1, 1, 4},   {{"T2", "T3", "T3"}, 1, 1, 1},
      {{"T2", "T3", "T4"}, 1, 1, 5},   {{"T2", "T4", "T4"}, 1, 1, 19},  {{"T1", "T1", "T5"}, 2, 1, 4},
      {{"T1", "T2", "T5"}, 2, 1, 2},   {{"T1", "T3", "T3"}, 2, 1, 8},   {{"T1", "T3", "T4"}, 2, 1, 20},
      {{"T1", "T4", "T4"}, 2, 1, 50},  {{"T2", "T2", "T5"}, 2, 1, 1},   {{"T2", "T3", "T3"}, 2, 1, 4},
      {{"T2", "T3", "T4"}, 2, 1, 10},  {{"T2", "T4", "T4"}, 2, 1, 25},  {{"T1", "T5", "T5"}, 1, 2, 1},
      {{"T1", "T5", "T5"}, 2, 2, 8},   {{"T1", "T5", "T5"}, 3, 2, 3},   {{"T2", "T5", "T5"}, 1, 2, 2},
      {{"T2", "T5", "T5"}, 2, 2, 8},   {{"T2", "T5", "T5"}, 3, 2, 2},   {{"T3", "T3", "T5"}, 2, 2, 6},
      {{"T3", "T3", "T5"}, 3, 2, 8},   {{"T3", "T4", "T5"}, 1, 2, 1},   {{"T3", "T4", "T5"}, 2, 2, 20},
      {{"T3", "T4", "T5"}, 3, 2, 21},  {{"T4", "T4", "T5"}, 1, 2, 7},   {{"T4", "T4", "T5"}, 2, 2, 64},
      {{"T4", "T4", "T5"}, 3, 2, 55},  {{"T5", "T5", "T5"}, 2, 3, 6},   {{"T5", "T5", "T5"}, 3, 3, 12},
      {{"T5", "T5", "T5"}, 4, 3, 6},
  };
  for (const auto& r : rows) y.set(r.ins, CurveClass::y(r.n, r.i), Rational{r.v});
  y.set_closure(CurveClass::y(6, 3), {3});
  return {std::move(x), std::move(y)};
}

InvariantTable x_moduli_seeds() {
  InvariantTable x(Space::X);
  x.set({"S1", "S3", "S3"}, CurveClass::x(1), Rational{9});
  x.set({"S1", "S1", "S5"}, CurveClass::x(1), Rational{6});
  x.set({"S1", "S4", "S4"}, CurveClass::x(1), Rational{1});
  return x;
}

InvariantTable y_two_point_seeds() {
  InvariantTable y(Space::Y);
  // <T2, T1^2 T2>^{0,1} = 1 and <T1T2, T1T2>^{0,1} = 1.
  y.set({"T2", "T5"}, CurveClass::y(0, 1), Rational{1});
  y.set({"T4", "T4"}, CurveClass::y(0, 1), Rational{1});
  y.mark_complete(CurveClass::y(0, 1), 2);
  y.add_family(y_multiple_cover_family());
  return y;
}

std::string table_to_json(const InvariantTable& t) {
  using nlohmann::ordered_json;
  const auto& m = t.model();
  ordered_json j;
  j["space"] = to_string(t.space());
  ordered_json list = ordered_json::array();
  for (const auto& [key, value] : t.entries()) {
    ordered_json e;
    ordered_json names = ordered_json::array();
    for (int i : key.insertions) names.push_back(m.name(i));
    e["insertions"] = names;
    e["beta"] = key.beta.coords;
    e["value"] = value.to_string();
    list.push_back(e);
  }
  j["invariants"] = list;
  if (t.bound()) {
    j["closure"] = {{"bound", t.bound()->coords},
                    {"points", std::vector<int>(t.closure_points().begin(), t.closure_points().end())}};
  }
  return j.dump(2);
}

InvariantTable table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("invariant table: malformed JSON: ") + e.what());
  }
  if (!j.contains("space") || !j.contains("invariants")) throw ConfigError("invariant table: missing space or invariants");
  Space space = parse_space(j["space"].get<std::string>());
  InvariantTable t = space == Space::Y ? y_two_point_seeds() : InvariantTable(Space::X);
  std::size_t rank = space == Space::X ? 1 : 2;
  for (const auto& e : j["invariants"]) {
    auto names = e.at("insertions").get<std::vector<std::string>>();
    auto beta = e.at("beta").get<std::vector<int>>();
    if (beta.size() != rank) throw ConfigError("invariant table: beta has the wrong length");
    t.set(names, CurveClass{space, beta}, Rational::parse(e.at("value").get<std::string>()));
  }
  if (j.contains("closure")) {
    auto bound = j["closure"].at("bound").get<std::vector<int>>();
    auto points = j["closure"].at("points").get<std::vector<int>>();
    if (bound.size() != rank) throw ConfigError("invariant table: closure bound has the wrong length");
    t.set_closure(CurveClass{space, bound}, std::set<int>(points.begin(), points.end()));
  }
  return t;
}

}  // namespace crc
