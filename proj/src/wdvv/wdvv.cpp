#include "crc/wdvv.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>
#include <tuple>

#include "crc/errors.hpp"

namespace crc {

std::string WdvvInstance::to_string() const {
  const auto& m = space_model(space);
  std::ostringstream os;
  os << "beta=" << beta.to_string() << " (";
  for (int k = 0; k < 4; ++k) os << (k ? "," : "") << m.name(phi[k]);
  os << ")";
  if (!gammas.empty()) {
    os << " gammas=(";
    for (std::size_t k = 0; k < gammas.size(); ++k) os << (k ? "," : "") << m.name(gammas[k]);
    os << ")";
  }
  return os.str();
}

LinearForm LinearForm::variable(int index, const Rational& coeff) {
  LinearForm f;
  if (!coeff.is_zero()) f.coeffs_[index] = coeff;
  return f;
}

Rational LinearForm::coefficient(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? Rational{0} : it->second;
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [v, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(v, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }
  return *this;
}

LinearForm& LinearForm::operator*=(const Rational& s) {
  if (s.is_zero()) return *this = LinearForm{};
  constant_ *= s;
  for (auto& [v, c] : coeffs_) c *= s;
  return *this;
}

LinearForm operator*(const LinearForm& a, const LinearForm& b) {
  if (!a.is_constant() && !b.is_constant())
    throw std::logic_error("LinearForm: product of two non-constant forms");
  return a.is_constant() ? b * a.constant() : a * b.constant();
}

namespace {

struct Geometry {
  const SpaceModel& model;
  std::vector<Rational> deg;
  std::vector<std::tuple<int, int, Rational>> inverse;  // nonzero g^{ef}
  Rational shift;                                       // dim - 3

  explicit Geometry(Space s) : model(space_model(s)) {
    const auto& A = *model.algebra;
    int n = static_cast<int>(A.dimension());
    for (int i = 0; i < n; ++i) deg.push_back(A.basis_class(i).degree);
    for (int e = 0; e < n; ++e)
      for (int f = 0; f < n; ++f)
        if (!A.inverse_metric()[e][f].is_zero()) inverse.emplace_back(e, f, A.inverse_metric()[e][f]);
    shift = A.top_degree() - Rational{3};
  }
  // Degree the free insertion must have so that `fixed` plus it pass the dimension filter.
  Rational needed(const CurveClass& beta, int points, const Rational& fixedDegree) const {
    return shift + model.c1_pairing(beta) + Rational{points} - fixedDegree;
  }
};

const Geometry& geometry(Space s) {
  static const Geometry x(Space::X), y(Space::Y);
  return s == Space::X ? x : y;
}

void validate(const InvariantTable& table, const WdvvInstance& inst) {
  if (table.space() != inst.space || inst.beta.space != inst.space)
    throw std::invalid_argument("wdvv: instance and table live on different spaces");
  if (!inst.beta.effective()) throw std::invalid_argument("wdvv: non-effective class " + inst.beta.to_string());
  if (inst.space == Space::X && !inst.gammas.empty())
    throw UnsupportedInstance("wdvv: boundary terms with extra insertions are not defined on the orbifold");
}

template <class V, class Look>
V residual_impl(const WdvvInstance& inst, Look&& look) {
  const Geometry& g = geometry(inst.space);
  const auto [i, j, k, l] = inst.phi;
  const int ng = static_cast<int>(inst.gammas.size());
  V total{};
  for (const auto& beta1 : classes_below(inst.beta)) {
    CurveClass beta2 = inst.beta - beta1;
    for (int mask = 0; mask < (1 << ng); ++mask) {
      std::vector<int> s1, s2;
      Rational d1, d2;
      for (int t = 0; t < ng; ++t) {
        int c = inst.gammas[t];
        if (mask & (1 << t)) {
          s1.push_back(c);
          d1 += g.deg[c];
        } else {
          s2.push_back(c);
          d2 += g.deg[c];
        }
      }
      int p1 = 3 + static_cast<int>(s1.size()), p2 = 3 + static_cast<int>(s2.size());
      auto term = [&](int p, int q, int r, int s) {
        V sum{};
        Rational need1 = g.needed(beta1, p1, g.deg[p] + g.deg[q] + d1);
        Rational need2 = g.needed(beta2, p2, g.deg[r] + g.deg[s] + d2);
        for (const auto& [e, f, ginv] : g.inverse) {
          if (g.deg[e] != need1 || g.deg[f] != need2) continue;
          std::vector<int> left{p, q, e};
          left.insert(left.end(), s1.begin(), s1.end());
          V x = look(std::move(left), beta1);
          if (x.is_zero()) continue;
          std::vector<int> right{f, r, s};
          right.insert(right.end(), s2.begin(), s2.end());
          V y = look(std::move(right), beta2);
          if (y.is_zero()) continue;
          sum = sum + (x * ginv) * y;
        }
        return sum;
      };
      total = total + term(i, j, k, l);
      total = total - term(i, l, j, k);
    }
  }
  return total;
}

bool has_unit(const SpaceModel& m, const InvariantKey& key) {
  int u = m.algebra->unit();
  return std::find(key.insertions.begin(), key.insertions.end(), u) != key.insertions.end();
}

}  // namespace

Rational wdvv_residual(const InvariantTable& table, const WdvvInstance& inst) {
  validate(table, inst);
  return residual_impl<Rational>(
      inst, [&](std::vector<int> ins, const CurveClass& beta) { return table.value(InvariantKey(std::move(ins), beta)); });
}

LinearForm wdvv_linear_residual(const InvariantTable& table, const WdvvInstance& inst,
                                const std::vector<InvariantKey>& unknowns) {
  validate(table, inst);
  std::map<InvariantKey, int> index;
  for (std::size_t v = 0; v < unknowns.size(); ++v) index.emplace(unknowns[v], static_cast<int>(v));
  const auto& m = table.model();
  return residual_impl<LinearForm>(inst, [&](std::vector<int> ins, const CurveClass& beta) -> LinearForm {
    InvariantKey key(std::move(ins), beta);
    if (beta == inst.beta && !beta.is_zero()) {
      if (!passes_filters(inst.space, key) || has_unit(m, key)) return LinearForm{};
      auto [f, base] = divisor_normal_form(key);
      if (f.is_zero()) return LinearForm{};
      auto it = index.find(base);
      if (it != index.end()) return LinearForm::variable(it->second, f);
    }
    return LinearForm(table.value(key));
  });
}

std::vector<std::array<int, 4>> wdvv_tuples(Space space, bool includeUnit) {
  const auto& A = *space_model(space).algebra;
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(A.dimension()); ++i)
    if (includeUnit || i != A.unit()) idx.push_back(i);
  std::vector<std::array<int, 4>> out;
  for (int a : idx)
    for (int b : idx)
      for (int c : idx)
        for (int d : idx) out.push_back({a, b, c, d});
  return out;
}

WdvvReport check_all_serial(const InvariantTable& table, const CurveClass& bound, bool includeUnit) {
  WdvvReport rep;
  auto tuples = wdvv_tuples(table.space(), includeUnit);
  for (const auto& beta : classes_below(bound))
    for (const auto& phi : tuples) {
      WdvvInstance inst{table.space(), phi, beta, {}};
      ++rep.instances;
      Rational r = wdvv_residual(table, inst);
      if (!r.is_zero()) rep.failures.push_back({inst, r});
    }
  std::sort(rep.failures.begin(), rep.failures.end());
  return rep;
}

WdvvReport check_all_parallel(const InvariantTable& table, const CurveClass& bound, bool includeUnit, int threads) {
  const Space space = table.space();
  const auto& A = *table.model().algebra;
  const int n = static_cast<int>(A.dimension());
  const int n3 = n * n * n;
  auto betas = classes_below(bound);

  std::vector<int> stride(bound.coords.size(), 1);
  for (int k = static_cast<int>(stride.size()) - 2; k >= 0; --k) stride[k] = stride[k + 1] * (bound.coords[k + 1] + 1);
  int cells = 1;
  for (int c : bound.coords) cells *= c + 1;
  auto flat = [&](const CurveClass& b) {
    int f = 0;
    for (std::size_t k = 0; k < stride.size(); ++k) f += stride[k] * b.coords[k];
    return f;
  };

  // value[b][(x*n+y)*n+z] = <x,y,z>^b and raised[b][(x*n+y)*n+f] = sum_e <x,y,e>^b g^{ef}.
  std::vector<std::vector<Rational>> value(cells), raised(cells);
  for (const auto& beta : betas) {
    auto& v = value[flat(beta)];
    v.assign(n3, Rational{});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) v[(x * n + y) * n + z] = table.value(InvariantKey({x, y, z}, beta));
    auto& w = raised[flat(beta)];
    w.assign(n3, Rational{});
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int e = 0; e < n; ++e) {
          const Rational& c = v[(x * n + y) * n + e];
          if (c.is_zero()) continue;
          for (int f = 0; f < n; ++f)
            if (!A.inverse_metric()[e][f].is_zero()) w[(x * n + y) * n + f] += c * A.inverse_metric()[e][f];
        }
  }
  std::vector<std::vector<std::pair<int, int>>> splits(betas.size());
  for (std::size_t bi = 0; bi < betas.size(); ++bi)
    for (const auto& b1 : classes_below(betas[bi])) splits[bi].emplace_back(flat(b1), flat(betas[bi] - b1));

  auto tuples = wdvv_tuples(space, includeUnit);
  const long work = static_cast<long>(betas.size() * tuples.size());
  const long nt = static_cast<long>(tuples.size());
  std::vector<WdvvFailure> failures;
  int nthreads = threads > 0 ? threads : omp_get_max_threads();

#pragma omp parallel num_threads(nthreads)
  {
    std::vector<WdvvFailure> mine;
#pragma omp for schedule(dynamic, 64)
    for (long w = 0; w < work; ++w) {
      const std::size_t bi = static_cast<std::size_t>(w / nt);
      const auto& phi = tuples[static_cast<std::size_t>(w % nt)];
      const auto [i, j, k, l] = phi;
      Rational r;
      for (const auto& [f1, f2] : splits[bi]) {
        const auto& W = raised[f1];
        const auto& V = value[f2];
        for (int f = 0; f < n; ++f) {
          const Rational& x1 = W[(i * n + j) * n + f];
          if (!x1.is_zero()) {
            const Rational& y1 = V[(f * n + k) * n + l];
            if (!y1.is_zero()) r += x1 * y1;
          }
          const Rational& x2 = W[(i * n + l) * n + f];
          if (!x2.is_zero()) {
            const Rational& y2 = V[(f * n + j) * n + k];
            if (!y2.is_zero()) r -= x2 * y2;
          }
        }
      }
      if (!r.is_zero()) mine.push_back({WdvvInstance{space, phi, betas[bi], {}}, r});
    }
#pragma omp critical
    failures.insert(failures.end(), mine.begin(), mine.end());
  }
  std::sort(failures.begin(), failures.end());
  return {static_cast<std::size_t>(work), std::move(failures)};
}

// ---- Recursion ----

namespace {

int y_index(const char* name) { return space_model(Space::Y).index(name); }

InvariantKey ykey(std::initializer_list<const char*> names, int n, int i) {
  std::vector<int> ins;
  for (const char* s : names) ins.push_back(y_index(s));
  return InvariantKey(ins, CurveClass::y(n, i));
}

std::array<InvariantKey, 4> a_keys(int n) {
  return {ykey({"T2", "T2", "T5"}, n, 1), ykey({"T2", "T3", "T3"}, n, 1), ykey({"T2", "T3", "T4"}, n, 1),
          ykey({"T2", "T4", "T4"}, n, 1)};
}
std::array<InvariantKey, 4> b_keys(int n) {
  return {ykey({"T2", "T5", "T5"}, n, 2), ykey({"T3", "T3", "T5"}, n, 2), ykey({"T3", "T4", "T5"}, n, 2),
          ykey({"T4", "T4", "T5"}, n, 2)};
}
InvariantKey c_key(int n) { return ykey({"T5", "T5", "T5"}, n, 3); }

std::array<int, 4> phi_of(std::array<int, 4> t) {
  std::array<int, 4> out{};
  for (int k = 0; k < 4; ++k) out[k] = y_index(("T" + std::to_string(t[k])).c_str());
  return out;
}

// Solves the named instances at beta for the divisor-free forms of `keys`.
std::vector<Rational> probe(const InvariantTable& table, const CurveClass& beta, const std::vector<InvariantKey>& keys,
                            const std::vector<std::array<int, 4>>& tuples, Matrix<Rational>* matrix = nullptr,
                            std::vector<Rational>* rhs = nullptr) {
  std::vector<InvariantKey> unknowns;
  std::vector<Rational> factors;
  for (const auto& k : keys) {
    auto [f, base] = divisor_normal_form(k);
    unknowns.push_back(base);
    factors.push_back(f);
  }
  Matrix<Rational> a;
  std::vector<Rational> b;
  for (const auto& t : tuples) {
    LinearForm r = wdvv_linear_residual(table, WdvvInstance{Space::Y, phi_of(t), beta, {}}, unknowns);
    std::vector<Rational> row;
    // Columns in terms of the key values themselves: f * x_base = key.
    for (std::size_t v = 0; v < unknowns.size(); ++v) row.push_back(r.coefficient(static_cast<int>(v)) / factors[v]);
    a.push_back(std::move(row));
    b.push_back(-r.constant());
  }
  if (matrix) *matrix = a;
  if (rhs) *rhs = b;
  auto sol = solve_linear(a, b);
  if (!sol.consistent) throw InconsistentDerivation("recursion: inconsistent WDVV system at " + beta.to_string());
  if (!sol.unique) throw Underdetermined("recursion: WDVV system at " + beta.to_string() + " is singular");
  return sol.solution;
}

const Rational& av(const RecursionState& s, int d, int idx) {
  if (d < 0 || d >= static_cast<int>(s.a.size())) throw OutOfTableRange("recursion: a^" + std::to_string(d) + " not computed");
  return s.a[d][idx];
}
const Rational& bv(const RecursionState& s, int d, int idx) {
  if (d < 0 || d >= static_cast<int>(s.b.size())) throw OutOfTableRange("recursion: b^" + std::to_string(d) + " not computed");
  return s.b[d][idx];
}

enum { A225, A233, A234, A244 };
enum { B255, B335, B345, B445 };

}  // namespace

RecursionState initial_recursion_state() {
  RecursionState s;
  s.table = y_two_point_seeds();
  AValues a0;
  auto keys = a_keys(0);
  for (int k = 0; k < 4; ++k) a0[k] = s.table.value(keys[k]);
  s.a.push_back(a0);
  s.C.emplace_back(Rational{0}, Rational{0});
  return s;
}

ASystem build_a_system(int n, const RecursionState& state) {
  if (n < 1) throw std::invalid_argument("build_a_system: n must be positive");
  ASystem sys;
  sys.n = n;
  auto keys = a_keys(n);
  probe(state.table, CurveClass::y(n, 1), {keys.begin(), keys.end()}, {{1, 1, 2, 3}, {1, 1, 2, 4}, {1, 2, 2, 3}, {1, 2, 2, 4}},
        &sys.matrix, &sys.rhs);
  return sys;
}

AValues solve_a(const ASystem& sys) {
  auto sol = solve_linear(sys.matrix, sys.rhs);
  if (!sol.consistent || !sol.unique) throw Underdetermined("a-system is singular at n = " + std::to_string(sys.n));
  return {sol.solution[0], sol.solution[1], sol.solution[2], sol.solution[3]};
}

Rational a_system_determinant_formula(int n) {
  Rational m{n};
  return m * m * (Rational{6} * m - Rational{1}) * (Rational{3} * m * m - Rational{6} * m + Rational{1});
}

Rational a_system_determinant(int n) {
  Rational m{n};
  return Rational{3} * m * (m * m - Rational{3} * m + Rational{1}) * (Rational{6} * m * m - Rational{3} * m + Rational{1});
}

std::pair<Rational, Rational> compute_C(int n, const RecursionState& s) {
  Rational c1, c2;
  for (int d = 0; d < n; ++d) {
    c1 += Rational{6} * (Rational{3} * av(s, d, A233) - av(s, d, A234));
    c2 += Rational{6} * (Rational{3} * av(s, d, A234) - av(s, d, A244));
  }
  return {c1, c2};
}

BValues compute_b(int n, const RecursionState& s) {
  BValues b{};
  Rational extra;
  for (int d = 0; d <= n; ++d) {
    int m = n - d;
    Rational D{d}, M{m}, N{n};
    auto A = [&](int idx) { return av(s, d, idx); };
    auto Am = [&](int idx) { return av(s, m, idx); };
    Rational cross = A(A234) * Am(A234) - A(A244) * Am(A233);
    b[B335] += (Rational{2} * D - N) * A(A233) * Am(A234) + D * M * cross;
    b[B345] += M * (Rational{3} * D - Rational{1}) * cross;
    b[B445] += (Rational{3} * M - Rational{1}) * (Rational{3} * D - Rational{1}) * cross +
               (Rational{2} * D - N) * A(A234) * Am(A244);
    extra += D * (Rational{3} * M - Rational{1}) * A(A234) * Am(A225) - D * M * A(A244) * Am(A225);
  }
  b[B255] = b[B445] + extra;
  return b;
}

BValues derive_b(int n, const RecursionState& state) {
  auto keys = b_keys(n);
  auto v = probe(state.table, CurveClass::y(n, 2), {keys.begin(), keys.end()},
                 {{1, 4, 3, 3}, {2, 4, 3, 3}, {2, 3, 4, 4}, {1, 4, 5, 2}});
  return {v[0], v[1], v[2], v[3]};
}

Rational compute_c(int n, const RecursionState& s) {
  Rational c;
  for (int d = 0; d <= n; ++d) {
    int m = n - d;
    Rational t155 = Rational{m} / Rational{2} * bv(s, m, B255);
    Rational t125 = Rational{d} * av(s, d, A225);
    c += Rational{3} * av(s, d, A233) * t155 - av(s, d, A234) * t155 - av(s, d, A233) * bv(s, m, B255) -
         Rational{3} * t125 * bv(s, m, B335) + av(s, d, A225) * bv(s, m, B335) + t125 * bv(s, m, B345);
  }
  return c;
}

Rational derive_c(int n, const RecursionState& state) {
  return probe(state.table, CurveClass::y(n, 3), {c_key(n)}, {{2, 3, 5, 5}})[0];
}

std::vector<std::pair<InvariantKey, Rational>> degree_n0(int n) {
  if (n < 1) throw std::invalid_argument("degree_n0: n must be positive");
  auto fam = y_multiple_cover_family();
  InvariantKey empty({}, CurveClass::y(n, 0));
  InvariantKey triple = ykey({"T1", "T1", "T1"}, n, 0);
  auto [f, base] = divisor_normal_form(triple);
  return {{empty, fam.value(empty)}, {triple, f * fam.value(base)}};
}

RecursionState run_recursion(int nMax, bool crossCheck) {
  RecursionState s = initial_recursion_state();
  auto mismatch = [](const std::string& what, int n) {
    return InconsistentDerivation("recursion: closed form and WDVV solve disagree for " + what + " at n = " +
                                  std::to_string(n));
  };
  for (int n = 0; n <= nMax; ++n) {
    if (n >= 1) {
      ASystem sys = build_a_system(n, s);
      auto C = compute_C(n, s);
      if (crossCheck && (sys.rhs[0] != C.first || sys.rhs[1] != C.second || !sys.rhs[2].is_zero() || !sys.rhs[3].is_zero()))
        throw mismatch("C", n);
      AValues a = solve_a(sys);
      s.a.push_back(a);
      s.C.push_back(C);
      auto keys = a_keys(n);
      for (int k = 0; k < 4; ++k) s.table.set(keys[k], a[k]);
    }
    BValues b = compute_b(n, s);
    if (crossCheck && n >= 1 && derive_b(n, s) != b) throw mismatch("b", n);
    s.b.push_back(b);
    auto bk = b_keys(n);
    for (int k = 0; k < 4; ++k) s.table.set(bk[k], b[k]);
    Rational c = compute_c(n, s);
    if (crossCheck && derive_c(n, s) != c) throw mismatch("c", n);
    s.c.push_back(c);
    s.table.set(c_key(n), c);
    s.nMax = n;
  }
  return s;
}

InvariantTable recursion_table(const RecursionState& state) {
  InvariantTable t = state.table;
  t.set_closure(CurveClass::y(std::max(state.nMax, 0), 3), {3});
  return t;
}

// ---- Reconstruction ----

namespace {

// Orbit of (i,j,k,l) under (i,j,k,l) -> (j,i,l,k) and (i,j,k,l) -> (k,l,i,j); the residual is invariant.
bool canonical_tuple(const std::array<int, 4>& t) {
  std::array<int, 4> o1{t[1], t[0], t[3], t[2]}, o2{t[2], t[3], t[0], t[1]}, o3{t[3], t[2], t[1], t[0]};
  return t <= o1 && t <= o2 && t <= o3;
}

void multisets(int from, int to, int size, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (size == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v <= to; ++v) {
    cur.push_back(v);
    multisets(v, to, size - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

InvariantTable reconstruct(Space space, const InvariantTable& seeds, int maxPoints, const CurveClass& bound) {
  if (seeds.space() != space || bound.space != space) throw std::invalid_argument("reconstruct: space mismatch");
  InvariantTable t = seeds;
  const auto& m = t.model();
  const int unit = m.algebra->unit();
  const int n = static_cast<int>(m.algebra->dimension());

  auto betas = classes_below(bound);
  std::erase_if(betas, [](const CurveClass& b) { return b.is_zero(); });
  std::stable_sort(betas.begin(), betas.end(), [](const CurveClass& a, const CurveClass& b) {
    int sa = 0, sb = 0;
    for (int c : a.coords) sa += c;
    for (int c : b.coords) sb += c;
    return std::tie(sa, a.coords) < std::tie(sb, b.coords);
  });

  std::vector<std::array<int, 4>> tuples;
  for (const auto& tp : wdvv_tuples(space, false))
    if (canonical_tuple(tp)) tuples.push_back(tp);

  for (const auto& beta : betas) {
    if (std::any_of(t.families().begin(), t.families().end(), [&](const ClosedFormFamily& f) { return f.covers(beta); }))
      continue;
    for (int k = 3; k <= maxPoints; ++k) {
      std::vector<InvariantKey> open;
      std::map<InvariantKey, int> unknownIndex;
      std::vector<InvariantKey> unknowns;
      for (auto& cand : keys_at(space, beta, k)) {
        if (t.try_value(cand)) continue;
        auto [f, base] = divisor_normal_form(cand);
        if (f.is_zero()) continue;
        if (unknownIndex.emplace(base, static_cast<int>(unknowns.size())).second) unknowns.push_back(base);
        open.push_back(std::move(cand));
      }
      if (!open.empty() && (space == Space::Y || k == 3)) {
        std::vector<std::vector<int>> gammaSets;
        std::vector<int> cur;
        multisets(0, n - 1, k - 3, cur, gammaSets);
        std::erase_if(gammaSets, [&](const std::vector<int>& g) { return std::find(g.begin(), g.end(), unit) != g.end(); });

        Matrix<Rational> rows;
        std::vector<Rational> rhs;
        for (const auto& gam : gammaSets)
          for (const auto& tp : tuples) {
            WdvvInstance inst{space, tp, beta, gam};
            LinearForm r;
            try {
              r = wdvv_linear_residual(t, inst, unknowns);
            } catch (const OutOfTableRange&) {
              continue;
            } catch (const Underdetermined&) {
              continue;
            }
            if (r.is_constant()) {
              if (!r.constant().is_zero())
                throw InconsistentDerivation("reconstruct: lower invariants violate WDVV at " + inst.to_string());
              continue;
            }
            std::vector<Rational> row(unknowns.size());
            for (const auto& [v, c] : r.coefficients()) row[v] = c;
            rows.push_back(std::move(row));
            rhs.push_back(-r.constant());
          }
        auto part = determined_values(rows, rhs, unknowns.size());
        if (!part.consistent) throw InconsistentDerivation("reconstruct: contradictory WDVV equations at " + beta.to_string());
        for (const auto& cand : open) {
          auto [f, base] = divisor_normal_form(cand);
          const auto& v = part.values[unknownIndex.at(base)];
          if (v) t.set(cand, f * *v);
          else t.mark_undetermined(cand);
        }
      } else {
        for (const auto& cand : open) t.mark_undetermined(cand);
      }
      t.mark_complete(beta, k);
    }
  }
  return t;
}

InvariantTable reconstruct(Space space, const InvariantTable& seeds, int maxPoints, int maxDegree) {
  CurveClass bound = space == Space::X ? CurveClass::x(maxDegree) : CurveClass::y(maxDegree, 3);
  return reconstruct(space, seeds, maxPoints, bound);
}

}  // namespace crc
