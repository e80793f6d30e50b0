#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crc/gw_tables.hpp"
#include "crc/linear_algebra.hpp"

namespace crc {

// One WDVV equation: sum over beta1 + beta2 = beta and splittings of gammas of
//   <i,j,S1,e>^{beta1} g^{ef} <f,k,l,S2>^{beta2} - <i,l,S1,e>^{beta1} g^{ef} <f,j,k,S2>^{beta2}.
struct WdvvInstance {
  Space space = Space::Y;
  std::array<int, 4> phi{};  // (i, j, k, l)
  CurveClass beta;
  std::vector<int> gammas;

  std::string to_string() const;
  auto operator<=>(const WdvvInstance&) const = default;
};

// Affine form c + sum x_v * coeff_v over the unknowns of a linear WDVV system.
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(Rational c) : constant_(std::move(c)) {}
  LinearForm(long c) : constant_(c) {}
  static LinearForm variable(int index, const Rational& coeff = Rational{1});

  const Rational& constant() const { return constant_; }
  const std::map<int, Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int index) const;
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator*=(const Rational& s);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a += b * Rational{-1}; }
  friend LinearForm operator*(LinearForm a, const Rational& s) { return a *= s; }
  friend LinearForm operator*(const Rational& s, LinearForm a) { return a *= s; }
  // One side must be constant; WDVV at the top class is linear in the unknowns.
  friend LinearForm operator*(const LinearForm& a, const LinearForm& b);
  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  Rational constant_;
  std::map<int, Rational> coeffs_;
};

// Residual of the instance on a table. OutOfTableRange when the table does not cover
// every split; UnsupportedInstance for gamma insertions on the orbifold.
Rational wdvv_residual(const InvariantTable& table, const WdvvInstance& inst);

// Residual as an affine form in `unknowns` (divisor-free keys at inst.beta): a key whose
// divisor normal form (f, K) has K = unknowns[v] contributes f * x_v.
LinearForm wdvv_linear_residual(const InvariantTable& table, const WdvvInstance& inst,
                                const std::vector<InvariantKey>& unknowns);

struct WdvvFailure {
  WdvvInstance instance;
  Rational residual;
  auto operator<=>(const WdvvFailure&) const = default;
};

struct WdvvReport {
  std::size_t instances = 0;
  std::vector<WdvvFailure> failures;  // sorted by instance
  bool ok() const { return failures.empty(); }
};

// Insertion 4-tuples over the basis, or over the non-unit classes.
std::vector<std::array<int, 4>> wdvv_tuples(Space space, bool includeUnit);

// Every gamma-free instance with beta <= bound. The serial version evaluates each residual
// through the table; the parallel one precomputes the 3-point cube and runs under OpenMP.
WdvvReport check_all_serial(const InvariantTable& table, const CurveClass& bound, bool includeUnit);
WdvvReport check_all_parallel(const InvariantTable& table, const CurveClass& bound, bool includeUnit,
                              int threads = 0);

// ---- Recursion for the 3-point invariants of the resolution ----

// a^n = (<T2,T2,T5>, <T2,T3,T3>, <T2,T3,T4>, <T2,T4,T4>)^{n,1}
using AValues = std::array<Rational, 4>;
// b^n = (<T2,T5,T5>, <T3,T3,T5>, <T3,T4,T5>, <T4,T4,T5>)^{n,2}
using BValues = std::array<Rational, 4>;

struct ASystem {
  int n = 0;
  Matrix<Rational> matrix;    // columns a225, a233, a234, a244
  std::vector<Rational> rhs;  // (C1, C2, 0, 0)
};

struct RecursionState {
  int nMax = -1;
  std::vector<AValues> a;
  std::vector<std::pair<Rational, Rational>> C;  // C[0] unused
  std::vector<BValues> b;
  std::vector<Rational> c;  // <T5,T5,T5>^{n,3}
  InvariantTable table{Space::Y};
};

// a^0 read off the (0,1) two-point seeds; nothing else computed.
RecursionState initial_recursion_state();

// Instances (1,1,2,3), (1,1,2,4), (1,2,2,3), (1,2,2,4) at beta = (n,1) as a linear system.
ASystem build_a_system(int n, const RecursionState& state);
AValues solve_a(const ASystem& sys);
// Determinant as printed with the system, n^2 (6n-1)(3n^2-6n+1). It disagrees with the
// printed rows for every n >= 1; the rows are confirmed by WDVV and by the published values.
Rational a_system_determinant_formula(int n);
// Determinant of the rows themselves: 3n (n^2-3n+1)(6n^2-3n+1), nonzero for integer n >= 1.
Rational a_system_determinant(int n);

std::pair<Rational, Rational> compute_C(int n, const RecursionState& state);
// Convolution formulas; need a^d for d <= n.
BValues compute_b(int n, const RecursionState& state);
// The same values solved from (1,4,3,3), (2,4,3,3), (2,3,4,4), (1,4,5,2) at (n,2).
BValues derive_b(int n, const RecursionState& state);
// Convolution formula; needs a^d and b^d for d <= n.
Rational compute_c(int n, const RecursionState& state);
// Solved from (2,3,5,5) at (n,3).
Rational derive_c(int n, const RecursionState& state);

// <>^{n,0} = 6/n^3 and <T1,T1,T1>^{n,0} = 6.
std::vector<std::pair<InvariantKey, Rational>> degree_n0(int n);

// Runs a, b, c for n = 0..nMax. With crossCheck the closed forms are compared against
// the WDVV solves (InconsistentDerivation on disagreement).
RecursionState run_recursion(int nMax, bool crossCheck = true);
// Every 3-point value of the state plus the seeds, closed at (nMax, 3).
InvariantTable recursion_table(const RecursionState& state);

// ---- Reconstruction ----

// Extends `seeds` class by class (ordered by total degree) and point count 3..maxPoints:
// the invariants of each (beta, k) not already implied are solved from every WDVV
// equation at beta. Keys the equations leave free are marked undetermined; contradictory
// equations throw InconsistentDerivation. On the orbifold only 3-point equations are used;
// higher-point keys come from the divisor axiom alone.
InvariantTable reconstruct(Space space, const InvariantTable& seeds, int maxPoints, const CurveClass& bound);
InvariantTable reconstruct(Space space, const InvariantTable& seeds, int maxPoints, int maxDegree);

}  // namespace crc
