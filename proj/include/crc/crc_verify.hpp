#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crc/gw_tables.hpp"
#include "crc/linear_algebra.hpp"
#include "crc/multipoly.hpp"
#include "crc/power_series.hpp"
#include "crc/quantum_ring.hpp"
#include "crc/wdvv.hpp"

namespace crc {

// QH(X) over Q(i) and QH(Y) at q1 = v over Q(i), both from published tables.
struct SpecializedRings {
  QuantumRing<GaussRational> x;
  QuantumRing<GaussRational> y;
};

SpecializedRings specialized_rings(const SeedTables& tables, const Rational& q1 = Rational{-1});
const SpecializedRings& default_rings();

// Linear identification of the two state spaces plus the parameter map q -> qToQ2 * q2,
// q1 -> q1Value. classMap[j][i] is the T_j-coordinate of the image of S_i; its transpose
// sends insertion variables t_j to sum_i classMap[j][i] s_i.
struct ChangeOfVariables {
  Matrix<GaussRational> classMap;
  GaussRational qToQ2{-1};
  Rational q1Value{-1};

  static ChangeOfVariables identity(std::size_t n);
  std::optional<Matrix<GaussRational>> inverse_class_map() const;
  std::string to_string() const;
};

// Generator images S1 -> T2, S2 -> i(T2 - T1) in T-coordinates.
std::map<std::string, std::vector<GaussRational>> forward_generator_images();

// Each S_k written as a scalar times a monomial in S1, S2 (classical product), then pushed
// through the generator images with the q1 = -1 product at q2 = 0.
ChangeOfVariables derive_change_of_variables(const SpecializedRings& rings = default_rings());
// The substitution (s0, -i s2, s1 + i s2, -6 s3 - (3i/2) s4, 3 s3 + i s4, 3 s5) taken literally.
ChangeOfVariables printed_change_of_variables();

bool is_invertible(const ChangeOfVariables& cov);
bool preserves_grading(const ChangeOfVariables& cov);
// M^T G^Y M = G^X.
bool metric_compatible(const ChangeOfVariables& cov);

// Image of a polynomial in X classes and q (T classes and q2) under the class map
// (its inverse); classes become target basis names.
MultiPoly<GaussRational> relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel);
MultiPoly<GaussRational> inverse_relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel);

// The image vanishes in QH(Y)|q1=-1 (resp. QH(X)) tensored with Q(i).
bool verify_relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel,
                           const SpecializedRings& rings = default_rings());
bool verify_inverse_relation_image(const ChangeOfVariables& cov, const MultiPoly<Rational>& rel,
                                   const SpecializedRings& rings = default_rings());

struct IsomorphismReport {
  bool classesRoundTrip = false;
  bool parameterRoundTrip = false;
  bool productsMatch = false;
  bool forwardRelations = false;
  bool inverseRelations = false;
  std::vector<std::string> mismatches;
  bool ok() const {
    return classesRoundTrip && parameterRoundTrip && productsMatch && forwardRelations && inverseRelations;
  }
};

IsomorphismReport isomorphism_report(const ChangeOfVariables& cov, const SpecializedRings& rings = default_rings());
bool verify_isomorphism();

// L_g = int lambda_g lambda_{g-1} for g = 1..gmax.
struct HodgeSeries {
  std::vector<Rational> values;
  int gmax() const { return static_cast<int>(values.size()); }
  const Rational& L(int g) const { return values.at(g - 1); }
};

// L_g = (2g-1)! [s^(2g-1)] (1/2) tan(s/2).
HodgeSeries hodge_from_tan(int gmax);

// c1 of the normal bundle of the fixed conic in the flag variety.
Rational fixed_curve_normal_c1();

// Genus-0 potential through cubic order in the insertion variables. Above cubic order only
// one direction is kept, symbolically: on Y the t1-direction 6 sum_d d^-3 e^(d t1) q1^d, on
// X the s2-direction -c1(N) sum_g L_g s2^(2g+2)/(2g+2)!.
struct Potential {
  Space space = Space::Y;
  int order = 3;
  std::vector<std::string> insertionVariables;  // t0..t5 or s0..s5
  std::string parameter;                        // q2 or q
  MultiPoly<RationalFunction> cubic;            // q1 in the coefficients; constants on X
  int directionIndex = 1;
  std::optional<ClosedFormFamily> family;  // Y
  std::optional<HodgeSeries> hodge;        // X
  Rational normalC1;                       // X

  std::vector<std::string> variables() const;
  // Coefficient of x^k along the kept direction with no parameter, k >= 3.
  RationalFunction direction_coefficient(int k) const;
  // Coefficient of a monomial such as "t4^2*t5*q2^2" (q1 stays in the result).
  RationalFunction coefficient(const std::string& monomial) const;
  std::string to_string() const;
};

Potential assemble_potential(Space space, const InvariantTable& table, const HodgeSeries& hodge, int order = 3,
                             const std::vector<Q1Series>& config = default_q1_config());

struct PotentialComparison {
  MultiPoly<GaussRational> image;     // source cubic part after substitution
  MultiPoly<GaussRational> residual;  // image - target cubic part
  // (k, residual of x^k) along the kept direction for 4 <= k <= order, nonzero ones only.
  std::vector<std::pair<int, GaussRational>> directionResiduals;
  std::optional<std::string> firstMismatch;
  std::size_t residual_terms() const { return residual.size() + directionResiduals.size(); }
  bool ok() const { return residual_terms() == 0; }
};

// source(cov^T s, q1Value, q / qToQ2) - target(s, q), through the smaller of the two orders.
PotentialComparison compare_potentials(const ChangeOfVariables& cov, const Potential& source, const Potential& target);
// Published tables, Hodge values from the tan oracle, derived change of variables.
PotentialComparison compare_potentials(const ChangeOfVariables& cov, int order = 3);

struct TanIdentityReport {
  int order = 0;
  PowerSeries reference{"s", 0};                // -3 tan(s/2)
  PowerSeries orbifold{"s", 0};                 // third s2-partial of F^X at s = (0, 0, s2, 0, 0, 0), q = 0
  PowerSeries resolution{"s", 0};               // 3i + 6i (-E/(1+E)), E = e^(-i s2)
  PowerSeries resolutionFromPotential{"s", 0};  // third s2-partial of the substituted F^Y, term by term
  bool ok() const;
};

PowerSeries tan_half_series(int order);
TanIdentityReport tan_identity_report(int order);
bool tan_identity(int order);

// <S2^(2g+2)>^0 read off the substituted F^Y against -c1(N) L_g, for g = 1..hodge.gmax().
struct HodgeCheck {
  int g = 0;
  Rational fromResolution;
  Rational fromHodge;
};
std::vector<HodgeCheck> hodge_cross_check(const HodgeSeries& hodge);

// One seed value raised by 1, then the exhaustive WDVV check and the cubic potential
// comparison rerun on the perturbed tables.
struct FaultReport {
  Space space = Space::Y;
  InvariantKey key;
  std::size_t wdvvFailures = 0;
  std::optional<WdvvFailure> firstWdvvFailure;
  std::size_t potentialResidualTerms = 0;
  std::optional<std::string> potentialMismatch;
  bool detected() const { return wdvvFailures > 0 || potentialResidualTerms > 0; }
};

FaultReport inject_fault(const SeedTables& tables, Space space, const InvariantKey& key, int threads = 0);
// Every stored three-point entry of both seed tables.
std::vector<std::pair<Space, InvariantKey>> fault_sites(const SeedTables& tables);

}  // namespace crc
