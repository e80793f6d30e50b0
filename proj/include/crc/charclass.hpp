#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "crc/graded_algebra.hpp"
#include "crc/presentation.hpp"

namespace crc {

using RingPtr = std::shared_ptr<const Presentation<Rational>>;

// Total Chern class: a unit of a nilpotent graded ring, kept in normal form.
class TotalClass {
 public:
  TotalClass(RingPtr ambient, const MultiPoly<Rational>& value);
  static TotalClass one(RingPtr ambient);

  const Presentation<Rational>& ambient() const { return *ambient_; }
  const RingPtr& ambient_ptr() const { return ambient_; }
  const MultiPoly<Rational>& value() const { return value_; }
  // Homogeneous piece c_k.
  MultiPoly<Rational> component(int degree) const;
  int top_nonzero_degree() const;
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const TotalClass& a, const TotalClass& b) { return a.value_ == b.value_; }

 private:
  RingPtr ambient_;
  MultiPoly<Rational> value_;
};

TotalClass whitney(const TotalClass& a, const TotalClass& b);
TotalClass whitney_inverse(const TotalClass& a);
// Total class of Sym^2 of a rank-2 bundle: 1 + 3c1 + (2c1^2 + 4c2) + 4c1c2.
TotalClass sym2_rank2(const TotalClass& c);

// Q[h]/(h^(n+1)) with generator named `generator`.
RingPtr projective_space_ring(int n, const std::string& generator);
// The ring of a point.
RingPtr point_ring();

struct ProjectiveBundle {
  RingPtr ring;        // base generators plus the fiber class
  TotalClass tangent;  // c(T base) * (1 + 2 xi + c1(V))
};

// P(V) for a rank-2 bundle V over the base; xi satisfies xi^2 + c1(V) xi + c2(V) = 0.
ProjectiveBundle proj_bundle(const TotalClass& baseTangent, const TotalClass& cV, const std::string& fiberClass);

// Unique class of the given degree with pairing(test, result) = value for each constraint.
Vec poincare_dual_solve(const GradedAlgebra& ring, const Rational& degree,
                        const std::vector<std::pair<Vec, Rational>>& constraints);

// c1 of the normal bundle of a fixed curve: (c1 of the ambient restricted) - c1(T curve),
// with generator i of the ambient restricting to restriction[i] times the point class.
Rational normal_bundle_c1(const std::vector<Rational>& ambientC1, const std::vector<Rational>& restriction,
                          const Rational& curveC1);

// <c1, curve> weighted by the stacky factor; pairing of generator i with curve j is delta_ij.
Rational curve_c1_pairing(const std::vector<Rational>& c1, const std::vector<Rational>& curve, const Rational& factor);

}  // namespace crc
