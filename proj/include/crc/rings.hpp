#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "crc/charclass.hpp"
#include "crc/graded_algebra.hpp"
#include "crc/presentation.hpp"

namespace crc {

struct PresentedRing {
  GradedAlgebra algebra;
  RingPtr presentation;
};

// H*(F) for the full flag variety of C^3: Q[p1,p2]/(p1p2 - p1^2 - p2^2, p1p2^2 - p1^2p2).
PresentedRing build_flag_ring();

// Algebra on the given monomials of a nilpotent presentation; integration reads the
// coefficient of `top` (which must be one of `monomials`).
GradedAlgebra algebra_from_presentation(const Presentation<Rational>& p, const std::vector<Exponent>& monomials,
                                        const std::vector<std::string>& names, const Exponent& top);

struct SectorClass {
  std::string name;
  Sector sector = Sector::Untwisted;
  // Untwisted: an invariant class of the cover, in its generators.
  // Twisted: a class of the fixed curve, in the single generator of the curve ring.
  MultiPoly<Rational> cls;
};

struct SectorMapData {
  std::vector<SectorClass> classes;
  std::map<std::string, Rational> restriction;  // cover generator -> multiple of the curve point class
  Rational fixedLocusMetricFactor;
  std::string fixedLocusTop = "x";
  Rational ageShift{1};
};

// The involution quotient of the flag variety: invariant classes 1, h, h^2, h^3 with
// h = p1 + p2, the fixed conic C with p_i|_C = 2x, and the 1/2 stacky factor.
SectorMapData flag_involution_sector_data();

// Chen-Ruan ring of the global quotient: untwisted products from the cover, mixed products
// by restriction to the fixed curve, twisted-twisted products as the metric adjoint of
// the fixed-curve product.
GradedAlgebra build_orbifold_ring(const SectorMapData& d);

// Q[S1,S2]/(S2^3, 3S2^2 - 2S1^2) with S1^2 -> (3/2)S2^2 and S2^3 -> 0.
RingPtr orbifold_presentation();

// c(V) = c(Sym^2 W) over P^2 with c(W) = (1+T1)^(-1).
TotalClass resolution_bundle_class(const RingPtr& base);

struct ResolutionRing {
  GradedAlgebra algebra;
  RingPtr presentation;
  TotalClass tangent;
};

// H*(P(V)) on T0..T5 = 1, T1, T2, T1^2, T1T2, T1^2T2 with the fiber class named T2.
ResolutionRing build_y_ring(const TotalClass& cV);
ResolutionRing build_y_ring();

}  // namespace crc
