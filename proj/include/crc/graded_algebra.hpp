#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "crc/linear_algebra.hpp"
#include "crc/rational.hpp"

namespace crc {

enum class Sector { Untwisted, Twisted };

struct BasisClass {
  int index = 0;
  std::string name;
  Rational degree;  // complex degree, age shift already included
  Sector sector = Sector::Untwisted;
};

using Vec = std::vector<Rational>;

// Commutative Frobenius algebra on a finite basis: structure constants and metric.
class GradedAlgebra {
 public:
  // structure[i][j] is the product e_i * e_j in basis coordinates.
  GradedAlgebra(std::vector<BasisClass> basis, int unit, Matrix<Rational> metric,
                std::vector<std::vector<Vec>> structure);

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<BasisClass>& basis() const { return basis_; }
  const BasisClass& basis_class(int i) const { return basis_.at(i); }
  int unit() const { return unit_; }
  int index_of(std::string_view name) const;
  const Matrix<Rational>& metric() const { return metric_; }
  const Matrix<Rational>& inverse_metric() const { return inverse_; }
  const Vec& product(int i, int j) const { return structure_.at(i).at(j); }
  const std::vector<std::vector<Vec>>& structure() const { return structure_; }

  Vec basis_vector(int i) const;
  Vec multiply(const Vec& a, const Vec& b) const;
  Rational pairing(const Vec& a, const Vec& b) const;
  // <e_i e_j, e_k>, the degree-zero three-point function.
  Rational triple(int i, int j, int k) const;
  Rational top_degree() const;
  // Basis counts by integral degree 0..top.
  std::vector<int> graded_dimensions() const;
  std::string format(const Vec& v) const;

 private:
  std::vector<BasisClass> basis_;
  int unit_;
  Matrix<Rational> metric_;
  Matrix<Rational> inverse_;
  std::vector<std::vector<Vec>> structure_;
  std::vector<std::vector<std::vector<Rational>>> triples_;
};

// e^i with pairing(e^i, e_j) = delta.
std::vector<Vec> dual_basis(const GradedAlgebra& a);

struct AlgebraAxioms {
  bool commutative = true;
  bool associative = true;
  bool unit = true;
  bool metric_symmetric = true;
  bool frobenius = true;
  bool graded_pairing = true;
  bool graded_product = true;
  bool all() const {
    return commutative && associative && unit && metric_symmetric && frobenius && graded_pairing && graded_product;
  }
};

AlgebraAxioms check_axioms(const GradedAlgebra& a);

}  // namespace crc
