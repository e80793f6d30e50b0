#include "crc/graded_algebra.hpp"

#include <sstream>

#include "crc/errors.hpp"

namespace crc {

GradedAlgebra::GradedAlgebra(std::vector<BasisClass> basis, int unit, Matrix<Rational> metric,
                             std::vector<std::vector<Vec>> structure)
    : basis_(std::move(basis)), unit_(unit), metric_(std::move(metric)), structure_(std::move(structure)) {
  std::size_t n = basis_.size();
  if (metric_.size() != n || structure_.size() != n)
    throw std::invalid_argument("GradedAlgebra: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i) {
    if (metric_[i].size() != n || structure_[i].size() != n)
      throw std::invalid_argument("GradedAlgebra: dimension mismatch");
    for (std::size_t j = 0; j < n; ++j) {
      if (structure_[i][j].size() != n) throw std::invalid_argument("GradedAlgebra: product vector length");
      if (metric_[i][j] != metric_[j][i]) throw SingularMetric("GradedAlgebra: metric not symmetric");
    }
  }
  auto inv = inverse(metric_);
  if (!inv) throw SingularMetric("GradedAlgebra: metric not invertible");
  inverse_ = std::move(*inv);
  triples_.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational{0})));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) triples_[i][j][k] = pairing(structure_[i][j], basis_vector(static_cast<int>(k)));
}

int GradedAlgebra::index_of(std::string_view name) const {
  for (const auto& b : basis_)
    if (b.name == name) return b.index;
  throw UnboundSymbol("GradedAlgebra: unknown basis class '" + std::string(name) + "'");
}

Vec GradedAlgebra::basis_vector(int i) const {
  Vec v(basis_.size(), Rational{0});
  v.at(i) = Rational{1};
  return v;
}

Vec GradedAlgebra::multiply(const Vec& a, const Vec& b) const {
  Vec out(basis_.size(), Rational{0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      Rational f = a[i] * b[j];
      const Vec& p = structure_[i][j];
      for (std::size_t k = 0; k < out.size(); ++k)
        if (!p[k].is_zero()) out[k] += f * p[k];
    }
  }
  return out;
}

Rational GradedAlgebra::pairing(const Vec& a, const Vec& b) const {
  Rational acc{0};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero() && !metric_[i][j].is_zero()) acc += a[i] * metric_[i][j] * b[j];
  }
  return acc;
}

Rational GradedAlgebra::triple(int i, int j, int k) const { return triples_.at(i).at(j).at(k); }

Rational GradedAlgebra::top_degree() const {
  Rational top{0};
  for (const auto& b : basis_) top = std::max(top, b.degree);
  return top;
}

std::vector<int> GradedAlgebra::graded_dimensions() const {
  Rational top = top_degree();
  if (!top.is_integer()) throw std::logic_error("GradedAlgebra: fractional top degree");
  std::vector<int> dims(top.numerator().get_si() + 1, 0);
  for (const auto& b : basis_) {
    if (!b.degree.is_integer()) throw std::logic_error("GradedAlgebra: fractional degree");
    ++dims.at(b.degree.numerator().get_si());
  }
  return dims;
}

std::string GradedAlgebra::format(const Vec& v) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    std::string c = v[k].to_string();
    bool neg = c[0] == '-';
    if (neg) c.erase(0, 1);
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    if (c != "1") os << c << "*";
    os << basis_[k].name;
    first = false;
  }
  return first ? "0" : os.str();
}

std::vector<Vec> dual_basis(const GradedAlgebra& a) {
  const auto& g_inv = a.inverse_metric();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < a.dimension(); ++i) out.push_back(g_inv[i]);
  return out;
}

AlgebraAxioms check_axioms(const GradedAlgebra& a) {
  AlgebraAxioms r;
  int n = static_cast<int>(a.dimension());
  Rational top = a.top_degree();
  for (int i = 0; i < n; ++i) {
    if (a.product(a.unit(), i) != a.basis_vector(i) || a.product(i, a.unit()) != a.basis_vector(i)) r.unit = false;
    for (int j = 0; j < n; ++j) {
      const auto& gi = a.basis_class(i);
      const auto& gj = a.basis_class(j);
      if (a.metric()[i][j] != a.metric()[j][i]) r.metric_symmetric = false;
      if (!a.metric()[i][j].is_zero() && gi.degree + gj.degree != top) r.graded_pairing = false;
      if (a.product(i, j) != a.product(j, i)) r.commutative = false;
      const Vec& p = a.product(i, j);
      for (int k = 0; k < n; ++k)
        if (!p[k].is_zero() && a.basis_class(k).degree != gi.degree + gj.degree) r.graded_product = false;
      for (int k = 0; k < n; ++k) {
        Vec left = a.multiply(a.product(i, j), a.basis_vector(k));
        Vec right = a.multiply(a.basis_vector(i), a.product(j, k));
        if (left != right) r.associative = false;
        if (a.pairing(a.product(i, j), a.basis_vector(k)) != a.pairing(a.basis_vector(i), a.product(j, k)))
          r.frobenius = false;
      }
    }
  }
  return r;
}

}  // namespace crc
