#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crc/rational.hpp"

namespace crc {

template <FieldElement K>
using Matrix = std::vector<std::vector<K>>;

template <FieldElement K>
struct SolveResult {
  std::vector<K> solution;  // one particular solution (free variables set to 0)
  std::size_t rank = 0;
  bool consistent = true;
  bool unique = true;
  std::vector<std::size_t> free_columns;
};

// Row reduction to reduced echelon form in place; returns pivot columns.
template <FieldElement K>
std::vector<std::size_t> row_reduce(Matrix<K>& a, std::size_t columns) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < columns && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[row], a[p]);
    K inv = a[row][col].inverse();
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      K f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c)
        if (!a[row][c].is_zero()) a[r][c] = a[r][c] - f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <FieldElement K>
SolveResult<K> solve_linear(const Matrix<K>& a, const std::vector<K>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve_linear: row count mismatch");
  std::size_t n = a.empty() ? 0 : a[0].size();
  Matrix<K> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) {
    if (aug[r].size() != n) throw std::invalid_argument("solve_linear: ragged matrix");
    aug[r].push_back(b[r]);
  }
  auto pivots = row_reduce(aug, n);
  SolveResult<K> res;
  res.rank = pivots.size();
  res.solution.assign(n, K{0});
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (!aug[r][n].is_zero()) res.consistent = false;
  for (std::size_t r = 0; r < pivots.size(); ++r) res.solution[pivots[r]] = aug[r][n];
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) res.free_columns.push_back(c);
  res.unique = res.free_columns.empty();
  return res;
}

template <FieldElement K>
struct PartialSolution {
  std::vector<std::optional<K>> values;  // set for variables every solution agrees on
  bool consistent = true;
};

// Variables fixed by the system: pivot rows with no entries in free columns.
template <FieldElement K>
PartialSolution<K> determined_values(const Matrix<K>& a, const std::vector<K>& b, std::size_t columns) {
  Matrix<K> aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b.at(r));
  auto pivots = row_reduce(aug, columns);
  PartialSolution<K> out;
  out.values.assign(columns, std::nullopt);
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (!aug[r][columns].is_zero()) out.consistent = false;
  std::vector<bool> is_pivot(columns, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    bool fixed = true;
    for (std::size_t c = 0; c < columns && fixed; ++c)
      if (!is_pivot[c] && !aug[r][c].is_zero()) fixed = false;
    if (fixed) out.values[pivots[r]] = aug[r][columns];
  }
  return out;
}

template <FieldElement K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
  std::size_t n = a.size();
  Matrix<K> aug(n, std::vector<K>(2 * n, K{0}));
  for (std::size_t r = 0; r < n; ++r) {
    if (a[r].size() != n) throw std::invalid_argument("inverse: matrix not square");
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = a[r][c];
    aug[r][n + r] = K{1};
  }
  if (row_reduce(aug, n).size() != n) return std::nullopt;
  Matrix<K> out(n, std::vector<K>(n, K{0}));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = aug[r][n + c];
  return out;
}

template <FieldElement K>
K determinant(Matrix<K> a) {
  std::size_t n = a.size();
  K det{1};
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && a[p][col].is_zero()) ++p;
    if (p == n) return K{0};
    if (p != col) {
      std::swap(a[p], a[col]);
      det = -det;
    }
    det = det * a[col][col];
    K inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      K f = a[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
    }
  }
  return det;
}

template <FieldElement K>
Matrix<K> multiply(const Matrix<K>& a, const Matrix<K>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), inner = b.size();
  Matrix<K> out(n, std::vector<K>(m, K{0}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
    }
  return out;
}

template <FieldElement K>
Matrix<K> transpose(const Matrix<K>& a) {
  if (a.empty()) return {};
  Matrix<K> out(a[0].size(), std::vector<K>(a.size(), K{0}));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

template <FieldElement K>
Matrix<K> identity_matrix(std::size_t n) {
  Matrix<K> out(n, std::vector<K>(n, K{0}));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = K{1};
  return out;
}

}  // namespace crc
