#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bier/rational.hpp"

// Small exact linear algebra over the rationals (row-major dense matrices).
namespace bier::linalg {

using Matrix = std::vector<RationalVector>;

struct Echelon {
  Matrix reduced;               // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

inline Echelon row_reduce(Matrix m) {
  Echelon out;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

/// Some solution of m·x = rhs, or nullopt when inconsistent. Free variables are 0.
inline std::optional<RationalVector> solve(const Matrix& m, const RationalVector& rhs) {
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(rhs[i]);
  const auto ech = row_reduce(std::move(aug));
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < ech.pivots.size(); ++i) {
    if (ech.pivots[i] == cols) return std::nullopt;
    x[ech.pivots[i]] = ech.reduced[i][cols];
  }
  return x;
}

/// Basis of {x : m·x = 0}.
inline std::vector<RationalVector> nullspace(const Matrix& m, std::size_t cols) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < ech.pivots.size(); ++i) v[ech.pivots[i]] = -ech.reduced[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

inline Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational factor = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= factor * m[c][j];
    }
  }
  return det;
}

/// Gram matrix of a list of vectors under the standard inner product.
inline Matrix gram(const std::vector<RationalVector>& vectors) {
  Matrix g(vectors.size(), RationalVector(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors.size(); ++j) g[i][j] = dot(vectors[i], vectors[j]);
  return g;
}

/// Matrix whose columns are the given vectors.
inline Matrix columns(const std::vector<RationalVector>& vectors) {
  const std::size_t rows = vectors.empty() ? 0 : vectors[0].size();
  Matrix m(rows, RationalVector(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = vectors[j][i];
  return m;
}

}  // namespace bier::linalg
