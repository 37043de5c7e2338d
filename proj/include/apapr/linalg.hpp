#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "apapr/error.hpp"
#include "apapr/scalar.hpp"
#include "apapr/tensor.hpp"

namespace apapr {

/// Exact Gauss-Jordan inverse. Pivots on the first nonzero entry, so it works
/// over any exact field type; throws ArithmeticError when singular.
template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.dim();
  Matrix<T> a = m;
  Matrix<T> inv = identity_matrix<T>(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    if (pivot == n) throw ArithmeticError("singular matrix");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const T scale = inverse(a(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      const T factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= factor * a(col, j);
        inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

template <class T>
Vector<T> solve(const Matrix<T>& m, const Vector<T>& rhs) {
  return inverse(m) * rhs;
}

/// Rank of a row list (rows may have any common length).
template <class T>
std::size_t rank(std::vector<std::vector<T>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i)
      if (!is_zero(rows[i][c])) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    const T inv = inverse(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][c])) continue;
      const T factor = rows[i][c] * inv;
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= factor * rows[r][j];
    }
    ++r;
  }
  return r;
}

template <class T>
T determinant(const Matrix<T>& m) {
  const std::size_t n = m.dim();
  Matrix<T> a = m;
  T det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (!is_zero(a(r, col))) {
        pivot = r;
        break;
      }
    if (pivot == n) return T(0);
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const T inv = inverse(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(a(r, col))) continue;
      const T factor = a(r, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return det;
}

/// Coefficients c[0..n] of det(t I - m) = sum c[k] t^k (Faddeev-LeVerrier).
template <class T>
std::vector<T> characteristic_polynomial(const Matrix<T>& m) {
  const std::size_t n = m.dim();
  std::vector<T> c(n + 1, T(0));
  c[n] = T(1);
  Matrix<T> mk(n, T(0));  // M_0 = 0
  const Matrix<T> id = identity_matrix<T>(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    const T tr = trace(m * mk);
    c[n - k] = -tr / T(static_cast<int>(k));
  }
  return c;
}

/// Leading principal minors det(m[0..k, 0..k]) for k = 1..n.
template <class T>
std::vector<T> leading_principal_minors(const Matrix<T>& m) {
  std::vector<T> minors;
  for (std::size_t k = 1; k <= m.dim(); ++k) {
    Matrix<T> sub(k, T(0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Inertia of a symmetric matrix, read off the characteristic polynomial with
/// Descartes' rule of signs. All roots are real, so the sign-change counts are
/// exact root counts.
Signature signature(const Matrix<Scalar>& symmetric);

bool is_symmetric(const Matrix<Scalar>& m);
bool is_positive_definite(const Matrix<Scalar>& symmetric);

}  // namespace apapr
