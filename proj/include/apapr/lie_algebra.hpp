#pragma once

#include <cstddef>
#include <string>

#include "apapr/tensor.hpp"
#include "apapr/validation.hpp"

namespace apapr {

/// Finite-dimensional real Lie algebra in a fixed frame e_0..e_{dim-1}:
/// [e_i, e_j] = c(i, j, k) e_k, summed over k.
template <class T>
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : c_(dim, T(0)) {}
  explicit LieAlgebra(Tensor3<T> structure_constants) : c_(std::move(structure_constants)) {}

  std::size_t dim() const { return c_.dim(); }

  const T& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  const Tensor3<T>& structure_constants() const { return c_; }

  /// Sets [e_i, e_j] = sum_k coeffs(k) e_k together with the antisymmetric partner.
  void set_bracket(std::size_t i, std::size_t j, const Vector<T>& coeffs) {
    for (std::size_t k = 0; k < dim(); ++k) {
      c_(i, j, k) = coeffs(k);
      c_(j, i, k) = -coeffs(k);
    }
  }

  /// Raw write of a single constant, no antisymmetric completion.
  void set_raw(std::size_t i, std::size_t j, std::size_t k, T value) { c_(i, j, k) = std::move(value); }

  Vector<T> bracket(const Vector<T>& x, const Vector<T>& y) const {
    if (x.dim() != dim() || y.dim() != dim())
      throw DimensionError("bracket: vector length does not match algebra dimension " +
                           std::to_string(dim()));
    Vector<T> out(dim(), T(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (is_zero(y(j))) continue;
        const T xy = x(i) * y(j);
        for (std::size_t k = 0; k < dim(); ++k) out(k) += xy * c_(i, j, k);
      }
    }
    return out;
  }

  Vector<T> bracket_basis(std::size_t i, std::size_t j) const {
    Vector<T> out(dim(), T(0));
    for (std::size_t k = 0; k < dim(); ++k) out(k) = c_(i, j, k);
    return out;
  }

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  Tensor3<T> c_;
};

/// Lists every antisymmetry violation (i < j) and every (i, j, k, l) where the
/// l-component of the cyclic Jacobi sum is nonzero. Dense O(dim^4) loops.
template <class T>
ValidationReport validate_lie(const LieAlgebra<T>& L) {
  ValidationReport report;
  const std::size_t n = L.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!is_zero(L.c(i, j, k) + L.c(j, i, k)))
          report.add("antisymmetry", {i, j, k},
                     "c^" + std::to_string(k) + "_" + std::to_string(i) + std::to_string(j) + " = " +
                         to_string(L.c(i, j, k)) + " but c^" + std::to_string(k) + "_" +
                         std::to_string(j) + std::to_string(i) + " = " + to_string(L.c(j, i, k)));

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          T sum(0);
          for (std::size_t m = 0; m < n; ++m)
            sum += L.c(i, j, m) * L.c(m, k, l) + L.c(j, k, m) * L.c(m, i, l) + L.c(k, i, m) * L.c(m, j, l);
          if (!is_zero(sum))
            report.add("jacobi", {i, j, k, l}, "cyclic sum component = " + to_string(sum));
        }
  return report;
}

/// Structure constants after the frame change e'_a = sum_i A(i, a) e_i.
template <class T>
LieAlgebra<T> change_frame(const LieAlgebra<T>& L, const Matrix<T>& A, const Matrix<T>& A_inv) {
  const std::size_t n = L.dim();
  Tensor3<T> c(n, T(0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vector<T> ea(n, T(0)), eb(n, T(0));
      for (std::size_t i = 0; i < n; ++i) {
        ea(i) = A(i, a);
        eb(i) = A(i, b);
      }
      const Vector<T> br = A_inv * L.bracket(ea, eb);
      for (std::size_t d = 0; d < n; ++d) c(a, b, d) = br(d);
    }
  return LieAlgebra<T>(std::move(c));
}

}  // namespace apapr
