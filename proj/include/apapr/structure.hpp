#pragma once

#include <cstddef>
#include <string>
#include <type_traits>

#include "apapr/lie_algebra.hpp"
#include "apapr/linalg.hpp"
#include "apapr/scalar.hpp"
#include "apapr/tensor.hpp"
#include "apapr/validation.hpp"

namespace apapr {

/// Left-invariant (phi, xi, eta, g) structure on a Lie algebra, all tensors in
/// frame components. phi acts on column vectors: (phi x)^i = phi(i, j) x^j.
/// eta is never supplied; it is derived as eta(x) = g(x, xi).
template <class T>
struct ApaprModel {
  std::string name;
  LieAlgebra<T> algebra;
  Matrix<T> phi;
  Vector<T> xi;
  Matrix<T> g;

  // Derived on construction.
  Vector<T> eta;
  Matrix<T> g_inv;
  Matrix<T> g_assoc;
  std::size_t n = 0;

  std::size_t dim() const { return algebra.dim(); }
};

/// g~(x, y) = g(x, phi y) + eta(x) eta(y)
template <class T>
Matrix<T> associated_metric(const Matrix<T>& g, const Matrix<T>& phi, const Vector<T>& eta) {
  return g * phi + outer(eta, eta);
}

template <class T>
ApaprModel<T> make_model(std::string name, LieAlgebra<T> algebra, Matrix<T> g, Matrix<T> phi, Vector<T> xi) {
  const std::size_t d = algebra.dim();
  if (d < 3 || d % 2 == 0)
    throw DimensionError("dimension must be 2n+1 with n >= 1, got " + std::to_string(d));
  if (g.dim() != d || phi.dim() != d || xi.dim() != d)
    throw DimensionError("structure tensors do not match algebra dimension " + std::to_string(d));
  ApaprModel<T> m;
  m.name = std::move(name);
  m.algebra = std::move(algebra);
  m.g = std::move(g);
  m.phi = std::move(phi);
  m.xi = std::move(xi);
  m.n = (d - 1) / 2;
  m.eta = m.g * m.xi;
  m.g_inv = inverse(m.g);
  m.g_assoc = associated_metric(m.g, m.phi, m.eta);
  return m;
}

/// Same geometric structure described in the frame e'_a = sum_i A(i, a) e_i.
template <class T>
ApaprModel<T> change_frame(const ApaprModel<T>& m, const Matrix<T>& A) {
  const Matrix<T> A_inv = inverse(A);
  return make_model(m.name, change_frame(m.algebra, A, A_inv), transpose(A) * m.g * A,
                    A_inv * m.phi * A, A_inv * m.xi);
}

/// Entrywise exact check of the six structure axioms plus the derived
/// identities g(phi x, y) = g(x, phi y) and g(xi, xi) = 1. Each failing axiom
/// is reported once, with its first failing index pair.
template <class T>
ValidationReport validate_apapr(const ApaprModel<T>& m) {
  ValidationReport report;
  const std::size_t d = m.dim();
  const Matrix<T> phi2 = m.phi * m.phi;
  const Vector<T> phi_xi = m.phi * m.xi;

  auto first_nonzero_vec = [&](const char* check, const Vector<T>& v, const std::string& what) {
    for (std::size_t i = 0; i < d; ++i)
      if (!is_zero(v(i))) {
        report.add(check, {i}, what + " component " + std::to_string(i) + " = " + to_string(v(i)));
        return;
      }
  };
  auto first_mismatch = [&](const char* check, auto&& lhs, auto&& rhs) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const T l = lhs(i, j);
        const T r = rhs(i, j);
        if (!is_zero(l - r)) {
          report.add(check, {i, j}, "lhs = " + to_string(l) + ", rhs = " + to_string(r));
          return;
        }
      }
  };

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (!is_zero(m.g(i, j) - m.g(j, i))) {
        report.add("metric_symmetric", {i, j}, "g is not symmetric");
        i = d;
        break;
      }
  if constexpr (std::is_same_v<T, Scalar>) {
    if (!report.has("metric_symmetric") && !is_positive_definite(m.g))
      report.add("metric_positive_definite", {}, "g has a nonpositive leading principal minor");
  }

  first_nonzero_vec("phi_xi", phi_xi, "phi xi");
  first_mismatch("phi_squared", [&](std::size_t i, std::size_t j) { return phi2(i, j); },
                 [&](std::size_t i, std::size_t j) { return T(i == j ? 1 : 0) - m.xi(i) * m.eta(j); });
  {
    Vector<T> eta_phi(d, T(0));  // (eta o phi)_j = eta_i phi(i, j)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) eta_phi(j) += m.eta(i) * m.phi(i, j);
    first_nonzero_vec("eta_phi", eta_phi, "eta o phi");
  }
  {
    const T eta_xi = dot(m.eta, m.xi);
    if (!is_zero(eta_xi - T(1))) report.add("eta_xi", {}, "eta(xi) = " + to_string(eta_xi));
  }
  {
    const T tr = trace(m.phi);
    if (!is_zero(tr)) report.add("trace_phi", {}, "tr phi = " + to_string(tr));
  }
  {
    const Matrix<T> lhs = transpose(m.phi) * m.g * m.phi;
    first_mismatch("g_phi_compatible", [&](std::size_t i, std::size_t j) { return lhs(i, j); },
                   [&](std::size_t i, std::size_t j) { return m.g(i, j) - m.eta(i) * m.eta(j); });
  }
  {
    const Matrix<T> gphi = m.g * m.phi;  // g(e_i, phi e_j)
    first_mismatch("phi_g_symmetric", [&](std::size_t i, std::size_t j) { return gphi(j, i); },
                   [&](std::size_t i, std::size_t j) { return gphi(i, j); });
  }
  {
    const T xx = bilinear(m.g, m.xi, m.xi);
    if (!is_zero(xx - T(1))) report.add("xi_unit", {}, "g(xi, xi) = " + to_string(xx));
  }
  return report;
}

/// Inertia of g~; (n+1, n) on every valid structure.
Signature associated_signature(const ApaprModel<Scalar>& m);

/// validate_apapr plus the g~ signature check.
ValidationReport validate_structure(const ApaprModel<Scalar>& m);

}  // namespace apapr
