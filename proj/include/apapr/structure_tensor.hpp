#pragma once

#include <cstddef>
#include <optional>

#include "apapr/connection.hpp"
#include "apapr/structure.hpp"
#include "apapr/tensor.hpp"

namespace apapr {

/// Fundamental tensor F(x, y, z) = g((nabla_x phi) y, z) and its Lee forms
///   theta  = g^{ij} F(e_i, e_j, .)
///   theta* = g^{ij} F(e_i, phi e_j, .)
///   omega  = F(xi, xi, .)
template <class T>
struct FData {
  Tensor3<T> F;
  Vector<T> theta;
  Vector<T> theta_star;
  Vector<T> omega;
};

template <class T>
FData<T> compute_F(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  const std::size_t d = m.dim();
  const Tensor3<T> dphi = nabla_phi(m, conn);
  FData<T> out{Tensor3<T>(d, T(0)), Vector<T>(d, T(0)), Vector<T>(d, T(0)), Vector<T>(d, T(0))};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t q = 0; q < d; ++q) {
        if (is_zero(dphi(i, j, q))) continue;
        for (std::size_t k = 0; k < d; ++k) out.F(i, j, k) += dphi(i, j, q) * m.g(q, k);
      }

  const Matrix<T> inv_phiT = m.g_inv * transpose(m.phi);  // sum_j g^{ij} phi^q_j
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        out.theta(k) += m.g_inv(i, j) * out.F(i, j, k);
        out.theta_star(k) += inv_phiT(i, j) * out.F(i, j, k);
        out.omega(k) += m.xi(i) * m.xi(j) * out.F(i, j, k);
      }
  return out;
}

/// (nabla_x phi) y == -g(phi x, phi y) xi - eta(y) phi^2 x on all frame pairs.
template <class T>
bool is_para_sasaki_like(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  const std::size_t d = m.dim();
  const Tensor3<T> dphi = nabla_phi(m, conn);
  const Matrix<T> gphiphi = transpose(m.phi) * m.g * m.phi;
  const Matrix<T> phi2 = m.phi * m.phi;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const T rhs = -gphiphi(i, j) * m.xi(k) - m.eta(j) * phi2(k, i);
        if (!is_zero(dphi(i, j, k) - rhs)) return false;
      }
  return true;
}

/// Torse-forming Reeb field: nabla_x xi = f phi^2 x for one constant f.
template <class T>
struct TorseForming {
  T f;
  bool trivial;  // f == 0
};

template <class T>
std::optional<TorseForming<T>> torse_forming_fit(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  const std::size_t d = m.dim();
  const Matrix<T> dxi = nabla_xi(m, conn);
  const Matrix<T> phi2 = m.phi * m.phi;  // column i is phi^2 e_i
  std::optional<T> f;
  for (std::size_t i = 0; i < d && !f; ++i)
    for (std::size_t k = 0; k < d && !f; ++k)
      if (!is_zero(phi2(k, i))) f = dxi(i, k) / phi2(k, i);
  if (!f) return std::nullopt;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      if (!is_zero(dxi(i, k) - *f * phi2(k, i))) return std::nullopt;
  const bool trivial = is_zero(*f);
  return TorseForming<T>{std::move(*f), trivial};
}

/// (nabla_x phi) y == -f {g(x, phi y) xi + eta(y) phi x} on all frame pairs.
template <class T>
bool is_F5_form(const ApaprModel<T>& m, const ConnectionTable<T>& conn, const T& f) {
  const std::size_t d = m.dim();
  const Tensor3<T> dphi = nabla_phi(m, conn);
  const Matrix<T> gphi = m.g * m.phi;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const T rhs = -f * (gphi(i, j) * m.xi(k) + m.eta(j) * m.phi(k, i));
        if (!is_zero(dphi(i, j, k) - rhs)) return false;
      }
  return true;
}

template <class T>
struct LeeSignature {
  T theta_xi;
  T theta_star_xi;
  Vector<T> omega;
};

template <class T>
struct ClassReport {
  bool is_F0 = false;
  bool is_para_sasaki_like = false;
  std::optional<TorseForming<T>> torse_forming;
  bool is_F5_form = false;
  LeeSignature<T> lee;
};

template <class T>
ClassReport<T> classify(const ApaprModel<T>& m, const ConnectionTable<T>& conn, const FData<T>& fd) {
  ClassReport<T> r;
  r.is_F0 = fd.F.is_zero();
  r.is_para_sasaki_like = is_para_sasaki_like(m, conn);
  r.torse_forming = torse_forming_fit(m, conn);
  r.is_F5_form = r.torse_forming && is_F5_form(m, conn, r.torse_forming->f);
  r.lee = {dot(fd.theta, m.xi), dot(fd.theta_star, m.xi), fd.omega};
  return r;
}

}  // namespace apapr
