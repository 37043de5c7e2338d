#pragma once

// Levi-Civita connection and curvature of a left-invariant metric.
//
// Everything here is frame-algebraic: all tensors are constant in the
// left-invariant frame, so the directional-derivative part of any covariant
// derivative vanishes and only the connection-coefficient terms remain. This
// is the one assumption that lets a Lie algebra stand in for the group.
//
// Conventions:
//   nabla_{e_i} e_j = gamma(i, j, k) e_k
//   R(x, y)z = nabla_x nabla_y z - nabla_y nabla_x z - nabla_{[x,y]} z
//   R(i, j, k, l) = g(R(e_i, e_j) e_k, e_l)
//   rho(y, z) = trace of x -> R(x, y)z = g^{il} R(i, y, z, l)
// With these, the 5-dimensional para-Sasaki-like example gives
// R(0,1,1,0) = -1 and rho(0,0) = -4.

#include <cstddef>

#include "apapr/error.hpp"
#include "apapr/linalg.hpp"
#include "apapr/structure.hpp"
#include "apapr/tensor.hpp"

namespace apapr {

template <class T>
struct ConnectionTable {
  Tensor3<T> gamma;    // gamma(i, j, k) = Gamma^k_{ij}
  Tensor3<T> lowered;  // lowered(i, j, l) = g(nabla_{e_i} e_j, e_l)

  std::size_t dim() const { return gamma.dim(); }
};

template <class T>
struct CurvatureData {
  Tensor4<T> op;  // op(i, j, k, l) = l-th component of R(e_i, e_j) e_k
  Tensor4<T> R;   // R(i, j, k, l) = g(R(e_i, e_j) e_k, e_l)
  Matrix<T> rho;
  T tau{0};
};

/// Koszul formula for left-invariant fields:
///   2 g(nabla_x y, z) = g([x,y], z) - g([y,z], x) + g([z,x], y)
template <class T>
ConnectionTable<T> levi_civita(const ApaprModel<T>& m) {
  const std::size_t d = m.dim();
  const auto& L = m.algebra;
  Tensor3<T> cl(d, T(0));  // g([e_i, e_j], e_l)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        if (is_zero(L.c(i, j, k))) continue;
        for (std::size_t l = 0; l < d; ++l) cl(i, j, l) += L.c(i, j, k) * m.g(k, l);
      }

  ConnectionTable<T> conn{Tensor3<T>(d, T(0)), Tensor3<T>(d, T(0))};
  const T half = T(1) / T(2);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        conn.lowered(i, j, l) = half * (cl(i, j, l) - cl(j, l, i) + cl(l, i, j));

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        if (is_zero(conn.lowered(i, j, l))) continue;
        for (std::size_t k = 0; k < d; ++k) conn.gamma(i, j, k) += conn.lowered(i, j, l) * m.g_inv(l, k);
      }
  return conn;
}

/// nabla_x y for left-invariant x, y given by frame components.
template <class T>
Vector<T> covariant_derivative(const ConnectionTable<T>& conn, const Vector<T>& x, const Vector<T>& y) {
  const std::size_t d = conn.dim();
  Vector<T> out(d, T(0));
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(x(i))) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(y(j))) continue;
      const T w = x(i) * y(j);
      for (std::size_t k = 0; k < d; ++k) out(k) += w * conn.gamma(i, j, k);
    }
  }
  return out;
}

template <class T>
CurvatureData<T> curvature(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  const std::size_t d = m.dim();
  const auto& G = conn.gamma;
  const auto& L = m.algebra;
  CurvatureData<T> cd{Tensor4<T>(d, T(0)), Tensor4<T>(d, T(0)), Matrix<T>(d, T(0)), T(0)};

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          T s(0);
          for (std::size_t q = 0; q < d; ++q) {
            if (!is_zero(G(j, k, q))) s += G(j, k, q) * G(i, q, l);
            if (!is_zero(G(i, k, q))) s -= G(i, k, q) * G(j, q, l);
            if (!is_zero(L.c(i, j, q))) s -= L.c(i, j, q) * G(q, k, l);
          }
          cd.op(i, j, k, l) = std::move(s);
        }

  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t q = 0; q < d; ++q) {
          if (is_zero(cd.op(i, j, k, q))) continue;
          for (std::size_t l = 0; l < d; ++l) cd.R(i, j, k, l) += cd.op(i, j, k, q) * m.g(q, l);
        }

  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      T s(0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t l = 0; l < d; ++l)
          if (!is_zero(m.g_inv(i, l))) s += m.g_inv(i, l) * cd.R(i, j, k, l);
      cd.rho(j, k) = std::move(s);
    }

  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) cd.tau += m.g_inv(j, k) * cd.rho(j, k);
  return cd;
}

/// Covariant derivative of a frame-constant (0,Rank) tensor:
///   (nabla_{e_i} T)(e_{j1}, ..., e_{jR}) = - sum_s sum_m Gamma^m_{i js} T(..., e_m, ...)
/// The result has rank Rank+1 with the derivative direction first.
template <class T, std::size_t Rank>
Tensor<T, Rank + 1> nabla_tensor(const ConnectionTable<T>& conn, const Tensor<T, Rank>& t) {
  static_assert(Rank >= 1 && Rank <= 3, "nabla_tensor supports covariant rank 1 to 3");
  const std::size_t d = conn.dim();
  if (t.dim() != d) throw DimensionError("nabla_tensor: tensor dimension mismatch");
  Tensor<T, Rank + 1> out(d, T(0));
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    const auto idx = out.unflatten(pos);  // idx[0] = direction
    T s(0);
    for (std::size_t slot = 0; slot < Rank; ++slot) {
      std::array<std::size_t, Rank> sub{};
      for (std::size_t r = 0; r < Rank; ++r) sub[r] = idx[r + 1];
      for (std::size_t q = 0; q < d; ++q) {
        const T& gam = conn.gamma(idx[0], idx[slot + 1], q);
        if (is_zero(gam)) continue;
        sub[slot] = q;
        s -= gam * t.at(sub);
      }
    }
    out.flat(pos) = std::move(s);
  }
  return out;
}

/// nabla_xi(i, k) = k-th component of nabla_{e_i} xi.
template <class T>
Matrix<T> nabla_xi(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  const std::size_t d = m.dim();
  Matrix<T> out(d, T(0));
  for (std::size_t i = 0; i < d; ++i) {
    const Vector<T> v = covariant_derivative(conn, basis_vector<T>(d, i), m.xi);
    for (std::size_t k = 0; k < d; ++k) out(i, k) = v(k);
  }
  return out;
}

/// nabla_eta(i, j) = (nabla_{e_i} eta)(e_j).
template <class T>
Matrix<T> nabla_eta(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  return nabla_tensor(conn, m.eta);
}

/// nabla_phi(i, j, k) = k-th component of (nabla_{e_i} phi) e_j
///                    = nabla_{e_i}(phi e_j) - phi(nabla_{e_i} e_j).
template <class T>
Tensor3<T> nabla_phi(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  const std::size_t d = m.dim();
  Tensor3<T> out(d, T(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        T s(0);
        for (std::size_t q = 0; q < d; ++q) {
          s += m.phi(q, j) * conn.gamma(i, q, k);
          s -= m.phi(k, q) * conn.gamma(i, j, q);
        }
        out(i, j, k) = std::move(s);
      }
  return out;
}

/// Div xi = trace of x -> nabla_x xi.
template <class T>
T divergence_xi(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  return trace(nabla_xi(m, conn));
}

enum class MetricChoice { g, associated };

/// g~^{ij} = phi^j_k g^{ik} + xi^i xi^j
template <class T>
Matrix<T> associated_inverse(const ApaprModel<T>& m) {
  return m.g_inv * transpose(m.phi) + outer(m.xi, m.xi);
}

/// (Div T)(z) = m^{ij} (nabla_{e_i} T)(e_j, z), m = g^{-1} or the g~ inverse.
template <class T>
Vector<T> divergence(const ApaprModel<T>& m, const ConnectionTable<T>& conn, const Matrix<T>& t,
                     MetricChoice choice) {
  const Matrix<T> inv = choice == MetricChoice::g ? m.g_inv : associated_inverse(m);
  const Tensor3<T> nt = nabla_tensor(conn, t);
  const std::size_t d = m.dim();
  Vector<T> out(d, T(0));
  for (std::size_t z = 0; z < d; ++z)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (!is_zero(inv(i, j))) out(z) += inv(i, j) * nt(i, j, z);
  return out;
}

/// R(x, y, z, w) for arbitrary vectors.
template <class T>
T curvature_form(const Tensor4<T>& R, const Vector<T>& x, const Vector<T>& y, const Vector<T>& z,
                 const Vector<T>& w) {
  const std::size_t d = R.dim();
  T s(0);
  for (std::size_t a = 0; a < d; ++a) {
    if (is_zero(x(a))) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (is_zero(y(b))) continue;
      for (std::size_t c = 0; c < d; ++c) {
        if (is_zero(z(c))) continue;
        const T xyz = x(a) * y(b) * z(c);
        for (std::size_t e = 0; e < d; ++e)
          if (!is_zero(w(e))) s += xyz * R(a, b, c, e) * w(e);
      }
    }
  }
  return s;
}

/// Sectional curvature of span{x, xi}:
///   k = R(x, xi, xi, x) / (g(x,x) g(xi,xi) - g(x,xi)^2)
/// Throws ArithmeticError when the plane is degenerate.
template <class T>
T xi_sectional_curvature(const ApaprModel<T>& m, const Tensor4<T>& R, const Vector<T>& x) {
  if (x.dim() != m.dim()) throw DimensionError("xi_sectional_curvature: vector length mismatch");
  const T gxx = bilinear(m.g, x, x);
  const T gxxi = bilinear(m.g, x, m.xi);
  const T den = gxx * bilinear(m.g, m.xi, m.xi) - gxxi * gxxi;
  if (is_zero(den)) throw ArithmeticError("degenerate plane: x is parallel to xi");
  return curvature_form(R, x, m.xi, m.xi, x) / den;
}

}  // namespace apapr
