#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "apapr/connection.hpp"
#include "apapr/linalg.hpp"
#include "apapr/structure.hpp"
#include "apapr/structure_tensor.hpp"

namespace apapr {

/// (L_xi g)(x, y) = g(nabla_x xi, y) + g(x, nabla_y xi)
template <class T>
Matrix<T> lie_derivative_g(const ApaprModel<T>& m, const ConnectionTable<T>& conn) {
  const std::size_t d = m.dim();
  const Matrix<T> dxi = nabla_xi(m, conn);
  const Matrix<T> low = dxi * m.g;  // low(i, j) = g(nabla_{e_i} xi, e_j)
  Matrix<T> out(d, T(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) out(i, j) = low(i, j) + low(j, i);
  return out;
}

/// Exact projection onto span{g, g~, eta (x) eta}. `constants` are (a, b, c)
/// for the Einstein-like fit and (lambda, mu, nu) for the soliton fit.
template <class T>
struct FitResult {
  std::array<T, 3> constants{T(0), T(0), T(0)};
  Matrix<T> residual;
  bool exact = false;
};

template <class T>
std::array<Matrix<T>, 3> fit_basis(const ApaprModel<T>& m) {
  return {m.g, m.g_assoc, outer(m.eta, m.eta)};
}

/// Solves the 3x3 Gram system of the basis over the upper-triangular entries.
/// Throws ArithmeticError when the basis is rank-deficient (never for a valid
/// structure).
template <class T>
std::array<T, 3> project_onto_basis(const std::array<Matrix<T>, 3>& basis, const Matrix<T>& target) {
  const std::size_t d = target.dim();
  std::vector<std::vector<T>> rows(3);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) rows[a].push_back(basis[a](i, j));
  if (rank(rows) != 3) throw ArithmeticError("fit basis {g, g~, eta(x)eta} is rank-deficient");

  Matrix<T> gram(3, T(0));
  Vector<T> rhs(3, T(0));
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t e = 0; e < rows[a].size(); ++e) gram(a, b) += rows[a][e] * rows[b][e];
    std::size_t e = 0;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j, ++e) rhs(a) += rows[a][e] * target(i, j);
  }
  const Vector<T> x = solve(gram, rhs);
  return {x(0), x(1), x(2)};
}

/// rho = a g + b g~ + c eta (x) eta
template <class T>
FitResult<T> einstein_like_fit(const ApaprModel<T>& m, const Matrix<T>& rho) {
  const auto basis = fit_basis(m);
  FitResult<T> r;
  r.constants = project_onto_basis(basis, rho);
  r.residual = rho;
  for (std::size_t a = 0; a < 3; ++a) r.residual -= r.constants[a] * basis[a];
  r.exact = r.residual.is_zero();
  return r;
}

/// rho = -1/2 L_xi g - lambda g - mu g~ - nu eta (x) eta
template <class T>
FitResult<T> soliton_fit(const ApaprModel<T>& m, const Matrix<T>& lie_g, const Matrix<T>& rho) {
  const auto basis = fit_basis(m);
  const Matrix<T> shifted = rho + (T(1) / T(2)) * lie_g;  // = -(lambda g + mu g~ + nu eta eta)
  FitResult<T> r;
  r.constants = project_onto_basis(basis, -shifted);
  r.residual = shifted;
  for (std::size_t a = 0; a < 3; ++a) r.residual += r.constants[a] * basis[a];
  r.exact = r.residual.is_zero();
  return r;
}

/// Everything derived from one model, computed once.
template <class T>
struct Analysis {
  ApaprModel<T> model;
  ConnectionTable<T> conn;
  CurvatureData<T> curv;
  FData<T> fdata;
  ClassReport<T> classes;
  Matrix<T> lie_g;
  FitResult<T> einstein;
  FitResult<T> soliton;
  T div_xi{0};
};

template <class T>
Analysis<T> analyze(ApaprModel<T> model) {
  Analysis<T> a;
  a.model = std::move(model);
  a.conn = levi_civita(a.model);
  a.curv = curvature(a.model, a.conn);
  a.fdata = compute_F(a.model, a.conn);
  a.classes = classify(a.model, a.conn, a.fdata);
  a.lie_g = lie_derivative_g(a.model, a.conn);
  a.einstein = einstein_like_fit(a.model, a.curv.rho);
  a.soliton = soliton_fit(a.model, a.lie_g, a.curv.rho);
  a.div_xi = divergence_xi(a.model, a.conn);
  return a;
}

/// "Einstein" (b = c = 0), "eta-Einstein" (b = 0), "para-Einstein-like", or
/// "none" when the fit is not exact.
std::string einstein_kind(const FitResult<Scalar>& fit);
/// "shrinking Ricci soliton" / "steady ..." / "expanding ..." (mu = nu = 0),
/// "eta-Ricci soliton" (mu = 0), "para-Ricci-like soliton", or "none".
std::string soliton_kind(const FitResult<Scalar>& fit);

struct Relation {
  std::string relation;
  bool holds = false;
  std::string detail;
};

struct TheoremReport {
  char theorem = 'A';
  bool hypotheses_hold = false;
  std::vector<std::string> reasons;
  FitResult<Scalar> einstein;
  FitResult<Scalar> soliton;
  /// Einstein-like fit exact <=> soliton fit exact.
  bool equivalence_holds = false;
  std::vector<Relation> constant_relations;
  std::vector<Relation> sum_identities;
  std::vector<std::string> special_cases;
  std::vector<Relation> special_case_checks;
  std::optional<Scalar> f;  // theorem B only

  /// Vacuously true when the hypotheses fail.
  bool holds() const;
};

/// Para-Sasaki-like structures: soliton <=> Einstein-like with
/// a + lambda = 0, b + mu + 1 = 0, c + nu - 1 = 0. `rho_override` replaces the
/// Ricci tensor fed to both fits (used for injected-violation controls).
TheoremReport verify_theorem_A(const Analysis<Scalar>& a, const std::optional<Matrix<Scalar>>& rho_override = std::nullopt);

/// Torse-forming xi with f != 0: soliton <=> Einstein-like with
/// a + lambda + f = 0, b + mu = 0, c + nu - f = 0.
TheoremReport verify_theorem_B(const Analysis<Scalar>& a, const std::optional<Matrix<Scalar>>& rho_override = std::nullopt);

}  // namespace apapr
