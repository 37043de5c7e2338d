#include "support/fuzz.hpp"

namespace apapr::testing {

Scalar random_rational(Rng& rng, int k) {
  std::uniform_int_distribution<int> num(-k, k);
  std::uniform_int_distribution<int> den(1, 3);
  return Scalar(num(rng), den(rng));
}

Matrix<Scalar> random_frame(Rng& rng, std::size_t dim) {
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    Matrix<Scalar> A(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) A(i, j) = Scalar(entry(rng));
    if (!determinant(A).is_zero()) return A;
  }
}

ApaprModel<Scalar> standard_structure(const std::string& name, const LieAlgebra<Scalar>& algebra) {
  const std::size_t d = algebra.dim();
  const std::size_t n = (d - 1) / 2;
  Matrix<Scalar> phi(d);
  for (std::size_t i = 1; i <= n; ++i) {
    phi(i, i + n) = 1;
    phi(i + n, i) = 1;
  }
  return make_model(name, algebra, identity_matrix<Scalar>(d), phi, basis_vector<Scalar>(d, 0));
}

LieAlgebra<Scalar> semidirect(const Matrix<Scalar>& D) {
  const std::size_t d = D.dim() + 1;
  LieAlgebra<Scalar> L(d);
  for (std::size_t i = 0; i < D.dim(); ++i) {
    Vector<Scalar> v(d);
    for (std::size_t k = 0; k < D.dim(); ++k) v(k + 1) = D(k, i);
    L.set_bracket(0, i + 1, v);
  }
  return L;
}

Matrix<Scalar> torse_forming_derivation(Rng& rng, std::size_t n, const Scalar& p) {
  const std::size_t m = 2 * n;
  Matrix<Scalar> D(m);
  for (std::size_t i = 0; i < m; ++i) {
    D(i, i) = p;
    for (std::size_t j = i + 1; j < m; ++j) {
      const Scalar k = random_rational(rng, 2);
      D(i, j) = k;
      D(j, i) = -k;
    }
  }
  return D;
}

ApaprModel<Scalar> random_builtin(Rng& rng, const std::string& name) {
  const ModelSpec spec = parse_model_spec(builtin_model_json(name));
  Binding b;
  for (const std::string& p : spec.parameters) {
    Scalar v = random_rational(rng);
    while (v.is_zero()) v = random_rational(rng);
    b[p] = v;
  }
  return load_model(spec, b);
}

namespace {

LieAlgebra<Scalar> random_semidirect(Rng& rng, std::size_t n) {
  Matrix<Scalar> D(2 * n);
  for (std::size_t i = 0; i < 2 * n; ++i)
    for (std::size_t j = 0; j < 2 * n; ++j) D(i, j) = random_rational(rng, 2);
  return semidirect(D);
}

LieAlgebra<Scalar> heisenberg(std::size_t n) {
  // [e_i, e_{i+n}] = e_0
  const std::size_t d = 2 * n + 1;
  LieAlgebra<Scalar> L(d);
  for (std::size_t i = 1; i <= n; ++i) L.set_bracket(i, i + n, basis_vector<Scalar>(d, 0));
  return L;
}

LieAlgebra<Scalar> sl2() {
  LieAlgebra<Scalar> L(3);
  L.set_bracket(0, 1, basis_vector<Scalar>(3, 1));
  L.set_bracket(0, 2, -basis_vector<Scalar>(3, 2));
  L.set_bracket(1, 2, basis_vector<Scalar>(3, 0));
  return L;
}

LieAlgebra<Scalar> so3_plus_abelian(std::size_t d) {
  LieAlgebra<Scalar> L(d);
  L.set_bracket(0, 1, basis_vector<Scalar>(d, 2));
  L.set_bracket(1, 2, basis_vector<Scalar>(d, 0));
  L.set_bracket(2, 0, basis_vector<Scalar>(d, 1));
  return L;
}

/// Moves the structure to a random frame; the frame is fixed again only by
/// the algebra relabelling, so both the brackets and the tensors change.
ApaprModel<Scalar> scramble(Rng& rng, const ApaprModel<Scalar>& m) {
  return change_frame(m, random_frame(rng, m.dim()));
}

}  // namespace

std::vector<FuzzCase> fuzz_corpus(std::size_t count, unsigned seed) {
  Rng rng(seed);
  std::vector<FuzzCase> out;
  out.reserve(count);
  std::uniform_int_distribution<int> pick_n(1, 2);
  for (std::size_t idx = 0; out.size() < count; ++idx) {
    const std::size_t n = static_cast<std::size_t>(pick_n(rng));
    const std::string tag = "#" + std::to_string(idx);
    ApaprModel<Scalar> m;
    std::string label;
    switch (idx % 7) {
      case 0:
        label = "semidirect";
        m = standard_structure(label, random_semidirect(rng, n));
        break;
      case 1: {
        label = "torse-forming";
        Scalar p = random_rational(rng);
        while (p.is_zero()) p = random_rational(rng);
        m = standard_structure(label, semidirect(torse_forming_derivation(rng, n, p)));
        break;
      }
      case 2:
        label = "heisenberg";
        m = standard_structure(label, heisenberg(n));
        break;
      case 3:
        label = n == 1 ? "sl2" : "so3+R2";
        m = standard_structure(label, n == 1 ? sl2() : so3_plus_abelian(5));
        break;
      case 4:
        label = "example1";
        m = random_builtin(rng, label);
        break;
      case 5:
        label = "example2";
        m = random_builtin(rng, label);
        break;
      default:
        label = "semidirect-unscrambled";
        m = standard_structure(label, random_semidirect(rng, n));
        out.push_back({label + tag, m});
        continue;
    }
    out.push_back({label + tag, scramble(rng, m)});
  }
  return out;
}

std::vector<std::vector<Vector<Scalar>>> koszul_oracle(const ApaprModel<Scalar>& m) {
  const std::size_t d = m.dim();
  std::vector<Vector<Scalar>> e;
  for (std::size_t i = 0; i < d; ++i) e.push_back(basis_vector<Scalar>(d, i));
  auto g = [&](const Vector<Scalar>& x, const Vector<Scalar>& y) { return bilinear(m.g, x, y); };
  std::vector<std::vector<Vector<Scalar>>> out(d, std::vector<Vector<Scalar>>(d, Vector<Scalar>(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector<Scalar> low(d);
      for (std::size_t l = 0; l < d; ++l)
        low(l) = Scalar(1, 2) * (g(m.algebra.bracket(e[i], e[j]), e[l]) - g(m.algebra.bracket(e[j], e[l]), e[i]) +
                                 g(m.algebra.bracket(e[l], e[i]), e[j]));
      out[i][j] = m.g_inv * low;
    }
  return out;
}

Matrix<Scalar> ricci_trace_oracle(const Tensor4<Scalar>& op) {
  const std::size_t d = op.dim();
  Matrix<Scalar> rho(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) rho(j, k) += op(i, j, k, i);
  return rho;
}

std::vector<Scalar> lagrange_coefficients(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  const std::size_t n = xs.size();
  std::vector<Scalar> coeffs(n, Scalar(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Scalar> basis{Scalar(1)};  // prod_{j != i} (x - x_j) / (x_i - x_j)
    Scalar denom(1);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      std::vector<Scalar> next(basis.size() + 1, Scalar(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = std::move(next);
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < n; ++k) coeffs[k] += ys[i] * basis[k] / denom;
  }
  return coeffs;
}

}  // namespace apapr::testing
