#include "apapr/linalg.hpp"

namespace apapr {

namespace {

std::size_t sign_changes(const std::vector<Scalar>& coeffs) {
  std::size_t changes = 0;
  int last = 0;
  for (const Scalar& c : coeffs) {
    const int s = c.sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

Signature signature(const Matrix<Scalar>& symmetric) {
  const std::vector<Scalar> c = characteristic_polynomial(symmetric);
  Signature sig;
  while (sig.zero < c.size() && c[sig.zero].is_zero()) ++sig.zero;

  std::vector<Scalar> reflected = c;  // p(-t)
  for (std::size_t k = 1; k < reflected.size(); k += 2) reflected[k] = -reflected[k];
  sig.positive = sign_changes(c);
  sig.negative = sign_changes(reflected);
  return sig;
}

bool is_symmetric(const Matrix<Scalar>& m) {
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i + 1; j < m.dim(); ++j)
      if (m(i, j) != m(j, i)) return false;
  return true;
}

bool is_positive_definite(const Matrix<Scalar>& symmetric) {
  for (const Scalar& minor : leading_principal_minors(symmetric))
    if (minor.sign() <= 0) return false;
  return true;
}

}  // namespace apapr
