#include <doctest.h>

#include "apapr/connection.hpp"
#include "apapr/model.hpp"
#include "support/fuzz.hpp"

using namespace apapr;

namespace {

ApaprModel<Scalar> example1(const Scalar& p, const Scalar& q) {
  return load_model(builtin_model_json("example1"), {{"p", p}, {"q", q}});
}
ApaprModel<Scalar> example2(const Scalar& p) { return load_model(builtin_model_json("example2"), {{"p", p}}); }

Vector<Scalar> e(std::size_t d, std::size_t i) { return basis_vector<Scalar>(d, i); }

ApaprModel<Scalar> abelian3() {
  Matrix<Scalar> phi(3);
  phi(1, 2) = phi(2, 1) = 1;
  return make_model("abelian", LieAlgebra<Scalar>(3), identity_matrix<Scalar>(3), phi, e(3, 0));
}

}  // namespace

TEST_CASE("Levi-Civita connection of the examples") {
  const auto m1 = example1(1, 2);
  const auto c1 = levi_civita(m1);
  CHECK(covariant_derivative(c1, e(5, 1), e(5, 0)) == e(5, 3));
  CHECK(covariant_derivative(c1, e(5, 1), e(5, 0)) == m1.phi * e(5, 1));

  const auto m2 = example2(1);
  const auto c2 = levi_civita(m2);
  CHECK(covariant_derivative(c2, e(3, 1), e(3, 0)) == -e(3, 1));
  CHECK(covariant_derivative(levi_civita(example2(3)), e(3, 2), e(3, 0)) == Scalar(-3) * e(3, 2));

  CHECK(levi_civita(abelian3()).gamma.is_zero());
}

TEST_CASE("Koszul table agrees with the bracket-level oracle") {
  for (const auto& m : {example1(1, 2), example1(Scalar(-1, 3), 5), example2(Scalar(2, 7))}) {
    const auto conn = levi_civita(m);
    const auto oracle = testing::koszul_oracle(m);
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) CHECK(covariant_derivative(conn, e(m.dim(), i), e(m.dim(), j)) == oracle[i][j]);
  }
}

TEST_CASE("curvature of the 5-dimensional example") {
  for (const auto& [p, q] : {std::pair<Scalar, Scalar>{1, 2}, {0, 0}, {Scalar(-3, 2), 4}}) {
    const auto m = example1(p, q);
    const auto curv = curvature(m, levi_civita(m));
    CHECK(curv.R(0, 1, 1, 0) == Scalar(-1));
    CHECK(curv.R(0, 4, 4, 0) == Scalar(-1));
    CHECK(curv.R(1, 2, 3, 4) == Scalar(1));
    CHECK(curv.R(1, 3, 3, 1) == Scalar(1));
    CHECK(curv.R(1, 3, 1, 3) == Scalar(-1));
    Matrix<Scalar> rho(5);
    rho(0, 0) = -4;
    CHECK(curv.rho == rho);
    CHECK(curv.tau == Scalar(-4));
  }
}

TEST_CASE("curvature of the 3-dimensional example and the flat case") {
  const auto m = example2(1);
  const auto curv = curvature(m, levi_civita(m));
  CHECK(curv.rho == Scalar(-2) * m.g);
  CHECK(curv.tau == Scalar(-6));

  const auto flat = abelian3();
  const auto cf = curvature(flat, levi_civita(flat));
  CHECK(cf.R.is_zero());
  CHECK(cf.rho.is_zero());
  CHECK(cf.tau.is_zero());
}

TEST_CASE("covariant derivatives of tensors") {
  const auto m1 = example1(1, 2);
  const auto n1 = nabla_eta(m1, levi_civita(m1));
  CHECK(n1(1, 3) == Scalar(1));
  CHECK(n1(1, 3) == bilinear(m1.g, e(5, 1), m1.phi * e(5, 3)));

  const auto m2 = example2(1);
  const auto n2 = nabla_eta(m2, levi_civita(m2));
  CHECK(n2(1, 1) == Scalar(-1));

  for (const auto& m : {m1, m2}) {
    const auto ne = nabla_eta(m, levi_civita(m));
    CHECK((ne * m.xi).is_zero());
  }
  // nabla g = 0 through the generic rank-2 path
  for (const auto& m : {m1, m2}) CHECK(nabla_tensor(levi_civita(m), m.g).is_zero());
}

TEST_CASE("divergences") {
  const auto m1 = example1(1, 2);
  const auto c1 = levi_civita(m1);
  const auto rho1 = curvature(m1, c1).rho;
  CHECK(dot(divergence(m1, c1, rho1, MetricChoice::g), m1.xi) == Scalar(0));
  CHECK(dot(divergence(m1, c1, rho1, MetricChoice::associated), m1.xi) == Scalar(-16));

  const auto m2 = example2(1);
  const auto c2 = levi_civita(m2);
  CHECK(divergence_xi(m2, c2) == Scalar(-2));
  CHECK(divergence_xi(example2(Scalar(5, 3)), levi_civita(example2(Scalar(5, 3)))) == Scalar(-10, 3));

  const auto flat = abelian3();
  CHECK(divergence(flat, levi_civita(flat), Matrix<Scalar>(3), MetricChoice::g).is_zero());
}

TEST_CASE("xi-sectional curvature") {
  const auto m2 = example2(1);
  const auto R2 = curvature(m2, levi_civita(m2)).R;
  CHECK(xi_sectional_curvature(m2, R2, e(3, 1)) == Scalar(-1));

  const auto m1 = example1(1, 2);
  CHECK(xi_sectional_curvature(m1, curvature(m1, levi_civita(m1)).R, e(5, 1)) == Scalar(-1));

  const auto m3 = example2(2);
  const auto R3 = curvature(m3, levi_civita(m3)).R;
  CHECK(xi_sectional_curvature(m3, R3, e(3, 2)) == Scalar(-4));
  Vector<Scalar> mixed = e(3, 1) + Scalar(3) * e(3, 2) + Scalar(5) * e(3, 0);
  CHECK(xi_sectional_curvature(m3, R3, mixed) == Scalar(-4));
  CHECK_THROWS_AS(xi_sectional_curvature(m3, R3, Scalar(2) * m3.xi), ArithmeticError);
}

TEST_CASE("Ricci tensor matches the trace oracle under frame changes") {
  testing::Rng rng(21);
  const auto base = example1(2, 1);
  const auto tau = curvature(base, levi_civita(base)).tau;
  for (int trial = 0; trial < 5; ++trial) {
    const auto A = testing::random_frame(rng, 5);
    const auto m = change_frame(base, A);
    const auto curv = curvature(m, levi_civita(m));
    CHECK(curv.rho == testing::ricci_trace_oracle(curv.op));
    CHECK(curv.rho == transpose(A) * curvature(base, levi_civita(base)).rho * A);
    CHECK(curv.tau == tau);
  }
}
