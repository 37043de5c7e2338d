#include <doctest.h>

#include "apapr/connection.hpp"
#include "apapr/model.hpp"
#include "apapr/structure.hpp"
#include "support/fuzz.hpp"

using namespace apapr;

namespace {

ApaprModel<Scalar> example1(const Scalar& p, const Scalar& q) {
  return load_model(builtin_model_json("example1"), {{"p", p}, {"q", q}});
}
ApaprModel<Scalar> example2(const Scalar& p) { return load_model(builtin_model_json("example2"), {{"p", p}}); }

Matrix<Scalar> sparse(std::size_t d, std::initializer_list<std::tuple<int, int, int>> entries) {
  Matrix<Scalar> m(d);
  for (const auto& [i, j, v] : entries) m(i, j) = Scalar(v);
  return m;
}

}  // namespace

TEST_CASE("built-in structures pass every axiom") {
  CHECK(validate_structure(example1(1, 2)).ok());
  CHECK(validate_structure(example1(Scalar(-2, 3), 0)).ok());
  CHECK(validate_structure(example2(1)).ok());
  CHECK(validate_structure(example2(Scalar(7, 5))).ok());
}

TEST_CASE("associated metric") {
  const auto m1 = example1(1, 2);
  CHECK(m1.g_assoc == sparse(5, {{0, 0, 1}, {1, 3, 1}, {3, 1, 1}, {2, 4, 1}, {4, 2, 1}}));
  CHECK(associated_signature(m1) == Signature{3, 2, 0});

  const auto m2 = example2(1);
  CHECK(m2.g_assoc == sparse(3, {{0, 0, 1}, {1, 2, 1}, {2, 1, 1}}));
  CHECK(associated_signature(m2) == Signature{2, 1, 0});
  CHECK(bilinear(m2.g_assoc, m2.xi, m2.xi) == Scalar(1));
}

TEST_CASE("phi replaced by the identity") {
  auto m = example1(1, 2);
  m = make_model("broken", m.algebra, m.g, identity_matrix<Scalar>(5), m.xi);
  const ValidationReport r = validate_apapr(m);
  CHECK(r.has("trace_phi"));
  CHECK(r.has("phi_squared"));
  CHECK(r.has("phi_xi"));
  CHECK_FALSE(r.has("metric_symmetric"));
}

TEST_CASE("each axiom has a failing witness") {
  const auto base = example2(1);
  SUBCASE("xi not unit") {
    Vector<Scalar> xi = base.xi;
    xi(0) = 2;
    const auto r = validate_apapr(make_model("x", base.algebra, base.g, base.phi, xi));
    CHECK(r.has("eta_xi"));
    CHECK(r.has("xi_unit"));
  }
  SUBCASE("phi not compatible") {
    const auto r = validate_apapr(make_model("x", base.algebra, base.g, sparse(3, {{1, 2, 2}, {2, 1, 1}}), base.xi));
    CHECK(r.has("phi_squared"));
    CHECK(r.has("g_phi_compatible"));
    CHECK(r.has("phi_g_symmetric"));
  }
  SUBCASE("indefinite metric") {
    const auto r = validate_apapr(make_model("x", base.algebra, sparse(3, {{0, 0, 1}, {1, 1, 1}, {2, 2, -1}}), base.phi, base.xi));
    CHECK(r.has("metric_positive_definite"));
  }
  SUBCASE("dimension") {
    CHECK_THROWS_AS(make_model("x", LieAlgebra<Scalar>(4), identity_matrix<Scalar>(4), Matrix<Scalar>(4),
                               basis_vector<Scalar>(4, 0)),
                    DimensionError);
  }
}

TEST_CASE("symbolic structure satisfies the axioms identically") {
  const ModelSpec spec = parse_model_spec(builtin_model_json("example1"));
  const auto m = instantiate<ParamExpr>(spec, {});
  CHECK(validate_apapr(m).ok());
  CHECK(validate_lie(m.algebra).ok());
}

TEST_CASE("associated metric identities on the fuzz corpus") {
  for (const auto& fc : testing::fuzz_corpus(60, 101)) {
    CAPTURE(fc.label);
    const auto& m = fc.model;
    REQUIRE(validate_structure(m).ok());
    // g~(phi x, phi y) = g~(x, y) - eta(x) eta(y), the same rule as for g
    CHECK(transpose(m.phi) * m.g_assoc * m.phi == m.g_assoc - outer(m.eta, m.eta));
    CHECK(transpose(m.phi) * m.g_assoc * m.phi != -m.g_assoc + outer(m.eta, m.eta));
    // g~^{ij} = phi^j_k g^{ik} + xi^i xi^j inverts g~
    CHECK(associated_inverse(m) * m.g_assoc == identity_matrix<Scalar>(m.dim()));
    CHECK(associated_signature(m) == Signature{m.n + 1, m.n, 0});
  }
}
