#include <doctest.h>

#include "apapr/model.hpp"
#include "apapr/soliton.hpp"
#include "support/fuzz.hpp"

using namespace apapr;

namespace {

ApaprModel<Scalar> example1(const Scalar& p, const Scalar& q) {
  return load_model(builtin_model_json("example1"), {{"p", p}, {"q", q}});
}
ApaprModel<Scalar> example2(const Scalar& p) { return load_model(builtin_model_json("example2"), {{"p", p}}); }

using Triple = std::array<Scalar, 3>;

bool has_case(const TheoremReport& r, const std::string& c) {
  return std::find(r.special_cases.begin(), r.special_cases.end(), c) != r.special_cases.end();
}

}  // namespace

TEST_CASE("Lie derivative of the metric") {
  const auto m1 = example1(1, 2);
  Matrix<Scalar> l1(5);
  l1(1, 3) = l1(3, 1) = l1(2, 4) = l1(4, 2) = 2;
  CHECK(lie_derivative_g(m1, levi_civita(m1)) == l1);

  for (const Scalar& p : {Scalar(1), Scalar(-3, 4)}) {
    const auto m2 = example2(p);
    Matrix<Scalar> l2(3);
    l2(1, 1) = l2(2, 2) = Scalar(-2) * p;
    CHECK(lie_derivative_g(m2, levi_civita(m2)) == l2);
  }

  const auto flat = testing::standard_structure("abelian", LieAlgebra<Scalar>(3));
  CHECK(lie_derivative_g(flat, levi_civita(flat)).is_zero());
}

TEST_CASE("fits of the examples") {
  const auto a1 = analyze(example1(1, 2));
  CHECK(a1.einstein.exact);
  CHECK(a1.einstein.constants == Triple{0, 0, -4});
  CHECK(a1.soliton.exact);
  CHECK(a1.soliton.constants == Triple{0, -1, 5});
  CHECK(einstein_kind(a1.einstein) == "eta-Einstein");
  CHECK(soliton_kind(a1.soliton) == "para-Ricci-like soliton");

  for (const Scalar& p : {Scalar(1), Scalar(-2), Scalar(3, 5)}) {
    const auto a2 = analyze(example2(p));
    CHECK(a2.einstein.constants == Triple{Scalar(-2) * p * p, 0, 0});
    CHECK(a2.soliton.constants == Triple{p + Scalar(2) * p * p, 0, -p});
    CHECK(a2.einstein.exact);
    CHECK(a2.soliton.exact);
    CHECK(einstein_kind(a2.einstein) == "Einstein");
    CHECK(soliton_kind(a2.soliton) == "eta-Ricci soliton");
  }

  const auto flat = analyze(testing::standard_structure("abelian", LieAlgebra<Scalar>(5)));
  CHECK(flat.soliton.constants == Triple{0, 0, 0});
  CHECK(flat.soliton.exact);
  CHECK(soliton_kind(flat.soliton) == "steady Ricci soliton");
}

TEST_CASE("fitting a basis element returns its coordinates") {
  const auto m = example1(1, 2);
  const auto fit = einstein_like_fit(m, m.g_assoc);
  CHECK(fit.constants == Triple{0, 1, 0});
  CHECK(fit.exact);
  const auto mixed = einstein_like_fit(m, Scalar(3) * m.g - Scalar(1, 2) * outer(m.eta, m.eta));
  CHECK(mixed.constants == Triple{3, 0, Scalar(-1, 2)});

  Matrix<Scalar> off(5);
  off(1, 1) = 1;
  const auto miss = einstein_like_fit(m, off);
  CHECK_FALSE(miss.exact);
  CHECK_FALSE(miss.residual.is_zero());
}

TEST_CASE("rank-deficient basis is reported") {
  std::array<Matrix<Scalar>, 3> basis{identity_matrix<Scalar>(3), identity_matrix<Scalar>(3), Matrix<Scalar>(3)};
  CHECK_THROWS_AS(project_onto_basis(basis, Matrix<Scalar>(3)), ArithmeticError);
}

TEST_CASE("theorem A on the para-Sasaki-like example") {
  testing::Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = analyze(example1(testing::random_rational(rng), testing::random_rational(rng)));
    const TheoremReport r = verify_theorem_A(a);
    CHECK(r.hypotheses_hold);
    CHECK(r.equivalence_holds);
    CHECK(r.holds());
    CHECK(r.constant_relations.size() == 3);
    for (const auto& rel : r.constant_relations) CHECK(rel.holds);
    for (const auto& rel : r.sum_identities) CHECK(rel.holds);
    CHECK(has_case(r, "iii"));
    CHECK_FALSE(has_case(r, "iv"));
  }
  const auto b = verify_theorem_B(analyze(example1(1, 2)));
  CHECK_FALSE(b.hypotheses_hold);
  CHECK(b.reasons.front() == "xi is not torse-forming");
}

TEST_CASE("theorem B on the torse-forming example") {
  for (const Scalar& p : {Scalar(1), Scalar(-2), Scalar(3, 5), Scalar(4), Scalar(-1, 3)}) {
    const auto a = analyze(example2(p));
    const TheoremReport r = verify_theorem_B(a);
    CHECK(r.hypotheses_hold);
    REQUIRE(r.f.has_value());
    CHECK(*r.f == -p);
    CHECK(r.holds());
    CHECK(has_case(r, "iii"));
    CHECK(r.soliton.constants == Triple{Scalar(2) * p * p + p, 0, -p});
    CHECK_FALSE(verify_theorem_A(a).hypotheses_hold);
  }
  const auto a1 = analyze(example2(1));
  const Scalar two_n_f2 = Scalar(2) * *verify_theorem_B(a1).f * *verify_theorem_B(a1).f;
  CHECK(two_n_f2 == Scalar(2));
  CHECK(two_n_f2 == -(a1.einstein.constants[0] + a1.einstein.constants[1] + a1.einstein.constants[2]));
}

TEST_CASE("trivially torse-forming structures do not satisfy the hypotheses") {
  const auto r = verify_theorem_B(analyze(testing::standard_structure("abelian", LieAlgebra<Scalar>(3))));
  CHECK_FALSE(r.hypotheses_hold);
  REQUIRE(r.f.has_value());
  CHECK(r.f->is_zero());
  CHECK(r.holds());
}

TEST_CASE("perturbed Ricci tensors") {
  const auto a = analyze(example1(1, 2));
  SUBCASE("rho + g~ stays in the span but breaks the constant sums") {
    const auto r = verify_theorem_A(a, a.curv.rho + a.model.g_assoc);
    CHECK(r.einstein.exact);
    CHECK(r.einstein.constants == Triple{0, 1, -4});
    CHECK_FALSE(r.holds());
    CHECK_FALSE(r.sum_identities[1].holds);  // a+b+c = -3
  }
  SUBCASE("rho + e1 (x) e1 leaves the span") {
    Matrix<Scalar> bump(5);
    bump(1, 1) = 1;
    const auto r = verify_theorem_A(a, a.curv.rho + bump);
    CHECK_FALSE(r.einstein.exact);
    CHECK_FALSE(r.soliton.exact);
    CHECK(r.constant_relations.empty());
  }
  SUBCASE("torse-forming side") {
    const auto b = analyze(example2(2));
    const auto r = verify_theorem_B(b, b.curv.rho + b.model.g_assoc);
    CHECK_FALSE(r.holds());
  }
}

TEST_CASE("symbolic pipeline agrees with bound evaluation") {
  const ModelSpec spec = parse_model_spec(builtin_model_json("example2"));
  const auto sym = analyze(instantiate<ParamExpr>(spec, {}));
  const ParamExpr p = ParamExpr::parameter("p");
  CHECK(sym.einstein.exact);
  CHECK(sym.soliton.exact);
  CHECK(sym.einstein.constants[0] == parse_expr("-2*p^2"));
  CHECK(sym.soliton.constants[0] == parse_expr("2*p^2 + p"));
  CHECK(sym.soliton.constants[2] == -p);
  CHECK(sym.curv.tau == parse_expr("-6*p^2"));
  CHECK(sym.div_xi == parse_expr("-2*p"));
  for (const Scalar& v : {Scalar(1), Scalar(-2), Scalar(3, 5)}) {
    const Binding b{{"p", v}};
    const auto bound = analyze(load_model(spec, b));
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(sym.einstein.constants[k].eval(b) == bound.einstein.constants[k]);
      CHECK(sym.soliton.constants[k].eval(b) == bound.soliton.constants[k]);
    }
    CHECK(sym.curv.rho.map([&](const ParamExpr& e) { return e.eval(b); }) == bound.curv.rho);
    CHECK(sym.curv.R.map([&](const ParamExpr& e) { return e.eval(b); }) == bound.curv.R);
  }
}

TEST_CASE("interpolated constants match the closed forms") {
  const ModelSpec spec = parse_model_spec(builtin_model_json("example2"));
  const std::vector<Scalar> ps{Scalar(-2), Scalar(-1, 2), Scalar(1), Scalar(3, 2), Scalar(4), Scalar(7, 3)};
  std::vector<Scalar> a, f, lambda, nu, mu, b, c;
  for (const Scalar& p : ps) {
    const auto an = analyze(load_model(spec, {{"p", p}}));
    a.push_back(an.einstein.constants[0]);
    b.push_back(an.einstein.constants[1]);
    c.push_back(an.einstein.constants[2]);
    lambda.push_back(an.soliton.constants[0]);
    mu.push_back(an.soliton.constants[1]);
    nu.push_back(an.soliton.constants[2]);
    f.push_back(an.classes.torse_forming->f);
  }
  auto coeffs = [&](const std::vector<Scalar>& ys) { return testing::lagrange_coefficients(ps, ys); };
  using V = std::vector<Scalar>;
  CHECK(coeffs(a) == V{0, 0, -2, 0, 0, 0});
  CHECK(coeffs(b) == V(6, Scalar(0)));
  CHECK(coeffs(c) == V(6, Scalar(0)));
  CHECK(coeffs(f) == V{0, -1, 0, 0, 0, 0});
  CHECK(coeffs(lambda) == V{0, 1, 2, 0, 0, 0});
  CHECK(coeffs(mu) == V(6, Scalar(0)));
  CHECK(coeffs(nu) == V{0, -1, 0, 0, 0, 0});
}
