#include <doctest.h>

#include "apapr/model.hpp"
#include "apapr/structure_tensor.hpp"
#include "support/fuzz.hpp"

using namespace apapr;

namespace {

ApaprModel<Scalar> example1(const Scalar& p, const Scalar& q) {
  return load_model(builtin_model_json("example1"), {{"p", p}, {"q", q}});
}
ApaprModel<Scalar> example2(const Scalar& p) { return load_model(builtin_model_json("example2"), {{"p", p}}); }

ApaprModel<Scalar> abelian(std::size_t d) {
  return testing::standard_structure("abelian", LieAlgebra<Scalar>(d));
}

ClassReport<Scalar> classes_of(const ApaprModel<Scalar>& m) {
  const auto conn = levi_civita(m);
  return classify(m, conn, compute_F(m, conn));
}

}  // namespace

TEST_CASE("Lee forms of the 5-dimensional example") {
  const auto m = example1(1, 2);
  const auto fd = compute_F(m, levi_civita(m));
  CHECK(fd.theta == Scalar(-4) * m.eta);
  CHECK(fd.theta_star.is_zero());
  CHECK(fd.omega.is_zero());
}

TEST_CASE("Lee forms of the 3-dimensional example") {
  for (const Scalar& p : {Scalar(1), Scalar(-2), Scalar(3, 5)}) {
    const auto c = classes_of(example2(p));
    CHECK(c.lee.theta_star_xi == Scalar(2) * p);
    CHECK(c.lee.theta_xi.is_zero());
    CHECK(c.lee.omega.is_zero());
  }
}

TEST_CASE("detectors on the examples") {
  for (const auto& [p, q] : {std::pair<Scalar, Scalar>{1, 2}, {0, 0}, {Scalar(5, 2), -1}}) {
    const auto c = classes_of(example1(p, q));
    CHECK(c.is_para_sasaki_like);
    CHECK_FALSE(c.torse_forming.has_value());
    CHECK_FALSE(c.is_F0);
    CHECK_FALSE(c.is_F5_form);
  }
  for (const Scalar& p : {Scalar(1), Scalar(-2), Scalar(3, 5)}) {
    const auto m = example2(p);
    const auto c = classes_of(m);
    CHECK_FALSE(c.is_para_sasaki_like);
    REQUIRE(c.torse_forming.has_value());
    CHECK(c.torse_forming->f == -p);
    CHECK_FALSE(c.torse_forming->trivial);
    CHECK(c.is_F5_form);
  }
}

TEST_CASE("F5 form rejects the para-Sasaki-like example for every f") {
  const auto m = example1(1, 2);
  const auto conn = levi_civita(m);
  for (int f = -3; f <= 3; ++f) CHECK_FALSE(is_F5_form(m, conn, Scalar(f)));
}

TEST_CASE("flat abelian structures") {
  for (std::size_t d : {3u, 5u}) {
    const auto m = abelian(d);
    const auto conn = levi_civita(m);
    const auto fd = compute_F(m, conn);
    const auto c = classify(m, conn, fd);
    CHECK(c.is_F0);
    CHECK(fd.F.is_zero());
    CHECK_FALSE(c.is_para_sasaki_like);
    REQUIRE(c.torse_forming.has_value());
    CHECK(c.torse_forming->f.is_zero());
    CHECK(c.torse_forming->trivial);
    CHECK(is_F5_form(m, conn, Scalar(0)));
  }
}

TEST_CASE("detectors are frame independent") {
  testing::Rng rng(4);
  for (int trial = 0; trial < 6; ++trial) {
    const auto c1 = classes_of(change_frame(example1(1, 1), testing::random_frame(rng, 5)));
    CHECK(c1.is_para_sasaki_like);
    CHECK_FALSE(c1.torse_forming.has_value());
    CHECK(c1.lee.theta_xi == Scalar(-4));

    const auto c2 = classes_of(change_frame(example2(Scalar(-1, 2)), testing::random_frame(rng, 3)));
    REQUIRE(c2.torse_forming.has_value());
    CHECK(c2.torse_forming->f == Scalar(1, 2));
    CHECK(c2.is_F5_form);
  }
}

TEST_CASE("symbolic classification of the 3-dimensional family") {
  const auto spec = parse_model_spec(builtin_model_json("example2"));
  const auto m = instantiate<ParamExpr>(spec, {});
  const auto conn = levi_civita(m);
  const auto tf = torse_forming_fit(m, conn);
  REQUIRE(tf.has_value());
  CHECK(tf->f == -ParamExpr::parameter("p"));
  CHECK(is_F5_form(m, conn, tf->f));
  CHECK_FALSE(is_para_sasaki_like(m, conn));
}
