#include "apapr/soliton.hpp"

#include <sstream>

namespace apapr {

namespace {

std::string triple(const std::array<Scalar, 3>& t) {
  return "(" + t[0].to_string() + "," + t[1].to_string() + "," + t[2].to_string() + ")";
}

Relation equals(const std::string& name, const Scalar& lhs, const Scalar& rhs) {
  return {name, lhs == rhs, "lhs = " + lhs.to_string() + ", rhs = " + rhs.to_string()};
}

Relation triple_equals(const std::string& name, const std::array<Scalar, 3>& got,
                       const std::array<Scalar, 3>& expected) {
  return {name, got == expected, "got " + triple(got) + ", expected " + triple(expected)};
}

Matrix<Scalar> combination(const ApaprModel<Scalar>& m, const Scalar& a, const Scalar& b, const Scalar& c) {
  const auto basis = fit_basis(m);
  return a * basis[0] + b * basis[1] + c * basis[2];
}

struct Fits {
  FitResult<Scalar> einstein;
  FitResult<Scalar> soliton;
  Matrix<Scalar> rho;
};

Fits run_fits(const Analysis<Scalar>& a, const std::optional<Matrix<Scalar>>& rho_override) {
  if (!rho_override) return {a.einstein, a.soliton, a.curv.rho};
  return {einstein_like_fit(a.model, *rho_override), soliton_fit(a.model, a.lie_g, *rho_override), *rho_override};
}

}  // namespace

std::string einstein_kind(const FitResult<Scalar>& fit) {
  if (!fit.exact) return "none";
  const auto& [a, b, c] = fit.constants;
  if (b.is_zero() && c.is_zero()) return "Einstein";
  if (b.is_zero()) return "eta-Einstein";
  return "para-Einstein-like";
}

std::string soliton_kind(const FitResult<Scalar>& fit) {
  if (!fit.exact) return "none";
  const auto& [lambda, mu, nu] = fit.constants;
  if (mu.is_zero() && nu.is_zero()) {
    if (lambda.sign() < 0) return "shrinking Ricci soliton";
    if (lambda.sign() > 0) return "expanding Ricci soliton";
    return "steady Ricci soliton";
  }
  if (mu.is_zero()) return "eta-Ricci soliton";
  return "para-Ricci-like soliton";
}

bool TheoremReport::holds() const {
  if (!hypotheses_hold) return true;
  if (!equivalence_holds) return false;
  for (const auto* list : {&constant_relations, &sum_identities, &special_case_checks})
    for (const Relation& r : *list)
      if (!r.holds) return false;
  return true;
}

TheoremReport verify_theorem_A(const Analysis<Scalar>& a, const std::optional<Matrix<Scalar>>& rho_override) {
  TheoremReport rep;
  rep.theorem = 'A';
  const Fits fits = run_fits(a, rho_override);
  rep.einstein = fits.einstein;
  rep.soliton = fits.soliton;
  rep.equivalence_holds = fits.einstein.exact == fits.soliton.exact;

  rep.hypotheses_hold = a.classes.is_para_sasaki_like;
  if (!rep.hypotheses_hold) {
    rep.reasons.push_back("structure is not para-Sasaki-like");
    return rep;
  }
  rep.reasons.push_back("structure is para-Sasaki-like");
  if (!fits.einstein.exact || !fits.soliton.exact) {
    rep.reasons.push_back(fits.einstein.exact || fits.soliton.exact
                              ? "exactly one of the two fits is exact"
                              : "neither fit is exact; the equivalence holds vacuously");
    return rep;
  }

  const Scalar two_n(static_cast<long>(2 * a.model.n));
  const auto& [ca, cb, cc] = fits.einstein.constants;
  const auto& [lambda, mu, nu] = fits.soliton.constants;

  rep.constant_relations.push_back(equals("a+lambda=0", ca + lambda, 0));
  rep.constant_relations.push_back(equals("b+mu+1=0", cb + mu + 1, 0));
  rep.constant_relations.push_back(equals("c+nu-1=0", cc + nu - 1, 0));

  rep.sum_identities.push_back(equals("lambda+mu+nu=2n", lambda + mu + nu, two_n));
  rep.sum_identities.push_back(equals("a+b+c=-2n", ca + cb + cc, -two_n));
  {
    const Matrix<Scalar> form = combination(a.model, -lambda, -(Scalar(1) + mu), Scalar(1) - nu);
    rep.sum_identities.push_back(
        {"rho=-lambda*g-(1+mu)*g~+(1-nu)*eta(x)eta", form == fits.rho, "soliton form of the Ricci tensor"});
  }

  if (mu.is_zero()) {
    rep.special_cases.push_back("i");
    rep.special_case_checks.push_back(
        triple_equals("i: einstein=(-lambda,-1,lambda-2n+1)", fits.einstein.constants,
                      {-lambda, Scalar(-1), lambda - two_n + 1}));
  }
  if (mu.is_zero() && nu.is_zero()) {
    rep.special_cases.push_back("ii");
    rep.special_case_checks.push_back(
        triple_equals("ii: soliton=(2n,0,0)", fits.soliton.constants, {two_n, Scalar(0), Scalar(0)}));
    rep.special_case_checks.push_back(
        triple_equals("ii: einstein=(-2n,-1,1)", fits.einstein.constants, {-two_n, Scalar(-1), Scalar(1)}));
  }
  if (cb.is_zero()) {
    rep.special_cases.push_back("iii");
    rep.special_case_checks.push_back(
        triple_equals("iii: einstein=(a,0,-2n-a)", fits.einstein.constants, {ca, Scalar(0), -two_n - ca}));
    rep.special_case_checks.push_back(
        triple_equals("iii: soliton=(-a,-1,a+2n+1)", fits.soliton.constants, {-ca, Scalar(-1), ca + two_n + 1}));
  }
  if (cb.is_zero() && cc.is_zero()) {
    rep.special_cases.push_back("iv");
    rep.special_case_checks.push_back(
        triple_equals("iv: einstein=(-2n,0,0)", fits.einstein.constants, {-two_n, Scalar(0), Scalar(0)}));
    rep.special_case_checks.push_back(
        triple_equals("iv: soliton=(2n,-1,1)", fits.soliton.constants, {two_n, Scalar(-1), Scalar(1)}));
  }
  return rep;
}

TheoremReport verify_theorem_B(const Analysis<Scalar>& a, const std::optional<Matrix<Scalar>>& rho_override) {
  TheoremReport rep;
  rep.theorem = 'B';
  const Fits fits = run_fits(a, rho_override);
  rep.einstein = fits.einstein;
  rep.soliton = fits.soliton;
  rep.equivalence_holds = fits.einstein.exact == fits.soliton.exact;

  const auto& tf = a.classes.torse_forming;
  rep.hypotheses_hold = tf.has_value() && !tf->trivial;
  if (!tf) {
    rep.reasons.push_back("xi is not torse-forming");
    return rep;
  }
  rep.f = tf->f;
  if (tf->trivial) {
    rep.reasons.push_back("xi is torse-forming only trivially (f = 0)");
    return rep;
  }
  rep.reasons.push_back("xi is torse-forming with f = " + tf->f.to_string() +
                        (tf->f.sign() > 0 ? " (epsilon = +1)" : " (epsilon = -1)"));
  if (!fits.einstein.exact || !fits.soliton.exact) {
    rep.reasons.push_back(fits.einstein.exact || fits.soliton.exact
                              ? "exactly one of the two fits is exact"
                              : "neither fit is exact; the equivalence holds vacuously");
    return rep;
  }

  const Scalar& f = tf->f;
  const std::size_t n = a.model.n;
  const Scalar two_n(static_cast<long>(2 * n));
  const Scalar dim(static_cast<long>(2 * n + 1));
  const auto& [ca, cb, cc] = fits.einstein.constants;
  const auto& [lambda, mu, nu] = fits.soliton.constants;

  rep.constant_relations.push_back(equals("a+lambda+f=0", ca + lambda + f, 0));
  rep.constant_relations.push_back(equals("b+mu=0", cb + mu, 0));
  rep.constant_relations.push_back(equals("c+nu-f=0", cc + nu - f, 0));

  rep.sum_identities.push_back(equals("2n*f^2=-(a+b+c)", two_n * f * f, -(ca + cb + cc)));
  rep.sum_identities.push_back(equals("2n*f^2=lambda+mu+nu", two_n * f * f, lambda + mu + nu));
  {
    Relation sec{"k(xi-section)=-f^2", true, "all frame vectors not parallel to xi"};
    for (std::size_t i = 0; i < a.model.dim(); ++i) {
      const Vector<Scalar> x = basis_vector<Scalar>(a.model.dim(), i);
      const Scalar gx = bilinear(a.model.g, x, x);
      const Scalar gxxi = bilinear(a.model.g, x, a.model.xi);
      if (gx * bilinear(a.model.g, a.model.xi, a.model.xi) == gxxi * gxxi) continue;
      const Scalar k = xi_sectional_curvature(a.model, a.curv.R, x);
      if (k != -(f * f)) {
        sec.holds = false;
        sec.detail = "k(e_" + std::to_string(i) + ", xi) = " + k.to_string() + ", -f^2 = " + (-(f * f)).to_string();
        break;
      }
    }
    rep.sum_identities.push_back(sec);
  }

  if (mu.is_zero() && cb.is_zero()) {
    rep.special_cases.push_back("i");
    rep.special_case_checks.push_back(equals("i: a+c=-lambda-nu", ca + cc, -lambda - nu));
  }
  if (mu.is_zero() && nu.is_zero() && cb.is_zero()) {
    rep.special_cases.push_back("ii");
    rep.special_case_checks.push_back(
        triple_equals("ii: einstein=(-lambda-f,0,f)", fits.einstein.constants, {-lambda - f, Scalar(0), f}));
  }
  if (cb.is_zero() && cc.is_zero() && mu.is_zero()) {
    rep.special_cases.push_back("iii");
    rep.special_case_checks.push_back(
        triple_equals("iii: soliton=(-a-f,0,f)", fits.soliton.constants, {-ca - f, Scalar(0), f}));
    const Scalar tau = dim * ca + cb + cc;
    rep.special_case_checks.push_back({"einstein: tau<0", tau.sign() < 0, "tau = " + tau.to_string()});
    rep.special_case_checks.push_back(
        equals("einstein: lambda=-tau/(2n+1)-f", lambda, -tau / dim - f));
    rep.special_case_checks.push_back(equals("einstein: 2n(2n+1)f^2=-tau", two_n * dim * f * f, -tau));
  }
  return rep;
}

}  // namespace apapr
