#include "apapr/identities.hpp"

#include <array>
#include <functional>
#include <optional>
#include <utility>

namespace apapr {

namespace {

using S = Scalar;
using Sides = std::pair<S, S>;

std::string tuple_string(const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + ")";
}

std::string sides_string(const std::vector<std::size_t>& idx, const Sides& s) {
  return tuple_string(idx) + ": lhs = " + s.first.to_string() + ", rhs = " + s.second.to_string();
}

/// Precomputed frame data shared by the catalog checks.
struct Frame {
  const Analysis<S>& a;
  std::size_t d;
  S n;       // as a scalar
  S two_n;
  Matrix<S> gphi;    // g(e_i, phi e_j)
  Matrix<S> gpp;     // g(phi e_i, phi e_j)
  Matrix<S> phi2;    // column i = phi^2 e_i
  Matrix<S> dxi;     // (i, k): k-th comp of nabla_{e_i} xi
  Matrix<S> dxi_low; // (i, j): g(nabla_{e_i} xi, e_j)
  Matrix<S> deta;    // (nabla_{e_i} eta)(e_j)
  Tensor3<S> dphi;   // k-th comp of (nabla_{e_i} phi) e_j
  Tensor3<S> drho;   // (nabla_{e_i} rho)(e_j, e_k)
  Vector<S> div_rho;
  Vector<S> div_star_rho;

  explicit Frame(const Analysis<S>& an)
      : a(an),
        d(an.model.dim()),
        n(static_cast<long>(an.model.n)),
        two_n(static_cast<long>(2 * an.model.n)),
        gphi(an.model.g * an.model.phi),
        gpp(transpose(an.model.phi) * an.model.g * an.model.phi),
        phi2(an.model.phi * an.model.phi),
        dxi(nabla_xi(an.model, an.conn)),
        dxi_low(dxi * an.model.g),
        deta(nabla_eta(an.model, an.conn)),
        dphi(nabla_phi(an.model, an.conn)),
        drho(nabla_tensor(an.conn, an.curv.rho)),
        div_rho(divergence(an.model, an.conn, an.curv.rho, MetricChoice::g)),
        div_star_rho(divergence(an.model, an.conn, an.curv.rho, MetricChoice::associated)) {}

  const S& eta(std::size_t i) const { return a.model.eta(i); }
  const S& xi(std::size_t i) const { return a.model.xi(i); }
  const S& g(std::size_t i, std::size_t j) const { return a.model.g(i, j); }
  const S& rho(std::size_t i, std::size_t j) const { return a.curv.rho(i, j); }
  const S& F(std::size_t i, std::size_t j, std::size_t k) const { return a.fdata.F(i, j, k); }

  /// k-th component of R(e_i, e_j) xi
  S R_xi(std::size_t i, std::size_t j, std::size_t k) const {
    S s(0);
    for (std::size_t m = 0; m < d; ++m)
      if (!xi(m).is_zero()) s += xi(m) * a.curv.op(i, j, m, k);
    return s;
  }
  S rho_xi(std::size_t i) const {
    S s(0);
    for (std::size_t m = 0; m < d; ++m) s += rho(i, m) * xi(m);
    return s;
  }
  S rho_xi_xi() const {
    S s(0);
    for (std::size_t m = 0; m < d; ++m) s += xi(m) * rho_xi(m);
    return s;
  }
  /// (nabla_{x} rho)(y, z) for arbitrary vectors.
  S drho_form(const Vector<S>& x, const Vector<S>& y, const Vector<S>& z) const {
    S s(0);
    for (std::size_t i = 0; i < d; ++i) {
      if (x(i).is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        if (y(j).is_zero()) continue;
        for (std::size_t k = 0; k < d; ++k)
          if (!z(k).is_zero()) s += x(i) * y(j) * z(k) * drho(i, j, k);
      }
    }
    return s;
  }
  /// e_i - eta(e_i) xi, the projection of e_i onto ker eta.
  Vector<S> horizontal(std::size_t i) const {
    Vector<S> v = basis_vector<S>(d, i);
    for (std::size_t k = 0; k < d; ++k) v(k) -= eta(i) * xi(k);
    return v;
  }
  bool drho_horizontal_zero() const {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!drho_form(horizontal(i), horizontal(j), horizontal(k)).is_zero()) return false;
    return true;
  }
  bool drho_along_xi_zero() const {
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!drho_form(a.model.xi, basis_vector<S>(d, j), basis_vector<S>(d, k)).is_zero()) return false;
    return true;
  }
};

class Catalog {
 public:
  explicit Catalog(const Frame& fr) : fr_(fr) {}

  /// Compares lhs/rhs over every index tuple of the given rank.
  void entrywise(const std::string& name, const std::string& hyp, bool applicable, std::size_t rank,
                 const std::function<Sides(const std::vector<std::size_t>&)>& sides) {
    IdentityResult r{name, hyp, applicable, true, ""};
    if (applicable) {
      std::vector<std::size_t> idx(rank, 0);
      const std::size_t total = power(fr_.d, rank);
      for (std::size_t pos = 0; pos < total; ++pos) {
        std::size_t rem = pos;
        for (std::size_t r2 = rank; r2-- > 0;) {
          idx[r2] = rem % fr_.d;
          rem /= fr_.d;
        }
        const Sides s = sides(idx);
        if (s.first != s.second) {
          r.holds = false;
          r.witness = sides_string(idx, s);
          break;
        }
      }
    }
    results_.push_back(std::move(r));
  }

  void scalar(const std::string& name, const std::string& hyp, bool applicable, const std::function<Sides()>& sides) {
    IdentityResult r{name, hyp, applicable, true, ""};
    if (applicable) {
      const Sides s = sides();
      if (s.first != s.second) {
        r.holds = false;
        r.witness = "lhs = " + s.first.to_string() + ", rhs = " + s.second.to_string();
      }
    }
    results_.push_back(std::move(r));
  }

  /// Logical statement; `check` returns an empty witness on success.
  void statement(const std::string& name, const std::string& hyp, bool applicable,
                 const std::function<std::optional<std::string>()>& check) {
    IdentityResult r{name, hyp, applicable, true, ""};
    if (applicable)
      if (auto failure = check()) {
        r.holds = false;
        r.witness = *failure;
      }
    results_.push_back(std::move(r));
  }

  std::vector<IdentityResult> take() { return std::move(results_); }

 private:
  static std::size_t power(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
  }

  const Frame& fr_;
  std::vector<IdentityResult> results_;
};

std::optional<std::string> iff(bool lhs, bool rhs, const std::string& lhs_name, const std::string& rhs_name) {
  if (lhs == rhs) return std::nullopt;
  return lhs_name + " is " + (lhs ? "true" : "false") + " but " + rhs_name + " is " + (rhs ? "true" : "false");
}

}  // namespace

std::vector<IdentityResult> identity_suite(const Analysis<Scalar>& a) {
  const Frame fr(a);
  Catalog cat(fr);
  const std::size_t d = fr.d;
  const auto& m = a.model;

  const bool el = a.einstein.exact;
  const bool rl = a.soliton.exact;
  const bool sl = a.classes.is_para_sasaki_like;
  const bool tf = a.classes.torse_forming && !a.classes.torse_forming->trivial;
  const bool f5 = tf && a.classes.is_F5_form;
  const S f = a.classes.torse_forming ? a.classes.torse_forming->f : S(0);
  const auto& [ca, cb, cc] = a.einstein.constants;
  const auto& [lambda, mu, nu] = a.soliton.constants;
  const S abc = ca + cb + cc;

  // --- always ---------------------------------------------------------------
  cat.entrywise("eta_nabla_xi", "always", true, 1, [&](const auto& i) {
    S s(0);
    for (std::size_t k = 0; k < d; ++k) s += fr.eta(k) * fr.dxi(i[0], k);
    return Sides{s, S(0)};
  });
  cat.entrywise("F_symmetric", "always", true, 3,
                [&](const auto& i) { return Sides{fr.F(i[0], i[1], i[2]), fr.F(i[0], i[2], i[1])}; });
  cat.entrywise("F_phi_relation", "always", true, 3, [&](const auto& i) {
    // -F(x, phi y, phi z) + eta(y) F(x, xi, z) + eta(z) F(x, y, xi)
    S rhs(0);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) rhs -= m.phi(p, i[1]) * m.phi(q, i[2]) * fr.F(i[0], p, q);
    for (std::size_t p = 0; p < d; ++p) {
      rhs += fr.eta(i[1]) * fr.xi(p) * fr.F(i[0], p, i[2]);
      rhs += fr.eta(i[2]) * fr.xi(p) * fr.F(i[0], i[1], p);
    }
    return Sides{fr.F(i[0], i[1], i[2]), rhs};
  });
  cat.entrywise("nabla_eta_F", "always", true, 2, [&](const auto& i) {
    // (nabla_x eta) y = g(nabla_x xi, y) = -F(x, phi y, xi)
    S rhs(0);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) rhs -= m.phi(p, i[1]) * fr.xi(q) * fr.F(i[0], p, q);
    if (fr.deta(i[0], i[1]) != fr.dxi_low(i[0], i[1])) return Sides{fr.deta(i[0], i[1]), fr.dxi_low(i[0], i[1])};
    return Sides{fr.deta(i[0], i[1]), rhs};
  });
  cat.scalar("omega_xi_zero", "always", true, [&] { return Sides{dot(a.fdata.omega, m.xi), S(0)}; });

  // --- para-Einstein-like ---------------------------------------------------
  const std::string h_el = "einstein-like";
  cat.entrywise("ricci_phi_phi", h_el, el, 2, [&](const auto& i) {
    // rho(phi x, phi y) = rho(x, y) - (a+b+c) eta(x) eta(y)
    S lhs(0);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) lhs += m.phi(p, i[0]) * m.phi(q, i[1]) * fr.rho(p, q);
    return Sides{lhs, fr.rho(i[0], i[1]) - abc * fr.eta(i[0]) * fr.eta(i[1])};
  });
  cat.entrywise("ricci_phi_symmetric", h_el, el, 2, [&](const auto& i) {
    S lhs(0), rhs(0);
    for (std::size_t p = 0; p < d; ++p) {
      lhs += m.phi(p, i[0]) * fr.rho(p, i[1]);
      rhs += m.phi(p, i[1]) * fr.rho(i[0], p);
    }
    return Sides{lhs, rhs};
  });
  cat.entrywise("ricci_phi_xi", h_el, el, 1, [&](const auto& i) {
    S lhs(0);
    for (std::size_t p = 0; p < d; ++p) lhs += m.phi(p, i[0]) * fr.rho_xi(p);
    return Sides{lhs, S(0)};
  });
  cat.entrywise("ricci_xi", h_el, el, 1, [&](const auto& i) { return Sides{fr.rho_xi(i[0]), abc * fr.eta(i[0])}; });
  cat.scalar("ricci_xi_xi", h_el, el, [&] { return Sides{fr.rho_xi_xi(), abc}; });
  cat.entrywise("nabla_ricci_einstein_like", h_el, el, 3, [&](const auto& i) {
    // (nabla_x rho)(y,z) = b F(x,y,z) + (b+c){g(nabla_x xi, y) eta(z) + g(nabla_x xi, z) eta(y)}
    const S rhs = cb * fr.F(i[0], i[1], i[2]) +
                  (cb + cc) * (fr.dxi_low(i[0], i[1]) * fr.eta(i[2]) + fr.dxi_low(i[0], i[2]) * fr.eta(i[1]));
    return Sides{fr.drho(i[0], i[1], i[2]), rhs};
  });
  cat.scalar("scalar_curvature_einstein_like", h_el, el,
             [&] { return Sides{a.curv.tau, S(static_cast<long>(d)) * ca + cb + cc}; });
  cat.entrywise("ricci_operator_xi_eigen", h_el, el, 1, [&](const auto& i) {
    S q(0);
    for (std::size_t j = 0; j < d; ++j) q += m.g_inv(i[0], j) * fr.rho_xi(j);
    return Sides{q, abc * fr.xi(i[0])};
  });

  // --- para-Sasaki-like -----------------------------------------------------
  const std::string h_sl = "para-Sasaki-like";
  cat.entrywise("sl_nabla_xi", h_sl, sl, 2, [&](const auto& i) { return Sides{fr.dxi(i[0], i[1]), m.phi(i[1], i[0])}; });
  cat.entrywise("sl_nabla_eta", h_sl, sl, 2, [&](const auto& i) { return Sides{fr.deta(i[0], i[1]), fr.gphi(i[0], i[1])}; });
  cat.entrywise("sl_curvature_xi", h_sl, sl, 3, [&](const auto& i) {
    // R(x,y)xi = -eta(y) x + eta(x) y
    const S rhs = -fr.eta(i[1]) * S(i[0] == i[2] ? 1 : 0) + fr.eta(i[0]) * S(i[1] == i[2] ? 1 : 0);
    return Sides{fr.R_xi(i[0], i[1], i[2]), rhs};
  });
  cat.entrywise("sl_curvature_xi_xi", h_sl, sl, 2, [&](const auto& i) {
    // R(xi, y) xi = phi^2 y
    S lhs(0);
    for (std::size_t p = 0; p < d; ++p) lhs += fr.xi(p) * fr.R_xi(p, i[0], i[1]);
    return Sides{lhs, fr.phi2(i[1], i[0])};
  });
  cat.entrywise("sl_ricci_xi", h_sl, sl, 1, [&](const auto& i) { return Sides{fr.rho_xi(i[0]), -fr.two_n * fr.eta(i[0])}; });
  cat.scalar("sl_ricci_xi_xi", h_sl, sl, [&] { return Sides{fr.rho_xi_xi(), -fr.two_n}; });
  cat.entrywise("sl_lee_forms", h_sl, sl, 1, [&](const auto& i) {
    // theta = -2n eta, theta* = omega = 0; reported as the first mismatch
    if (a.fdata.theta_star(i[0]) != 0) return Sides{a.fdata.theta_star(i[0]), S(0)};
    if (a.fdata.omega(i[0]) != 0) return Sides{a.fdata.omega(i[0]), S(0)};
    return Sides{a.fdata.theta(i[0]), -fr.two_n * fr.eta(i[0])};
  });

  // --- para-Sasaki-like and para-Einstein-like ------------------------------
  const std::string h_slel = "para-Sasaki-like, einstein-like";
  const bool slel = sl && el;
  const bool einstein = el && cb.is_zero() && cc.is_zero();
  cat.scalar("sl_el_sum", h_slel, slel, [&] { return Sides{abc, -fr.two_n}; });
  cat.scalar("sl_el_scalar_curvature", h_slel, slel, [&] { return Sides{a.curv.tau, fr.two_n * (ca - 1)}; });
  cat.entrywise("sl_el_nabla_ricci", h_slel, slel, 3, [&](const auto& i) {
    // (b+c){g(x,phi y)eta(z) + g(x,phi z)eta(y)} - b{g(phi x,phi y)eta(z) + g(phi x,phi z)eta(y)}
    const S rhs = (cb + cc) * (fr.gphi(i[0], i[1]) * fr.eta(i[2]) + fr.gphi(i[0], i[2]) * fr.eta(i[1])) -
                  cb * (fr.gpp(i[0], i[1]) * fr.eta(i[2]) + fr.gpp(i[0], i[2]) * fr.eta(i[1]));
    return Sides{fr.drho(i[0], i[1], i[2]), rhs};
  });
  cat.scalar("sl_el_divergence_b", h_slel, slel,
             [&] { return Sides{cb, -dot(fr.div_rho, m.xi) / fr.two_n}; });
  cat.scalar("sl_el_divergence_a", h_slel, slel,
             [&] { return Sides{ca, -fr.two_n - dot(fr.div_star_rho, m.xi) / fr.two_n}; });
  cat.scalar("sl_el_divergence_c", h_slel, slel,
             [&] { return Sides{cc, (dot(fr.div_rho, m.xi) + dot(fr.div_star_rho, m.xi)) / fr.two_n}; });
  cat.statement("sl_el_scalar_flat", h_slel, slel,
                [&] { return iff(a.curv.tau.is_zero(), ca == 1, "tau = 0", "a = 1"); });
  cat.statement("sl_el_ricci_symmetric", h_slel, slel,
                [&] { return iff(fr.drho.is_zero(), einstein, "nabla rho = 0", "Einstein"); });
  cat.statement("sl_el_ricci_eta_parallel", h_slel, slel, [&]() -> std::optional<std::string> {
    if (fr.drho_horizontal_zero()) return std::nullopt;
    return "nabla rho does not vanish on ker eta";
  });
  cat.statement("sl_el_ricci_xi_parallel", h_slel, slel, [&]() -> std::optional<std::string> {
    if (fr.drho_along_xi_zero()) return std::nullopt;
    return "nabla_xi rho != 0";
  });
  cat.statement("sl_el_div_eta_einstein", h_slel, slel, [&] {
    return iff(dot(fr.div_rho, m.xi).is_zero(), cb.is_zero(), "Div Q in ker eta", "eta-Einstein");
  });
  cat.statement("sl_el_div_einstein", h_slel, slel, [&] {
    return iff(dot(fr.div_rho, m.xi).is_zero() && dot(fr.div_star_rho, m.xi).is_zero(), einstein,
               "Div Q, Div* Q in ker eta", "Einstein");
  });
  cat.scalar("sl_el_einstein_scalar_curvature", h_slel + ", Einstein", slel && einstein,
             [&] { return Sides{a.curv.tau, -fr.two_n * (fr.two_n + 1)}; });

  // --- para-Ricci-like soliton ----------------------------------------------
  const std::string h_rl = "soliton";
  cat.scalar("soliton_scalar_curvature", h_rl, rl, [&] {
    return Sides{a.curv.tau, -a.div_xi - S(static_cast<long>(d)) * lambda - mu - nu};
  });
  cat.entrywise("soliton_form_sl", h_rl + ", para-Sasaki-like", rl && sl, 2, [&](const auto& i) {
    // rho = -lambda g - (1+mu) g~ + (1-nu) eta (x) eta
    const S rhs = -lambda * fr.g(i[0], i[1]) - (S(1) + mu) * m.g_assoc(i[0], i[1]) +
                  (S(1) - nu) * fr.eta(i[0]) * fr.eta(i[1]);
    return Sides{fr.rho(i[0], i[1]), rhs};
  });

  const std::string h_rlel = "soliton, einstein-like";
  const bool rlel = rl && el;
  cat.scalar("rl_el_sum", h_rlel, rlel, [&] { return Sides{abc, -lambda - mu - nu}; });
  cat.entrywise("rl_el_xi_geodesic", h_rlel, rlel, 1, [&](const auto& i) {
    S s(0);
    for (std::size_t p = 0; p < d; ++p) s += fr.xi(p) * fr.dxi(p, i[0]);
    return Sides{s, S(0)};
  });
  cat.entrywise("rl_el_nabla_xi_phi_xi", h_rlel, rlel, 1, [&](const auto& i) {
    S s(0);
    for (std::size_t p = 0; p < d; ++p)
      for (std::size_t q = 0; q < d; ++q) s += fr.xi(p) * fr.xi(q) * fr.dphi(p, q, i[0]);
    return Sides{s, S(0)};
  });
  cat.entrywise("rl_el_nabla_xi_eta", h_rlel, rlel, 1, [&](const auto& i) {
    S s(0);
    for (std::size_t p = 0; p < d; ++p) s += fr.xi(p) * fr.deta(p, i[0]);
    return Sides{s, S(0)};
  });
  cat.entrywise("rl_el_omega", h_rlel, rlel, 1, [&](const auto& i) { return Sides{a.fdata.omega(i[0]), S(0)}; });
  cat.entrywise("rl_el_nabla_xi_ricci", h_rlel, rlel, 2, [&](const auto& i) {
    S lhs(0), rhs(0);
    for (std::size_t p = 0; p < d; ++p) {
      lhs += fr.xi(p) * fr.drho(p, i[0], i[1]);
      rhs += fr.xi(p) * fr.F(p, i[0], i[1]);
    }
    return Sides{lhs, cb * rhs};
  });

  // --- torse-forming xi -----------------------------------------------------
  const std::string h_tf = "torse-forming";
  cat.entrywise("tf_nabla_eta", h_tf, tf, 2, [&](const auto& i) { return Sides{fr.deta(i[0], i[1]), f * fr.gpp(i[0], i[1])}; });
  cat.statement("tf_lee_forms", h_tf, tf, [&]() -> std::optional<std::string> {
    const S ts = dot(a.fdata.theta_star, m.xi);
    const S t = dot(a.fdata.theta, m.xi);
    if (ts != -fr.two_n * f) return "theta*(xi) = " + ts.to_string() + ", -2nf = " + (-fr.two_n * f).to_string();
    if (!t.is_zero()) return "theta(xi) = " + t.to_string();
    if (!a.fdata.omega.is_zero()) return std::string("omega != 0");
    return std::nullopt;
  });
  cat.entrywise("tf_curvature_xi", h_tf, tf, 3, [&](const auto& i) {
    // R(x,y)xi = f^2 {eta(x) y - eta(y) x}
    const S rhs = f * f * (fr.eta(i[0]) * S(i[1] == i[2] ? 1 : 0) - fr.eta(i[1]) * S(i[0] == i[2] ? 1 : 0));
    return Sides{fr.R_xi(i[0], i[1], i[2]), rhs};
  });
  cat.entrywise("tf_ricci_xi", h_tf, tf, 1, [&](const auto& i) {
    // rho(x, xi) = -2n f^2 eta(x)
    return Sides{fr.rho_xi(i[0]), -fr.two_n * f * f * fr.eta(i[0])};
  });
  cat.statement("tf_xi_sectional", h_tf, tf, [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < d; ++i) {
      const Vector<S> x = basis_vector<S>(d, i);
      const S gxxi = bilinear(m.g, x, m.xi);
      if (bilinear(m.g, x, x) * bilinear(m.g, m.xi, m.xi) == gxxi * gxxi) continue;
      const S k = xi_sectional_curvature(m, a.curv.R, x);
      if (k != -(f * f)) return "k(e_" + std::to_string(i) + ", xi) = " + k.to_string();
    }
    return std::nullopt;
  });

  const std::string h_tfel = "torse-forming, einstein-like";
  cat.scalar("tf_el_f_squared", h_tfel, tf && el, [&] { return Sides{fr.two_n * f * f, -abc}; });
  cat.statement("tf_el_ricci_symmetric", h_tfel, tf && el,
                [&] { return iff(fr.drho.is_zero(), einstein, "nabla rho = 0", "Einstein"); });
  cat.scalar("tf_rl_f_squared", "torse-forming, soliton, einstein-like", tf && rlel,
             [&] { return Sides{fr.two_n * f * f, lambda + mu + nu}; });

  const std::string h_f5 = "F5 torse-forming, soliton, einstein-like";
  const bool f5rl = f5 && rlel;
  cat.entrywise("f5_nabla_ricci", h_f5, f5rl, 3, [&](const auto& i) {
    // (a+lambda){ b{g(x,phi y)eta(z) + g(x,phi z)eta(y)} - (b+c){g(phi x,phi y)eta(z) + g(phi x,phi z)eta(y)} }
    const S rhs = (ca + lambda) *
                  (cb * (fr.gphi(i[0], i[1]) * fr.eta(i[2]) + fr.gphi(i[0], i[2]) * fr.eta(i[1])) -
                   (cb + cc) * (fr.gpp(i[0], i[1]) * fr.eta(i[2]) + fr.gpp(i[0], i[2]) * fr.eta(i[1])));
    return Sides{fr.drho(i[0], i[1], i[2]), rhs};
  });
  cat.statement("f5_ricci_symmetric", h_f5, f5rl,
                [&] { return iff(fr.drho.is_zero(), einstein, "nabla rho = 0", "Einstein"); });
  cat.statement("f5_ricci_eta_parallel", h_f5, f5rl, [&]() -> std::optional<std::string> {
    if (fr.drho_horizontal_zero()) return std::nullopt;
    return "nabla rho does not vanish on ker eta";
  });
  cat.statement("f5_ricci_xi_parallel", h_f5, f5rl, [&]() -> std::optional<std::string> {
    if (fr.drho_along_xi_zero()) return std::nullopt;
    return "nabla_xi rho != 0";
  });

  // --- structural exclusion -------------------------------------------------
  cat.statement("sasaki_excludes_torse_forming", "always", true, [&]() -> std::optional<std::string> {
    if (sl && tf) return "both para-Sasaki-like and torse-forming";
    return std::nullopt;
  });

  return cat.take();
}

std::vector<std::string> identity_catalog() {
  // Names do not depend on the model; evaluate on the smallest abelian model.
  LieAlgebra<Scalar> L(3);
  Matrix<Scalar> phi(3, Scalar(0));
  phi(1, 2) = 1;
  phi(2, 1) = 1;
  auto a = analyze(make_model("abelian", L, identity_matrix<Scalar>(3), phi, basis_vector<Scalar>(3, 0)));
  std::vector<std::string> names;
  for (const auto& r : identity_suite(a)) names.push_back(r.name);
  return names;
}

bool all_hold(const std::vector<IdentityResult>& results) {
  for (const auto& r : results)
    if (!r.holds) return false;
  return true;
}

}  // namespace apapr
