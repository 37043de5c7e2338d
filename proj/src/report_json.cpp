#include "apapr/report_json.hpp"

namespace apapr {

using nlohmann::json;

json to_json(const Scalar& s) { return s.to_string(); }

json to_json(const Vector<Scalar>& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(to_json(v(i)));
  return out;
}

json to_json(const Matrix<Scalar>& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Binding& b) {
  json out = json::object();
  for (const auto& [name, value] : b) out[name] = to_json(value);
  return out;
}

json to_json(const ValidationReport& r) {
  json out = json::array();
  for (const auto& v : r.violations) out.push_back({{"check", v.check}, {"indices", v.indices}, {"detail", v.detail}});
  return out;
}

json to_json(const ModelCheck& c) {
  return {{"lie", to_json(c.lie)}, {"structure", to_json(c.structure)}, {"ok", c.ok()}};
}

json to_json(const FitResult<Scalar>& fit, const char* const (&names)[3]) {
  json constants = json::object();
  for (std::size_t i = 0; i < 3; ++i) constants[names[i]] = to_json(fit.constants[i]);
  return {{"constants", constants},
          {"ordered", json::array({to_json(fit.constants[0]), to_json(fit.constants[1]), to_json(fit.constants[2])})},
          {"exact", fit.exact},
          {"residual", to_json(fit.residual)}};
}

json to_json(const ClassReport<Scalar>& c) {
  json tf = nullptr;
  if (c.torse_forming) tf = {{"f", to_json(c.torse_forming->f)}, {"trivial", c.torse_forming->trivial}};
  return {{"F0", c.is_F0},
          {"para_sasaki_like", c.is_para_sasaki_like},
          {"torse_forming", tf},
          {"F5_form", c.is_F5_form},
          {"lee_signature",
           {{"theta_xi", to_json(c.lee.theta_xi)},
            {"theta_star_xi", to_json(c.lee.theta_star_xi)},
            {"omega", to_json(c.lee.omega)}}}};
}

namespace {

json relations(const std::vector<Relation>& rs) {
  json out = json::array();
  for (const auto& r : rs) out.push_back({{"relation", r.relation}, {"holds", r.holds}, {"detail", r.detail}});
  return out;
}

}  // namespace

json to_json(const TheoremReport& t) {
  static const char* const abc[3] = {"a", "b", "c"};
  static const char* const lmn[3] = {"lambda", "mu", "nu"};
  return {{"theorem", std::string(1, t.theorem)},
          {"hypotheses_hold", t.hypotheses_hold},
          {"reasons", t.reasons},
          {"einstein_like", to_json(t.einstein, abc)},
          {"soliton", to_json(t.soliton, lmn)},
          {"equivalence_holds", t.equivalence_holds},
          {"constant_relations", relations(t.constant_relations)},
          {"sum_identities", relations(t.sum_identities)},
          {"special_cases", t.special_cases},
          {"special_case_checks", relations(t.special_case_checks)},
          {"f", t.f ? to_json(*t.f) : json(nullptr)},
          {"holds", t.holds()}};
}

json to_json(const std::vector<IdentityResult>& results) {
  json out = json::array();
  for (const auto& r : results)
    out.push_back({{"name", r.name},
                   {"hypothesis", r.hypothesis},
                   {"applicable", r.applicable},
                   {"holds", r.holds},
                   {"witness", r.witness}});
  return out;
}

json curvature_summary(const Analysis<Scalar>& a) {
  json sections = json::object();
  const auto& m = a.model;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    const Vector<Scalar> x = basis_vector<Scalar>(m.dim(), i);
    const Scalar gxxi = bilinear(m.g, x, m.xi);
    if (bilinear(m.g, x, x) * bilinear(m.g, m.xi, m.xi) == gxxi * gxxi) continue;
    sections["e" + std::to_string(i)] = to_json(xi_sectional_curvature(m, a.curv.R, x));
  }
  return {{"tau", to_json(a.curv.tau)}, {"rho", to_json(a.curv.rho)}, {"xi_sectional", sections}};
}

}  // namespace apapr
