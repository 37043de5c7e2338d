#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "apapr/error.hpp"
#include "apapr/lie_algebra.hpp"
#include "apapr/param_expr.hpp"
#include "apapr/structure.hpp"
#include "apapr/validation.hpp"

namespace apapr {

struct BracketSpec {
  std::size_t i = 0;
  std::size_t j = 0;  // i < j; [e_j, e_i] is filled in by antisymmetry
  std::map<std::size_t, ParamExpr> coeffs;
};

/// Parsed, still parameterized model file.
struct ModelSpec {
  std::string name;
  std::size_t dim = 0;
  std::vector<std::string> parameters;
  std::vector<BracketSpec> brackets;
  Matrix<ParamExpr> metric;  // identity unless given
  Matrix<ParamExpr> phi;     // phi[i][j] = i-th component of phi e_j
  Vector<ParamExpr> xi;      // e_0 unless given
};

/// Parses the JSON model format. Throws ParseError on malformed JSON, on
/// out-of-range or unordered bracket indices, on shape mismatches and on
/// identifiers that are not declared parameters.
ModelSpec parse_model_spec(std::string_view json_text);

/// Model failed Lie or structure validation; carries the full report.
class ModelValidationError : public Error {
 public:
  explicit ModelValidationError(ValidationReport report)
      : Error("model validation failed:\n" + report.summary()), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Throws UnboundParameter for the first declared parameter missing from the
/// binding and Error for a binding key that is not declared.
void check_binding(const ModelSpec& spec, const Binding& binding, bool require_complete);

/// Builds the model over T. For T = Scalar the binding must cover every
/// declared parameter; for T = ParamExpr unbound parameters stay symbolic.
template <class T>
ApaprModel<T> instantiate(const ModelSpec& spec, const Binding& binding) {
  constexpr bool exact = std::is_same_v<T, Scalar>;
  check_binding(spec, binding, exact);
  auto value = [&](const ParamExpr& e) -> T {
    if constexpr (exact) {
      return e.eval(binding);
    } else {
      return e.substitute(binding);
    }
  };
  const std::size_t d = spec.dim;
  LieAlgebra<T> algebra(d);
  for (const BracketSpec& b : spec.brackets) {
    Vector<T> coeffs(d, T(0));
    for (const auto& [k, e] : b.coeffs) coeffs(k) = value(e);
    algebra.set_bracket(b.i, b.j, coeffs);
  }
  return make_model(spec.name, std::move(algebra), spec.metric.map(value), spec.phi.map(value),
                    spec.xi.map(value));
}

struct ModelCheck {
  ValidationReport lie;
  ValidationReport structure;
  bool ok() const { return lie.ok() && structure.ok(); }
};

ModelCheck check_model(const ApaprModel<Scalar>& m);

/// instantiate<Scalar> followed by check_model; throws ModelValidationError.
ApaprModel<Scalar> load_model(const ModelSpec& spec, const Binding& binding);
ApaprModel<Scalar> load_model(std::string_view json_text, const Binding& binding);

std::vector<std::string> builtin_model_names();
/// Embedded JSON text of a built-in model; throws Error for unknown names.
std::string_view builtin_model_json(std::string_view name);

/// Resolves a model argument: a built-in name, an existing file path, or a
/// name (with or without ".json") found in a directory of APAPR_MODEL_PATH
/// (colon-separated).
ModelSpec resolve_model(const std::string& name_or_path);

}  // namespace apapr
