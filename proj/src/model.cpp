#include "apapr/model.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace apapr {

namespace {

using nlohmann::json;

ParamExpr parse_entry(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_expr(value.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return ParamExpr(Scalar(value.get<long>()));
  throw ParseError(where + ": expected an expression string");
}

std::size_t index_in_range(const json& value, std::size_t dim, const std::string& where) {
  if (!value.is_number_unsigned() && !value.is_number_integer())
    throw ParseError(where + ": expected a nonnegative integer index");
  const long idx = value.get<long>();
  if (idx < 0 || static_cast<std::size_t>(idx) >= dim)
    throw ParseError(where + ": index " + std::to_string(idx) + " out of range for dim " + std::to_string(dim));
  return static_cast<std::size_t>(idx);
}

Matrix<ParamExpr> parse_matrix(const json& rows, std::size_t dim, const std::string& key) {
  if (!rows.is_array() || rows.size() != dim)
    throw ParseError("'" + key + "' must be an array of " + std::to_string(dim) + " rows");
  Matrix<ParamExpr> m(dim, ParamExpr(0));
  for (std::size_t i = 0; i < dim; ++i) {
    if (!rows[i].is_array() || rows[i].size() != dim)
      throw ParseError("'" + key + "' row " + std::to_string(i) + " must have " + std::to_string(dim) + " entries");
    for (std::size_t j = 0; j < dim; ++j)
      m(i, j) = parse_entry(rows[i][j], key + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

void check_declared(const ParamExpr& e, const std::set<std::string>& declared, const std::string& where) {
  for (const std::string& name : e.parameters())
    if (!declared.count(name)) throw ParseError(where + ": undeclared parameter '" + name + "'");
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read model file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

ModelSpec parse_model_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid model JSON: ") + e.what(), e.byte == 0 ? 0 : e.byte - 1);
  }
  if (!doc.is_object()) throw ParseError("model file must be a JSON object");

  ModelSpec spec;
  try {
    spec.name = doc.value("name", std::string("unnamed"));
    if (!doc.contains("dim")) throw ParseError("missing 'dim'");
    const long dim = doc.at("dim").get<long>();
    if (dim < 3 || dim % 2 == 0) throw ParseError("'dim' must be odd and at least 3, got " + std::to_string(dim));
    spec.dim = static_cast<std::size_t>(dim);
    spec.parameters = doc.value("parameters", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid model header: ") + e.what());
  }

  const std::set<std::string> declared(spec.parameters.begin(), spec.parameters.end());
  if (declared.size() != spec.parameters.size()) throw ParseError("duplicate parameter declaration");
  for (const std::string& p : spec.parameters) {
    const ParamExpr probe = parse_expr(p);
    if (probe != ParamExpr::parameter(p)) throw ParseError("invalid parameter name '" + p + "'");
  }

  const std::size_t d = spec.dim;
  if (doc.contains("brackets")) {
    const json& brackets = doc.at("brackets");
    if (!brackets.is_array()) throw ParseError("'brackets' must be an array");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t n = 0; n < brackets.size(); ++n) {
      const json& b = brackets[n];
      const std::string where = "brackets[" + std::to_string(n) + "]";
      if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("coeffs"))
        throw ParseError(where + ": expected {\"i\", \"j\", \"coeffs\"}");
      BracketSpec spec_b;
      spec_b.i = index_in_range(b.at("i"), d, where + ".i");
      spec_b.j = index_in_range(b.at("j"), d, where + ".j");
      if (spec_b.i >= spec_b.j) throw ParseError(where + ": requires i < j");
      if (!seen.insert({spec_b.i, spec_b.j}).second) throw ParseError(where + ": duplicate bracket");
      if (!b.at("coeffs").is_object()) throw ParseError(where + ".coeffs must be an object");
      for (const auto& [key, value] : b.at("coeffs").items()) {
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          const long parsed = std::stol(key, &used);
          if (used != key.size() || parsed < 0) throw std::invalid_argument(key);
          k = static_cast<std::size_t>(parsed);
        } catch (const std::exception&) {
          throw ParseError(where + ".coeffs: key '" + key + "' is not an index");
        }
        if (k >= d) throw ParseError(where + ".coeffs: index " + key + " out of range");
        ParamExpr e = parse_entry(value, where + ".coeffs." + key);
        check_declared(e, declared, where);
        if (!e.is_zero()) spec_b.coeffs[k] = std::move(e);
      }
      spec.brackets.push_back(std::move(spec_b));
    }
  }

  if (doc.contains("metric")) {
    spec.metric = parse_matrix(doc.at("metric"), d, "metric");
  } else {
    spec.metric = Matrix<ParamExpr>(d, ParamExpr(0));
    for (std::size_t i = 0; i < d; ++i) spec.metric(i, i) = ParamExpr(1);
  }
  if (!doc.contains("phi")) throw ParseError("missing 'phi'");
  spec.phi = parse_matrix(doc.at("phi"), d, "phi");

  spec.xi = Vector<ParamExpr>(d, ParamExpr(0));
  if (doc.contains("xi")) {
    const json& xi = doc.at("xi");
    if (!xi.is_array() || xi.size() != d) throw ParseError("'xi' must have " + std::to_string(d) + " entries");
    for (std::size_t i = 0; i < d; ++i) spec.xi(i) = parse_entry(xi[i], "xi[" + std::to_string(i) + "]");
  } else {
    spec.xi(0) = ParamExpr(1);
  }

  for (std::size_t i = 0; i < d; ++i) {
    check_declared(spec.xi(i), declared, "xi");
    for (std::size_t j = 0; j < d; ++j) {
      check_declared(spec.metric(i, j), declared, "metric");
      check_declared(spec.phi(i, j), declared, "phi");
      if (spec.metric(i, j) != spec.metric(j, i))
        throw ParseError("'metric' is not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  return spec;
}

void check_binding(const ModelSpec& spec, const Binding& binding, bool require_complete) {
  for (const auto& [name, value] : binding)
    if (std::find(spec.parameters.begin(), spec.parameters.end(), name) == spec.parameters.end())
      throw Error("parameter '" + name + "' is not declared by model '" + spec.name + "'");
  if (require_complete)
    for (const std::string& p : spec.parameters)
      if (!binding.count(p)) throw UnboundParameter(p);
}

ModelCheck check_model(const ApaprModel<Scalar>& m) {
  ModelCheck check;
  check.lie = validate_lie(m.algebra);
  check.structure = validate_structure(m);
  return check;
}

ApaprModel<Scalar> load_model(const ModelSpec& spec, const Binding& binding) {
  ApaprModel<Scalar> m = instantiate<Scalar>(spec, binding);
  ModelCheck check = check_model(m);
  if (!check.ok()) {
    ValidationReport all = check.lie;
    all.append(check.structure);
    throw ModelValidationError(std::move(all));
  }
  return m;
}

ApaprModel<Scalar> load_model(std::string_view json_text, const Binding& binding) {
  return load_model(parse_model_spec(json_text), binding);
}

ModelSpec resolve_model(const std::string& name_or_path) {
  for (const std::string& builtin : builtin_model_names())
    if (builtin == name_or_path) return parse_model_spec(builtin_model_json(builtin));

  namespace fs = std::filesystem;
  if (fs::is_regular_file(name_or_path)) return parse_model_spec(read_file(name_or_path));

  if (const char* env = std::getenv("APAPR_MODEL_PATH")) {
    std::stringstream dirs(env);
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
      if (dir.empty()) continue;
      for (const std::string& candidate : {name_or_path, name_or_path + ".json"}) {
        const fs::path path = fs::path(dir) / candidate;
        if (fs::is_regular_file(path)) return parse_model_spec(read_file(path));
      }
    }
  }
  throw Error("model '" + name_or_path + "' is neither a built-in, a file, nor found on APAPR_MODEL_PATH");
}

}  // namespace apapr
