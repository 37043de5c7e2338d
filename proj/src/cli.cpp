#include "apapr/cli.hpp"

#include <future>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "apapr/identities.hpp"
#include "apapr/model.hpp"
#include "apapr/report_json.hpp"

namespace apapr {

namespace {

using nlohmann::json;

struct UsageError : Error {
  using Error::Error;
};

struct CommandResult {
  json data;
  std::string text;
  bool pass = true;
};

Binding parse_bindings(const std::vector<std::string>& params) {
  Binding b;
  for (const std::string& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=rational, got '" + p + "'");
    const std::string name = p.substr(0, eq);
    Scalar value;
    try {
      value = Scalar::parse(p.substr(eq + 1));
    } catch (const Error& e) {
      throw UsageError("--param " + name + ": " + e.what());
    }
    if (!b.emplace(name, value).second) throw UsageError("parameter '" + name + "' bound more than once");
  }
  return b;
}

std::vector<Binding> parse_grid(const std::vector<std::string>& grid) {
  std::vector<Binding> points{Binding{}};
  std::set<std::string> seen;
  for (const std::string& axis : grid) {
    const auto eq = axis.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--grid expects name=v1,v2,..., got '" + axis + "'");
    const std::string name = axis.substr(0, eq);
    if (!seen.insert(name).second) throw UsageError("grid axis '" + name + "' given more than once");
    std::vector<Scalar> values;
    std::stringstream list(axis.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
      try {
        values.push_back(Scalar::parse(item));
      } catch (const Error& e) {
        throw UsageError("--grid " + name + ": " + e.what());
      }
    }
    if (values.empty()) throw UsageError("--grid " + name + " has no values");
    std::vector<Binding> next;
    for (const Binding& b : points)
      for (const Scalar& v : values) {
        Binding nb = b;
        nb[name] = v;
        next.push_back(std::move(nb));
      }
    points = std::move(next);
  }
  return points;
}

std::string triple_text(const std::array<Scalar, 3>& t) {
  return "(" + t[0].to_string() + "," + t[1].to_string() + "," + t[2].to_string() + ")";
}

std::string yes(bool b) { return b ? "true" : "false"; }

std::string fit_text(const FitResult<Scalar>& einstein, const FitResult<Scalar>& soliton) {
  std::ostringstream t;
  t << "einstein-like (a,b,c) = " << triple_text(einstein.constants) << " exact: " << yes(einstein.exact)
    << " [" << einstein_kind(einstein) << "]\n";
  t << "soliton (lambda,mu,nu) = " << triple_text(soliton.constants) << " exact: " << yes(soliton.exact) << " ["
    << soliton_kind(soliton) << "]\n";
  return t.str();
}

std::string theorem_text(const TheoremReport& r) {
  std::ostringstream t;
  t << "theorem " << r.theorem << ": " << (r.holds() ? "holds" : "FAILS")
    << (r.hypotheses_hold ? "" : " (hypotheses do not hold)") << "\n";
  for (const auto& reason : r.reasons) t << "  " << reason << "\n";
  if (r.hypotheses_hold && r.einstein.exact && r.soliton.exact) {
    t << "  (a,b,c) = " << triple_text(r.einstein.constants) << ", (lambda,mu,nu) = "
      << triple_text(r.soliton.constants) << "\n";
    for (const auto* list : {&r.constant_relations, &r.sum_identities, &r.special_case_checks})
      for (const auto& rel : *list) t << "  [" << (rel.holds ? "ok" : "FAIL") << "] " << rel.relation << "\n";
    t << "  special cases:";
    for (const auto& c : r.special_cases) t << " (" << c << ")";
    t << "\n";
  }
  return t.str();
}

std::string report_text(const ModelCheck& check) {
  std::ostringstream t;
  t << "lie algebra: " << (check.lie.ok() ? "ok" : "INVALID") << "\n";
  if (!check.lie.ok()) t << check.lie.summary();
  t << "apapR structure: " << (check.structure.ok() ? "ok" : "INVALID") << "\n";
  if (!check.structure.ok()) t << check.structure.summary();
  return t.str();
}

CommandResult run_command(const std::string& command, const ModelSpec& spec, const Binding& binding) {
  CommandResult res;
  res.data = {{"command", command}, {"model", spec.name}, {"binding", to_json(binding)}};

  if (command == "validate") {
    const ApaprModel<Scalar> m = instantiate<Scalar>(spec, binding);
    const ModelCheck check = check_model(m);
    res.data["validation"] = to_json(check);
    res.text = report_text(check);
    res.pass = check.ok();
    return res;
  }

  const Analysis<Scalar> a = analyze(load_model(spec, binding));
  static const char* const abc[3] = {"a", "b", "c"};
  static const char* const lmn[3] = {"lambda", "mu", "nu"};

  if (command == "report") {
    std::ostringstream t;
    const auto& c = a.classes;
    res.data["classes"] = to_json(c);
    res.data["curvature"] = curvature_summary(a);
    res.data["einstein_like"] = to_json(a.einstein, abc);
    res.data["soliton"] = to_json(a.soliton, lmn);
    res.data["einstein_kind"] = einstein_kind(a.einstein);
    res.data["soliton_kind"] = soliton_kind(a.soliton);
    t << "model: " << spec.name << " (dim " << a.model.dim() << ", n = " << a.model.n << ")\n";
    t << "F0: " << yes(c.is_F0) << "\n";
    t << "para-Sasaki-like: " << yes(c.is_para_sasaki_like) << "\n";
    t << "torse-forming: ";
    if (c.torse_forming)
      t << "f = " << c.torse_forming->f << (c.torse_forming->trivial ? " (trivial)" : "") << "\n";
    else
      t << "no\n";
    t << "F5 form: " << yes(c.is_F5_form) << "\n";
    t << "lee forms: theta(xi) = " << c.lee.theta_xi << ", theta*(xi) = " << c.lee.theta_star_xi
      << ", omega = " << (c.lee.omega.is_zero() ? "0" : "nonzero") << "\n";
    t << "scalar curvature tau = " << a.curv.tau << "\n";
    for (const auto& [key, value] : res.data["curvature"]["xi_sectional"].items())
      t << "k(" << key << ", xi) = " << value.get<std::string>() << "\n";
    t << fit_text(a.einstein, a.soliton);
    res.text = t.str();
    return res;
  }
  if (command == "fit") {
    res.data["einstein_like"] = to_json(a.einstein, abc);
    res.data["soliton"] = to_json(a.soliton, lmn);
    res.data["lie_derivative_g"] = to_json(a.lie_g);
    res.text = fit_text(a.einstein, a.soliton);
    return res;
  }
  if (command == "theorems") {
    const TheoremReport ta = verify_theorem_A(a);
    const TheoremReport tb = verify_theorem_B(a);
    res.data["theorems"] = json::array({to_json(ta), to_json(tb)});
    res.text = theorem_text(ta) + theorem_text(tb);
    res.pass = ta.holds() && tb.holds();
    return res;
  }
  if (command == "identities") {
    const auto results = identity_suite(a);
    res.data["identities"] = to_json(results);
    std::ostringstream t;
    for (const auto& r : results) {
      if (!r.applicable) {
        t << "[skip] " << r.name << "\n";
        continue;
      }
      t << (r.holds ? "[ok]   " : "[FAIL] ") << r.name;
      if (!r.holds) t << "  " << r.witness;
      t << "\n";
    }
    res.text = t.str();
    res.pass = all_hold(results);
    return res;
  }
  throw UsageError("unknown command '" + command + "'");
}

/// Runs one command; model errors become a failed result instead of throwing.
CommandResult run_guarded(const std::string& command, const ModelSpec& spec, const Binding& binding) {
  try {
    return run_command(command, spec, binding);
  } catch (const ModelValidationError& e) {
    CommandResult res;
    res.data = {{"command", command}, {"model", spec.name}, {"binding", to_json(binding)},
                {"error", "model validation failed"}, {"validation", to_json(e.report())}};
    res.text = std::string("error: ") + e.what();
    res.pass = false;
    return res;
  }
}

void emit(std::ostream& out, const std::string& format, const CommandResult& r) {
  if (format == "json") {
    json data = r.data;
    data["pass"] = r.pass;
    out << data.dump(2) << "\n";
  } else {
    out << r.text;
    if (!r.text.empty() && r.text.back() != '\n') out << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"apapr: exact curvature, soliton fitting and identity checks for apapR structures on Lie algebras"};
  app.name("apapr");
  app.require_subcommand(1);

  std::string model;
  std::vector<std::string> params;
  std::string format = "text";
  std::vector<std::string> grid;
  std::string sweep_run = "theorems";

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "Lie algebra and structure axiom reports"},
      {"report", "classification, curvature summary and fitted constants"},
      {"fit", "Einstein-like and soliton fits"},
      {"theorems", "verify theorems A and B"},
      {"identities", "evaluate the identity catalog"},
      {"sweep", "repeat a command over a rational parameter grid"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--model", model, "built-in name, file path, or name on APAPR_MODEL_PATH")->required();
    sub->add_option("--param", params, "parameter binding name=rational (repeatable)");
    sub->add_option("--output", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (name == "sweep") {
      sub->add_option("--grid", grid, "axis name=v1,v2,... (repeatable; cartesian product)")->required();
      sub->add_option("--run", sweep_run, "command to repeat")
          ->check(CLI::IsMember({"validate", "report", "fit", "theorems", "identities"}));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    const Binding fixed = parse_bindings(params);
    ModelSpec spec;
    try {
      spec = resolve_model(model);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitFailure;
    }

    if (command != "sweep") {
      const CommandResult r = run_guarded(command, spec, fixed);
      emit(out, format, r);
      return r.pass ? kExitOk : kExitFailure;
    }

    std::vector<Binding> points = parse_grid(grid);
    for (Binding& p : points)
      for (const auto& [name, value] : fixed) {
        if (p.count(name)) throw UsageError("parameter '" + name + "' is both bound and swept");
        p[name] = value;
      }
    std::vector<std::future<CommandResult>> jobs;
    for (const Binding& p : points)
      jobs.push_back(std::async(std::launch::async, [&spec, &sweep_run, p] { return run_guarded(sweep_run, spec, p); }));

    json rows = json::array();
    std::ostringstream text;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      CommandResult r = jobs[i].get();
      passed += r.pass ? 1 : 0;
      rows.push_back({{"binding", to_json(points[i])}, {"pass", r.pass}, {"result", r.data}});
      text << (r.pass ? "[pass] " : "[FAIL] ");
      const char* sep = "";
      for (const auto& [name, value] : points[i]) {
        text << sep << name << "=" << value;
        sep = " ";
      }
      text << "\n";
    }
    CommandResult agg;
    agg.data = {{"command", "sweep"}, {"run", sweep_run}, {"model", spec.name}, {"points", rows},
                {"passed", passed}, {"failed", points.size() - passed}};
    text << passed << "/" << points.size() << " grid points passed\n";
    agg.text = text.str();
    agg.pass = passed == points.size();
    emit(out, format, agg);
    return agg.pass ? kExitOk : kExitFailure;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace apapr
