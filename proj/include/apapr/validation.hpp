#pragma once

#include <string>
#include <vector>

namespace apapr {

struct Violation {
  std::string check;             // stable identifier, e.g. "jacobi", "phi_squared"
  std::vector<std::size_t> indices;
  std::string detail;
};

/// Accumulates failed checks; empty means everything held.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool has(const std::string& check) const {
    for (const auto& v : violations)
      if (v.check == check) return true;
    return false;
  }
  void add(std::string check, std::vector<std::size_t> indices, std::string detail) {
    violations.push_back({std::move(check), std::move(indices), std::move(detail)});
  }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
  std::string summary() const;
};

}  // namespace apapr
