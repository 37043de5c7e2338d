#pragma once

#include <string>
#include <vector>

#include "apapr/soliton.hpp"

namespace apapr {

/// One catalog entry. Entries whose hypothesis does not hold on the model are
/// still listed, with applicable = false and holds = true.
struct IdentityResult {
  std::string name;        // stable identifier, see README
  std::string hypothesis;  // e.g. "para-Sasaki-like", "einstein-like"
  bool applicable = false;
  bool holds = true;
  std::string witness;     // first failing index tuple with both sides, or empty
};

/// Evaluates, exactly and entrywise, every identity of the catalog whose
/// hypothesis the model satisfies. Order is the fixed catalog order.
std::vector<IdentityResult> identity_suite(const Analysis<Scalar>& a);

/// Names of every catalog entry, in report order.
std::vector<std::string> identity_catalog();

bool all_hold(const std::vector<IdentityResult>& results);

}  // namespace apapr
