#include "apapr/validation.hpp"

#include <sstream>

namespace apapr {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << v.check << " (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) out << (i ? "," : "") << v.indices[i];
    out << "): " << v.detail << "\n";
  }
  return out.str();
}

}  // namespace apapr
