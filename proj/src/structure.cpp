#include "apapr/structure.hpp"

namespace apapr {

Signature associated_signature(const ApaprModel<Scalar>& m) { return signature(m.g_assoc); }

ValidationReport validate_structure(const ApaprModel<Scalar>& m) {
  ValidationReport report = validate_apapr(m);
  if (!report.ok()) return report;
  const Signature sig = associated_signature(m);
  const Signature expected{m.n + 1, m.n, 0};
  if (!(sig == expected))
    report.add("assoc_signature", {},
               "g~ has signature (" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) +
                   ") with " + std::to_string(sig.zero) + " zero eigenvalues, expected (" +
                   std::to_string(m.n + 1) + "," + std::to_string(m.n) + ")");
  return report;
}

}  // namespace apapr
