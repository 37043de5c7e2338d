#pragma once

#include <vector>

#include <json.hpp>

#include "apapr/identities.hpp"
#include "apapr/model.hpp"
#include "apapr/soliton.hpp"

namespace apapr {

// Report serialization. Scalars are written as "a" or "a/b" strings; objects
// use nlohmann::json's sorted keys, so dump() output is canonical and
// parse(dump(x)).dump() reproduces it byte for byte.

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const Vector<Scalar>& v);
nlohmann::json to_json(const Matrix<Scalar>& m);
nlohmann::json to_json(const Binding& b);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const ModelCheck& c);
nlohmann::json to_json(const FitResult<Scalar>& fit, const char* const (&names)[3]);
nlohmann::json to_json(const ClassReport<Scalar>& c);
nlohmann::json to_json(const TheoremReport& t);
nlohmann::json to_json(const std::vector<IdentityResult>& results);

/// Curvature summary: tau, rho, and the xi-sectional curvature of every frame
/// vector that is not parallel to xi.
nlohmann::json curvature_summary(const Analysis<Scalar>& a);

}  // namespace apapr
