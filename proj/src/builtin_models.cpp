#include <string>
#include <string_view>
#include <vector>

#include "apapr/error.hpp"
#include "apapr/model.hpp"

namespace apapr {

namespace {

// 5-dimensional para-Sasaki-like Lie group.
constexpr std::string_view kExample1 = R"json({
  "name": "example1",
  "dim": 5,
  "parameters": ["p", "q"],
  "brackets": [
    {"i": 0, "j": 1, "coeffs": {"2": "p", "3": "-1", "4": "q"}},
    {"i": 0, "j": 2, "coeffs": {"1": "-p", "3": "-q", "4": "-1"}},
    {"i": 0, "j": 3, "coeffs": {"1": "-1", "2": "q", "4": "p"}},
    {"i": 0, "j": 4, "coeffs": {"1": "-q", "2": "-1", "3": "-p"}}
  ],
  "phi": [
    ["0", "0", "0", "0", "0"],
    ["0", "0", "0", "1", "0"],
    ["0", "0", "0", "0", "1"],
    ["0", "1", "0", "0", "0"],
    ["0", "0", "1", "0", "0"]
  ],
  "xi": ["1", "0", "0", "0", "0"]
})json";

// 3-dimensional Lie group with torse-forming Reeb field.
constexpr std::string_view kExample2 = R"json({
  "name": "example2",
  "dim": 3,
  "parameters": ["p"],
  "brackets": [
    {"i": 0, "j": 1, "coeffs": {"1": "p"}},
    {"i": 0, "j": 2, "coeffs": {"2": "p"}}
  ],
  "metric": [
    ["1", "0", "0"],
    ["0", "1", "0"],
    ["0", "0", "1"]
  ],
  "phi": [
    ["0", "0", "0"],
    ["0", "0", "1"],
    ["0", "1", "0"]
  ],
  "xi": ["1", "0", "0"]
})json";

}  // namespace

std::vector<std::string> builtin_model_names() { return {"example1", "example2"}; }

std::string_view builtin_model_json(std::string_view name) {
  if (name == "example1") return kExample1;
  if (name == "example2") return kExample2;
  throw Error("unknown built-in model '" + std::string(name) + "'");
}

}  // namespace apapr
