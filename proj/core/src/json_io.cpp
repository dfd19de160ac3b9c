#include <json.hpp>

#include "mf24/spaces.hpp"

namespace mf24 {

std::string to_json(const SolveResult& result, int indent) {
  nlohmann::ordered_json doc;
  doc["space"] = result.space.name();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [label, value] : result.coefficients) {
    coeffs[label] = to_string(value);
  }
  doc["coefficients"] = std::move(coeffs);
  doc["verified_to"] = result.verified_to;
  return doc.dump(indent);
}

}  // namespace mf24
