#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "uavwpt/error.hpp"
#include "uavwpt/sustainability/gwp.hpp"

// Scenario definition files:
//   { "scenarios": [ { "label": "...", "initial_gwp": 4.7, "annual_rate": 0.14 },
//                    { "label": "...", "base_gwp": 3, "replacement_period": 5, "per_event_gwp": 3.3 } ] }

namespace uavwpt::sustainability {

inline ServicingScenario scenario_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw FormatError("scenario entry must be a JSON object");
  if (!j.contains("label") || !j["label"].is_string()) throw FormatError("scenario needs a string 'label'");
  const std::string label = j["label"].get<std::string>();
  const bool linear = j.contains("initial_gwp") || j.contains("annual_rate");
  const bool stepwise = j.contains("base_gwp") || j.contains("replacement_period") || j.contains("per_event_gwp");
  if (linear == stepwise) {
    throw FormatError("scenario '" + label +
                      "' must use exactly one of {initial_gwp, annual_rate} or "
                      "{base_gwp, replacement_period, per_event_gwp}");
  }
  auto number = [&](const char* key) {
    if (!j.contains(key) || !j[key].is_number()) {
      throw FormatError("scenario '" + label + "' is missing numeric field '" + key + "'");
    }
    return j[key].get<double>();
  };
  ServicingScenario sc{label, LinearAccrual{0.0, 0.0}};
  if (linear) {
    sc.model = LinearAccrual{number("initial_gwp"), number("annual_rate")};
  } else {
    sc.model = PeriodicReplacement{number("base_gwp"), number("replacement_period"), number("per_event_gwp")};
  }
  sc.validate();
  return sc;
}

inline nlohmann::json scenario_to_json(const ServicingScenario& sc) {
  nlohmann::json j;
  j["label"] = sc.label;
  if (const auto* lin = std::get_if<LinearAccrual>(&sc.model)) {
    j["initial_gwp"] = lin->initial_gwp;
    j["annual_rate"] = lin->annual_rate;
  } else {
    const auto& rep = std::get<PeriodicReplacement>(sc.model);
    j["base_gwp"] = rep.base_gwp;
    j["replacement_period"] = rep.replacement_period;
    j["per_event_gwp"] = rep.per_event_gwp;
  }
  return j;
}

/// Accepts either `{"scenarios": [...]}` or a bare array.
inline std::vector<ServicingScenario> scenarios_from_json(const nlohmann::json& doc) {
  const nlohmann::json* list = &doc;
  if (doc.is_object()) {
    if (!doc.contains("scenarios")) throw FormatError("document has no 'scenarios' section");
    list = &doc["scenarios"];
  }
  if (!list->is_array()) throw FormatError("'scenarios' must be an array");
  std::vector<ServicingScenario> out;
  for (const auto& entry : *list) out.push_back(scenario_from_json(entry));
  return out;
}

}  // namespace uavwpt::sustainability
