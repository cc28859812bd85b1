// config.hpp
// Declarative scenario documents: a JSON object mirroring ShutterScenario
// with complex numbers as [re, im] pairs. Omitted pre/post states fall back
// to the three-shutter defaults; other shutter counts must spell them out.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shutterbox/shutter.hpp"

namespace shutterbox {

// Carries the offending field path, e.g. "photon_amplitudes[1]".
class ConfigError : public Error {
public:
    ConfigError(std::string field, const std::string& message)
        : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct ScenarioConfig {
    std::vector<std::string> shutters;
    std::vector<std::string> photon_modes;
    std::vector<Cx> photon_amplitudes;
    std::optional<std::vector<Cx>> pre_state;
    std::optional<std::vector<Cx>> post_state;
};

// Throws ConfigError with field identification on any malformed input.
// Unknown fields are rejected.
ScenarioConfig parse_scenario_config(const nlohmann::json& doc);

// Reads and parses a config file; JSON syntax errors are reported with the
// parser's byte position.
ScenarioConfig load_scenario_config(const std::string& path);

nlohmann::json to_json(const ScenarioConfig& config);

// Applies the fallback rules and validates the result.
ShutterScenario build_scenario(const ScenarioConfig& config);

// Fully explicit config for a scenario (pre/post always spelled out).
ScenarioConfig config_of(const ShutterScenario& scenario);

// The standard three-shutter document in minimal form (pre/post omitted,
// exercising the fallback rules).
nlohmann::json default_config_json();

}  // namespace shutterbox
