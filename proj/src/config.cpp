#include "shutterbox/config.hpp"

#include <cmath>
#include <fstream>
#include <unordered_set>

namespace shutterbox {

namespace {

std::string indexed(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

std::vector<std::string> parse_label_list(const nlohmann::json& doc, const std::string& field) {
    if (!doc.contains(field)) throw ConfigError(field, "required field is missing");
    const auto& node = doc.at(field);
    if (!node.is_array() || node.empty())
        throw ConfigError(field, "must be a nonempty array of strings");
    std::vector<std::string> labels;
    labels.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        if (!node[i].is_string() || node[i].get<std::string>().empty())
            throw ConfigError(indexed(field, i), "must be a nonempty string");
        labels.push_back(node[i].get<std::string>());
    }
    return labels;
}

std::vector<Cx> parse_complex_list(const nlohmann::json& node, const std::string& field) {
    if (!node.is_array() || node.empty())
        throw ConfigError(field, "must be a nonempty array of [re, im] pairs");
    std::vector<Cx> values;
    values.reserve(node.size());
    for (std::size_t i = 0; i < node.size(); ++i) {
        const auto& pair = node[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
            throw ConfigError(indexed(field, i), "must be a [re, im] pair of numbers");
        const Cx value(pair[0].get<double>(), pair[1].get<double>());
        if (!is_finite(value)) throw ConfigError(indexed(field, i), "must be finite");
        values.push_back(value);
    }
    return values;
}

double norm_of(const std::vector<Cx>& v) {
    double sum = 0.0;
    for (const Cx& a : v) sum += std::norm(a);
    return std::sqrt(sum);
}

void require_normalized_field(const std::vector<Cx>& v, const std::string& field) {
    const double n = norm_of(v);
    if (std::abs(n - 1.0) > eps_norm)
        throw ConfigError(field, "must be normalized (norm is " + std::to_string(n) + ")");
}

nlohmann::json complex_list_json(const std::vector<Cx>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const Cx& v : values) out.push_back({v.real(), v.imag()});
    return out;
}

}  // namespace

ScenarioConfig parse_scenario_config(const nlohmann::json& doc) {
    if (!doc.is_object()) throw ConfigError("", "config document must be a JSON object");

    static const std::unordered_set<std::string> known_fields{
        "shutters", "photon_modes", "photon_amplitudes", "pre_state", "post_state"};
    for (const auto& [key, value] : doc.items())
        if (!known_fields.count(key)) throw ConfigError(key, "unknown field");

    ScenarioConfig config;
    config.shutters = parse_label_list(doc, "shutters");
    config.photon_modes = parse_label_list(doc, "photon_modes");

    if (!doc.contains("photon_amplitudes"))
        throw ConfigError("photon_amplitudes", "required field is missing");
    config.photon_amplitudes = parse_complex_list(doc.at("photon_amplitudes"),
                                                  "photon_amplitudes");
    if (config.photon_amplitudes.size() != config.photon_modes.size())
        throw ConfigError("photon_amplitudes", "needs one [re, im] pair per photon mode");
    require_normalized_field(config.photon_amplitudes, "photon_amplitudes");

    for (const char* field : {"pre_state", "post_state"}) {
        if (!doc.contains(field)) continue;
        std::vector<Cx> state = parse_complex_list(doc.at(field), field);
        if (state.size() != config.shutters.size())
            throw ConfigError(field, "needs one [re, im] pair per shutter");
        require_normalized_field(state, field);
        if (std::string(field) == "pre_state")
            config.pre_state = std::move(state);
        else
            config.post_state = std::move(state);
    }

    // Structural checks the scenario would reject anyway, reported here
    // with field names.
    std::unordered_set<std::string> shutter_set;
    for (std::size_t i = 0; i < config.shutters.size(); ++i)
        if (!shutter_set.insert(config.shutters[i]).second)
            throw ConfigError(indexed("shutters", i), "duplicate shutter label");
    std::unordered_set<std::string> mode_set;
    for (std::size_t i = 0; i < config.photon_modes.size(); ++i) {
        if (!shutter_set.count(config.photon_modes[i]))
            throw ConfigError(indexed("photon_modes", i), "not a shutter label");
        if (!mode_set.insert(config.photon_modes[i]).second)
            throw ConfigError(indexed("photon_modes", i), "duplicate photon mode");
    }
    if (config.shutters.size() < 2) throw ConfigError("shutters", "need at least two shutters");
    if (config.photon_modes.size() >= config.shutters.size())
        throw ConfigError("photon_modes", "must leave at least one shutter out of photon reach");

    return config;
}

ScenarioConfig load_scenario_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("", "cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("", "invalid JSON in '" + path + "': " + e.what());
    }
    return parse_scenario_config(doc);
}

nlohmann::json to_json(const ScenarioConfig& config) {
    nlohmann::json doc;
    doc["shutters"] = config.shutters;
    doc["photon_modes"] = config.photon_modes;
    doc["photon_amplitudes"] = complex_list_json(config.photon_amplitudes);
    if (config.pre_state) doc["pre_state"] = complex_list_json(*config.pre_state);
    if (config.post_state) doc["post_state"] = complex_list_json(*config.post_state);
    return doc;
}

ShutterScenario build_scenario(const ScenarioConfig& config) {
    const SpaceShape space("shutter", config.shutters);
    const bool three_shutters = config.shutters.size() == 3;

    if (!config.pre_state && !three_shutters)
        throw ConfigError("pre_state", "required unless the scenario has exactly 3 shutters");
    if (!config.post_state && !three_shutters)
        throw ConfigError("post_state", "required unless the scenario has exactly 3 shutters");

    StateVector pre = config.pre_state ? StateVector(space, *config.pre_state, true)
                                       : StateVector::uniform(space);

    StateVector post = StateVector::zero(space);
    std::vector<StateVector> extension;
    if (config.post_state) {
        post = StateVector(space, *config.post_state, true);
    } else {
        ThreeBoxPostSelection three_box = three_box_post_selection(space);
        post = three_box.post;
        extension = std::move(three_box.extension);
    }

    try {
        return ShutterScenario(config.shutters, config.photon_modes, config.photon_amplitudes,
                               std::move(pre), std::move(post), std::move(extension));
    } catch (const ConfigError&) {
        throw;
    } catch (const Error& e) {
        throw ConfigError("", e.what());
    }
}

ScenarioConfig config_of(const ShutterScenario& scenario) {
    ScenarioConfig config;
    config.shutters = scenario.shutters();
    config.photon_modes = scenario.photon_modes();
    config.photon_amplitudes = scenario.photon_amplitudes();
    config.pre_state = scenario.pre_state().amplitudes();
    config.post_state = scenario.post_state().amplitudes();
    return config;
}

nlohmann::json default_config_json() {
    // Minimal document: pre/post omitted, so parsing goes through the
    // documented three-shutter fallback.
    ScenarioConfig config = config_of(default_scenario(3));
    config.pre_state.reset();
    config.post_state.reset();
    return to_json(config);
}

}  // namespace shutterbox
