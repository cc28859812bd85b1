// report.hpp
// Structured results for the command-line front end: the exact analysis of
// a scenario, the per-shutter intermediate-measurement table, and Monte
// Carlo batch summaries. Each report renders to JSON (machine-readable,
// deterministic key order) and to a human table.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "shutterbox/montecarlo.hpp"
#include "shutterbox/shutter.hpp"

namespace shutterbox {

struct ExactReport {
    std::vector<std::string> joint_kets;  // one per joint basis index
    std::vector<Cx> joint_amplitudes;
    std::vector<Cx> reflected_amplitudes;    // unnormalized branch
    std::vector<Cx> transmitted_amplitudes;  // unnormalized branch
    double p_reflect = 0.0;
    double p_transmit = 0.0;

    // Present when the reflected branch is nonvanishing.
    std::optional<double> p_postselect_given_reflect;
    std::optional<double> p_reflect_and_postselect;
    std::optional<std::vector<std::vector<Cx>>> reflected_reduced_density;

    // Present when the transmitted branch is nonvanishing.
    std::optional<std::vector<Cx>> postselection_basis_coefficients;
    std::optional<double> postselection_residual;

    std::vector<std::string> shutter_labels;
};

ExactReport exact_report(const ShutterScenario& s);

struct AblRow {
    std::string shutter;
    std::optional<double> probability;  // absent when the row is degenerate
    bool certain = false;
    std::optional<std::string> error;
};

struct AblReport {
    std::vector<AblRow> rows;
};

// For each shutter x: the probability of finding the particle at x when
// looking only there, between the two selections.
AblReport abl_report(const ShutterScenario& s);

struct SimulateReport {
    BatchStats stats;
    CellProbabilities exact;
    ComparisonReport comparison;
};

SimulateReport simulate_report(const ShutterScenario& s, std::int64_t n, std::uint64_t seed);

nlohmann::json to_json(const ExactReport& report);
nlohmann::json to_json(const AblReport& report);
nlohmann::json to_json(const SimulateReport& report);

std::string to_text(const ExactReport& report);
std::string to_text(const AblReport& report);
std::string to_text(const SimulateReport& report);

}  // namespace shutterbox
