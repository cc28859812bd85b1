// acceptance.hpp
// The verification suite behind `verify` and the acceptance test binary:
// every headline number and property of the three-shutter analysis,
// checked at pinned tolerances, one result per check.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace shutterbox {

struct CheckResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0.0;
};

struct AcceptanceOptions {
    // Replaces the numeric closeness tolerances of every check (the
    // statistical sigma bounds and byte comparisons are not tolerances and
    // keep their definitions).
    std::optional<double> tolerance_override;
};

std::vector<CheckResult> run_acceptance_checks(const AcceptanceOptions& options = {});

bool all_pass(const std::vector<CheckResult>& results);

nlohmann::json to_json(const std::vector<CheckResult>& results);
std::string to_text(const std::vector<CheckResult>& results);

}  // namespace shutterbox
