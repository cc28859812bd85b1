// Command-line front end: exact scenario analysis, per-shutter
// intermediate-measurement tables, Monte Carlo batches and the
// verification suite.
//
// Exit codes: 0 success, 1 check failure, 2 usage or config error.

#include <cstdint>
#include <iostream>
#include <limits>
#include <string>

#include <CLI11.hpp>

#include "shutterbox/acceptance.hpp"
#include "shutterbox/config.hpp"
#include "shutterbox/report.hpp"

namespace {

shutterbox::ShutterScenario load_scenario(const std::string& config_path) {
    if (config_path.empty()) return shutterbox::default_scenario(3);
    return shutterbox::build_scenario(shutterbox::load_scenario_config(config_path));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pre/post-selected shutter-and-box quantum experiment toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    bool json_output = false;
    std::int64_t n_runs = 100000;
    std::uint64_t seed = 1;
    double tolerance = 0.0;

    CLI::App* exact = app.add_subcommand(
        "exact", "Exact analysis: joint state, branches, post-selection numbers");
    exact->add_option("--config", config_path, "Scenario config file (JSON)");
    exact->add_flag("--json", json_output, "Machine-readable output");

    CLI::App* abl = app.add_subcommand(
        "abl", "Probability of finding the particle at each shutter, looking only there");
    abl->add_option("--config", config_path, "Scenario config file (JSON)");
    abl->add_flag("--json", json_output, "Machine-readable output");

    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo runs checked against the exact numbers");
    simulate->add_option("--config", config_path, "Scenario config file (JSON)");
    simulate->add_option("--n", n_runs, "Number of runs")
        ->check(CLI::Range(std::int64_t{1}, std::numeric_limits<std::int64_t>::max()));
    simulate->add_option("--seed", seed, "Batch seed");
    simulate->add_flag("--json", json_output, "Machine-readable output");

    CLI::App* verify = app.add_subcommand("verify", "Run the full verification suite");
    CLI::Option* tolerance_option =
        verify->add_option("--tolerance", tolerance, "Override the numeric check tolerances");
    verify->add_flag("--json", json_output, "Machine-readable output");

    CLI::App* defaults =
        app.add_subcommand("default-config", "Print the built-in three-shutter config");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (exact->parsed()) {
            const auto report = shutterbox::exact_report(load_scenario(config_path));
            if (json_output)
                std::cout << shutterbox::to_json(report).dump(2) << "\n";
            else
                std::cout << shutterbox::to_text(report);
        } else if (abl->parsed()) {
            const auto report = shutterbox::abl_report(load_scenario(config_path));
            if (json_output)
                std::cout << shutterbox::to_json(report).dump(2) << "\n";
            else
                std::cout << shutterbox::to_text(report);
        } else if (simulate->parsed()) {
            const auto report =
                shutterbox::simulate_report(load_scenario(config_path), n_runs, seed);
            if (json_output)
                std::cout << shutterbox::to_json(report).dump(2) << "\n";
            else
                std::cout << shutterbox::to_text(report);
            if (!report.comparison.pass) return 1;
        } else if (verify->parsed()) {
            shutterbox::AcceptanceOptions options;
            if (tolerance_option->count() > 0) options.tolerance_override = tolerance;
            const auto results = shutterbox::run_acceptance_checks(options);
            if (json_output)
                std::cout << shutterbox::to_json(results).dump(2) << "\n";
            else
                std::cout << shutterbox::to_text(results);
            if (!shutterbox::all_pass(results)) return 1;
        } else if (defaults->parsed()) {
            std::cout << shutterbox::default_config_json().dump(2) << "\n";
        }
    } catch (const shutterbox::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
