#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include "shutterbox/acceptance.hpp"
#include "shutterbox/config.hpp"
#include "shutterbox/report.hpp"
#include "testutil.hpp"

using namespace shutterbox;

namespace {

nlohmann::json tilted_photon_doc() {
    return nlohmann::json{{"shutters", {"a", "b", "c"}},
                          {"photon_modes", {"a", "b"}},
                          {"photon_amplitudes", {{0.6, 0.0}, {0.8, 0.0}}}};
}

std::string field_of(const std::function<void()>& call) {
    try {
        call();
    } catch (const ConfigError& e) {
        return e.field();
    }
    return "(no error)";
}

}  // namespace

TEST_CASE("default config document") {
    SUBCASE("round-trips into the default scenario exactly") {
        const ScenarioConfig config = parse_scenario_config(default_config_json());
        const ShutterScenario built = build_scenario(config);
        const ShutterScenario reference = default_scenario(3);

        CHECK(built.shutters() == reference.shutters());
        CHECK(built.photon_modes() == reference.photon_modes());
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(built.photon_amplitudes()[i] == reference.photon_amplitudes()[i]);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(built.pre_state().amplitude(i) == reference.pre_state().amplitude(i));
            CHECK(built.post_state().amplitude(i) == reference.post_state().amplitude(i));
        }
    }

    SUBCASE("serialization is stable through a parse cycle") {
        const nlohmann::json doc = default_config_json();
        const nlohmann::json cycled = to_json(parse_scenario_config(doc));
        CHECK(doc == cycled);
    }
}

TEST_CASE("config round trip") {
    testutil::Rand rand(61);
    for (int i = 0; i < 50; ++i) {
        const std::size_t m = 2 + i % 5;
        const auto scenario = testutil::random_scenario(rand, m, 1 + i % (m - 1));
        const ScenarioConfig config = config_of(scenario);
        const nlohmann::json doc = to_json(config);
        const ScenarioConfig reparsed = parse_scenario_config(doc);
        const ShutterScenario rebuilt = build_scenario(reparsed);

        // Shortest-round-trip JSON doubles reproduce the values exactly,
        // well inside the 1e-15 contract.
        for (std::size_t k = 0; k < scenario.photon_amplitudes().size(); ++k)
            CHECK(std::abs(rebuilt.photon_amplitudes()[k] - scenario.photon_amplitudes()[k]) <
                  1e-15);
        for (std::size_t k = 0; k < scenario.shutter_count(); ++k) {
            CHECK(std::abs(rebuilt.pre_state().amplitude(k) - scenario.pre_state().amplitude(k)) <
                  1e-15);
            CHECK(std::abs(rebuilt.post_state().amplitude(k) -
                           scenario.post_state().amplitude(k)) < 1e-15);
        }
    }
}

TEST_CASE("fallback rules for omitted states") {
    SUBCASE("three shutters fall back to the standard pre and post states") {
        const ShutterScenario built = build_scenario(parse_scenario_config(tilted_photon_doc()));
        const ShutterScenario reference = default_scenario(3);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(built.pre_state().amplitude(i) == reference.pre_state().amplitude(i));
            CHECK(built.post_state().amplitude(i) == reference.post_state().amplitude(i));
        }
        CHECK(built.post_basis_extension().size() == 2);
    }

    SUBCASE("explicit pre-state with defaulted post-state") {
        nlohmann::json doc = tilted_photon_doc();
        doc["pre_state"] = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
        const ShutterScenario built = build_scenario(parse_scenario_config(doc));
        CHECK(std::abs(built.pre_state().amplitude(0) - Cx(1, 0)) == 0.0);
        CHECK(built.post_state().amplitude(2).real() < 0.0);  // three-box post-state
    }

    SUBCASE("four shutters require both states") {
        nlohmann::json doc{{"shutters", {"a", "b", "c", "d"}},
                           {"photon_modes", {"a", "b"}},
                           {"photon_amplitudes", {{0.6, 0.0}, {0.8, 0.0}}}};
        CHECK(field_of([&] { build_scenario(parse_scenario_config(doc)); }) == "pre_state");

        const double r4 = 0.5;
        doc["pre_state"] = {{r4, 0.0}, {r4, 0.0}, {r4, 0.0}, {r4, 0.0}};
        CHECK(field_of([&] { build_scenario(parse_scenario_config(doc)); }) == "post_state");

        doc["post_state"] = {{1.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}};
        CHECK_NOTHROW(build_scenario(parse_scenario_config(doc)));
    }
}

TEST_CASE("malformed configs name the offending field") {
    nlohmann::json good = tilted_photon_doc();

    SUBCASE("missing required fields") {
        nlohmann::json doc = good;
        doc.erase("shutters");
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "shutters");
        doc = good;
        doc.erase("photon_amplitudes");
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_amplitudes");
    }

    SUBCASE("amplitude arity mismatch") {
        nlohmann::json doc = good;
        doc["photon_amplitudes"] = {{1.0, 0.0}};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_amplitudes");
    }

    SUBCASE("an entry that is not an [re, im] pair") {
        nlohmann::json doc = good;
        doc["photon_amplitudes"] = {{0.6, 0.0}, {0.8}};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_amplitudes[1]");
        doc["photon_amplitudes"] = {{0.6, 0.0}, "x"};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_amplitudes[1]");
    }

    SUBCASE("unnormalized amplitudes") {
        nlohmann::json doc = good;
        doc["photon_amplitudes"] = {{0.6, 0.0}, {0.7, 0.0}};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_amplitudes");
    }

    SUBCASE("unknown fields are rejected") {
        nlohmann::json doc = good;
        doc["photon_amplitude"] = doc["photon_amplitudes"];
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_amplitude");
    }

    SUBCASE("photon modes outside the shutter list") {
        nlohmann::json doc = good;
        doc["photon_modes"] = {"a", "z"};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_modes[1]");
    }

    SUBCASE("photon reaching every shutter") {
        nlohmann::json doc = good;
        doc["photon_modes"] = {"a", "b", "c"};
        const double r3 = 1.0 / std::sqrt(3.0);
        doc["photon_amplitudes"] = {{r3, 0.0}, {r3, 0.0}, {r3, 0.0}};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "photon_modes");
    }

    SUBCASE("duplicate shutters") {
        nlohmann::json doc = good;
        doc["shutters"] = {"a", "a", "c"};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "shutters[1]");
    }

    SUBCASE("wrong state length") {
        nlohmann::json doc = good;
        doc["pre_state"] = {{1.0, 0.0}, {0.0, 0.0}};
        CHECK(field_of([&] { parse_scenario_config(doc); }) == "pre_state");
    }

    SUBCASE("non-object document") {
        CHECK_THROWS_AS(parse_scenario_config(nlohmann::json::array()), ConfigError);
    }
}

TEST_CASE("config files") {
    SUBCASE("a missing file is a config error") {
        CHECK_THROWS_AS(load_scenario_config("/nonexistent/scenario.json"), ConfigError);
    }

    SUBCASE("invalid JSON reports the parse position") {
        const std::string path = "broken_config_for_test.json";
        {
            std::ofstream out(path);
            out << "{ \"shutters\": [";
        }
        try {
            load_scenario_config(path);
            CHECK(false);
        } catch (const ConfigError& e) {
            CHECK(std::string(e.what()).find("invalid JSON") != std::string::npos);
        }
        std::remove(path.c_str());
    }

    SUBCASE("a valid file round-trips") {
        const std::string path = "good_config_for_test.json";
        {
            std::ofstream out(path);
            out << default_config_json().dump(2);
        }
        const ScenarioConfig config = load_scenario_config(path);
        CHECK(config.shutters.size() == 3);
        CHECK(!config.pre_state.has_value());
        std::remove(path.c_str());
    }
}

TEST_CASE("exact report") {
    const ExactReport report = exact_report(default_scenario(3));

    SUBCASE("the four headline probabilities") {
        CHECK(std::abs(report.p_reflect - 1.0 / 3.0) < 1e-12);
        CHECK(std::abs(report.p_transmit - 2.0 / 3.0) < 1e-12);
        REQUIRE(report.p_postselect_given_reflect.has_value());
        CHECK(std::abs(*report.p_postselect_given_reflect - 1.0 / 3.0) < 1e-12);
        REQUIRE(report.p_reflect_and_postselect.has_value());
        CHECK(std::abs(*report.p_reflect_and_postselect - 1.0 / 9.0) < 1e-12);
    }

    SUBCASE("the coefficient vector and residual") {
        REQUIRE(report.postselection_basis_coefficients.has_value());
        const double s6 = std::sqrt(6.0) / 4.0;
        const double s2 = std::sqrt(2.0) / 4.0;
        const std::vector<Cx> expected{Cx(0, 0), Cx(0, 0),  Cx(s6, 0),
                                       Cx(s6, 0), Cx(-s2, 0), Cx(s2, 0)};
        CHECK(testutil::max_entry_diff(*report.postselection_basis_coefficients, expected) <
              1e-10);
        REQUIRE(report.postselection_residual.has_value());
        CHECK(*report.postselection_residual < 1e-12);
    }

    SUBCASE("the reduced density matrix") {
        REQUIRE(report.reflected_reduced_density.has_value());
        const auto& rho = *report.reflected_reduced_density;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                const Cx expected = (i == j && i < 2) ? Cx(0.5, 0) : Cx(0, 0);
                CHECK(std::abs(rho[i][j] - expected) < 1e-12);
            }
    }

    SUBCASE("JSON rendering carries the numbers") {
        const nlohmann::json doc = to_json(report);
        CHECK(std::abs(doc["probabilities"]["reflect"].get<double>() - 1.0 / 3.0) < 1e-12);
        CHECK(std::abs(doc["probabilities"]["reflect_and_postselect"].get<double>() - 1.0 / 9.0) <
              1e-12);
        CHECK(doc["transmitted_in_postselection_basis"].size() == 6);
    }

    SUBCASE("tilted photon keeps the residual at zero") {
        const ShutterScenario tilted =
            build_scenario(parse_scenario_config(tilted_photon_doc()));
        const ExactReport tilted_report = exact_report(tilted);
        REQUIRE(tilted_report.postselection_residual.has_value());
        CHECK(*tilted_report.postselection_residual < 1e-12);
    }
}

TEST_CASE("intermediate-measurement table") {
    SUBCASE("standard scenario rows") {
        const AblReport report = abl_report(default_scenario(3));
        REQUIRE(report.rows.size() == 3);
        CHECK(report.rows[0].shutter == "a");
        CHECK(std::abs(*report.rows[0].probability - 1.0) < 1e-9);
        CHECK(report.rows[0].certain);
        CHECK(std::abs(*report.rows[1].probability - 1.0) < 1e-9);
        CHECK(report.rows[1].certain);
        // Looking only in c: 1/5 by the direct formula, not certain.
        CHECK(std::abs(*report.rows[2].probability - 0.2) < 1e-12);
        CHECK(!report.rows[2].certain);
    }

    SUBCASE("identical pre and post: equal rows, nothing certain") {
        const ShutterScenario s = default_scenario(3);
        const ShutterScenario same(s.shutters(), s.photon_modes(), s.photon_amplitudes(),
                                   s.pre_state(), s.pre_state());
        const AblReport report = abl_report(same);
        for (const auto& row : report.rows) {
            REQUIRE(row.probability.has_value());
            CHECK(!row.certain);
            // Direct formula at overlap 1/3: (1/9) / (1/9 + 4/9).
            CHECK(std::abs(*row.probability - 0.2) < 1e-12);
        }
    }

    SUBCASE("degenerate rows report instead of crashing") {
        const SpaceShape space("shutter", {"a", "b", "c"});
        const ShutterScenario disjoint({"a", "b", "c"}, {"a"}, {Cx(1, 0)},
                                       StateVector::basis_state(space, "a"),
                                       StateVector::basis_state(space, "b"));
        const AblReport report = abl_report(disjoint);
        CHECK(report.rows[2].error.has_value());
        CHECK(!report.rows[2].probability.has_value());
    }
}

TEST_CASE("simulate report determinism") {
    const ShutterScenario s = default_scenario(3);
    const std::string a = to_json(simulate_report(s, 20000, 11)).dump(2);
    const std::string b = to_json(simulate_report(s, 20000, 11)).dump(2);
    const std::string c = to_json(simulate_report(s, 20000, 12)).dump(2);
    CHECK(a == b);
    CHECK(a != c);
}

TEST_CASE("verification suite") {
    SUBCASE("pristine run passes every check") {
        const auto results = run_acceptance_checks();
        REQUIRE(results.size() == 9);
        for (const auto& r : results) {
            CAPTURE(r.name);
            CAPTURE(r.detail);
            CHECK(r.pass);
        }
        CHECK(all_pass(results));
    }

    SUBCASE("an absurd tolerance produces named failures") {
        AcceptanceOptions options;
        options.tolerance_override = 1e-16;
        const auto results = run_acceptance_checks(options);
        CHECK(!all_pass(results));
        bool any_named_failure = false;
        for (const auto& r : results)
            if (!r.pass && !r.name.empty()) any_named_failure = true;
        CHECK(any_named_failure);
    }

    SUBCASE("JSON rendering carries the verdicts") {
        const auto results = run_acceptance_checks();
        const nlohmann::json doc = to_json(results);
        CHECK(doc["pass"].get<bool>());
        CHECK(doc["checks"].size() == 9);
        CHECK(doc["checks"][0]["id"].get<int>() == 1);
    }
}
