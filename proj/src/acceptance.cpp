#include "shutterbox/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "shutterbox/config.hpp"
#include "shutterbox/linalg.hpp"
#include "shutterbox/montecarlo.hpp"
#include "shutterbox/report.hpp"
#include "shutterbox/rng.hpp"
#include "shutterbox/shutter.hpp"

namespace shutterbox {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string sci(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

// Gaussian-amplitude sampling on top of the deterministic counter streams.
struct Rand {
    RngStream stream;

    explicit Rand(std::uint64_t seed, std::uint64_t salt = 0) : stream(seed, salt) {}

    double gauss() {
        const double u1 = 1.0 - stream.next_unit();  // (0,1]
        const double u2 = stream.next_unit();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
    }

    std::vector<Cx> amplitudes(std::size_t n) {
        std::vector<Cx> v(n);
        for (Cx& a : v) a = Cx(gauss(), gauss());
        return v;
    }

    std::vector<Cx> unit_amplitudes(std::size_t n) {
        for (;;) {
            std::vector<Cx> v = amplitudes(n);
            double sum = 0.0;
            for (const Cx& a : v) sum += std::norm(a);
            const double norm = std::sqrt(sum);
            if (norm < 1e-6) continue;
            for (Cx& a : v) a /= norm;
            return v;
        }
    }

    StateVector state(const SpaceShape& shape) {
        return StateVector(shape, amplitudes(shape.dimension()));
    }

    StateVector unit_state(const SpaceShape& shape) {
        return StateVector(shape, unit_amplitudes(shape.dimension()), true);
    }
};

double max_coefficient_error(const std::vector<Cx>& got, const std::vector<Cx>& expected) {
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i)
        worst = std::max(worst, std::abs(got[i] - expected[i]));
    return worst;
}

CheckResult check_transmitted_basis_coefficients(double tol) {
    CheckResult result{1, "transmitted-basis-coefficients", false, "", 0.0};
    const ShutterScenario scenario = default_scenario(3);

    // Best of three timed evaluations.
    std::vector<Cx> coefficients;
    double best_ms = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
        const auto start = Clock::now();
        coefficients = transmitted_in_postselection_basis(scenario);
        best_ms = std::min(best_ms, ms_since(start));
    }

    const double s6 = std::sqrt(6.0) / 4.0;
    const double s2 = std::sqrt(2.0) / 4.0;
    const std::vector<Cx> expected{Cx(0, 0), Cx(0, 0), Cx(s6, 0), Cx(s6, 0), Cx(-s2, 0), Cx(s2, 0)};
    const double err = max_coefficient_error(coefficients, expected);

    result.pass = coefficients.size() == 6 && err <= tol && best_ms < 1.0;
    result.detail = "max coefficient error " + sci(err) + " (tol " + sci(tol) + "), " +
                    sci(best_ms) + " ms";
    result.elapsed_ms = best_ms;
    return result;
}

CheckResult check_reduced_density_numbers(double tol) {
    CheckResult result{2, "reflected-reduced-density", false, "", 0.0};
    const auto start = Clock::now();
    const ShutterScenario scenario = default_scenario(3);

    const DensityOperator reduced = reflected_reduced_density(scenario);
    double entry_err = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            const Cx expected = (i == j && i < 2) ? Cx(0.5, 0.0) : Cx(0.0, 0.0);
            entry_err = std::max(entry_err, std::abs(reduced.entry(i, j) - expected));
        }
    const double p = postselection_prob_given_reflection(scenario);
    const double p_err = std::abs(p - 1.0 / 3.0);

    result.pass = entry_err <= tol && p_err <= tol;
    result.detail = "max density entry error " + sci(entry_err) +
                    ", post-selection probability error " + sci(p_err) + " (tol " + sci(tol) + ")";
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_branch_probabilities(double tol) {
    CheckResult result{3, "branch-probabilities", false, "", 0.0};
    const auto start = Clock::now();
    const ShutterScenario scenario = default_scenario(3);

    const StateVector joint = joint_initial(scenario);
    const InteractionSplit split = interact(joint);
    const double err_r = std::abs(split.p_reflect - 1.0 / 3.0);
    const double err_t = std::abs(split.p_transmit - 2.0 / 3.0);
    const double reconstruction = norm((split.reflected + split.transmitted) - joint);

    result.pass = err_r <= tol && err_t <= tol && reconstruction <= tol;
    result.detail = "p_reflect error " + sci(err_r) + ", p_transmit error " + sci(err_t) +
                    ", branch-sum residual " + sci(reconstruction) + " (tol " + sci(tol) + ")";
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_three_box_certainty(double abl_tol, double state_tol) {
    CheckResult result{4, "three-box-certainty", false, "", 0.0};
    const auto start = Clock::now();
    const ShutterScenario scenario = default_scenario(3);
    const SpaceShape space = scenario.shutter_space();
    const PrePostEnsemble ensemble(scenario.pre_state(), scenario.post_state());

    double worst_abl = 0.0;
    for (const std::string mode : {"a", "b"}) {
        const Observable look = Observable::presence_at(space, mode);
        const double p = abl_probability(ensemble, look, look.outcome_index("in " + mode));
        worst_abl = std::max(worst_abl, std::abs(p - 1.0));
    }

    const double r3 = 1.0 / std::sqrt(3.0);
    const StateVector expected(space, {Cx(r3, 0), Cx(r3, 0), Cx(-r3, 0)}, true);
    // Compare up to a global phase.
    const Cx overlap = inner(expected, scenario.post_state());
    double state_err = 2.0;
    if (std::abs(overlap) > eps_zero) {
        const StateVector aligned = (std::conj(overlap) / std::abs(overlap)) * scenario.post_state();
        state_err = norm(aligned - expected);
    }

    result.pass = worst_abl <= abl_tol && state_err <= state_tol;
    result.detail = "max |ABL - 1| = " + sci(worst_abl) + " (tol " + sci(abl_tol) +
                    "), derived post-state error " + sci(state_err) + " (tol " + sci(state_tol) +
                    ")";
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_arbitrary_photon_amplitudes(double tol) {
    CheckResult result{5, "arbitrary-photon-amplitudes", false, "", 0.0};
    const auto start = Clock::now();
    const ShutterScenario base = default_scenario(3);

    Rand rand(0xA11CE);
    double worst = 0.0;
    int trials = 0;
    for (; trials < 1000; ++trials) {
        const ShutterScenario scenario = base.with_photon_amplitudes(rand.unit_amplitudes(2));
        const double residual = std::sqrt(
            postselect(transmitted_state(scenario), postselection_subspace(scenario)).probability);
        worst = std::max(worst, residual);
        if (worst > tol) break;
    }

    result.elapsed_ms = ms_since(start);
    result.pass = worst <= tol && result.elapsed_ms < 1000.0;
    result.detail = "1000 random amplitude pairs, max residual " + sci(worst) + " (tol " +
                    sci(tol) + "), " + sci(result.elapsed_ms) + " ms";
    return result;
}

CheckResult check_equivalence_property(double residual_tol) {
    CheckResult result{6, "orthogonality-certainty-equivalence", false, "", 0.0};
    const auto start = Clock::now();

    const std::vector<std::string> all_labels{"a", "b", "c", "d", "e", "f"};
    int counterexamples = 0;
    int vanishing = 0;
    std::uint64_t salt = 0;

    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t m = 2 + static_cast<std::size_t>(trial % 5);
        const bool engineered = trial % 2 == 0;
        const std::vector<std::string> shutters(all_labels.begin(), all_labels.begin() + m);
        const std::vector<std::string> modes(all_labels.begin(), all_labels.begin() + m - 1);
        const SpaceShape space("shutter", shutters);

        // Rejection-sample a well-conditioned scenario.
        for (int attempt = 0; attempt < 100; ++attempt) {
            Rand rand(0xEC41, salt++);
            const StateVector pre = rand.unit_state(space);
            StateVector post = StateVector::zero(space);
            if (engineered) {
                // Post-state orthogonal to every (1 - P_x)·pre, so each
                // photon-mode cross term vanishes by construction.
                std::vector<StateVector> blocked;
                for (const auto& mode : modes) {
                    std::vector<Cx> amps = pre.amplitudes();
                    amps[space.label_index(0, mode)] = Cx(0, 0);
                    blocked.emplace_back(space, std::move(amps));
                }
                std::vector<StateVector> complement;
                try {
                    complement = orthogonal_complement(blocked);
                } catch (const ValidationError&) {
                    continue;
                }
                if (complement.empty()) continue;
                post = complement.front();
            } else {
                post = rand.unit_state(space);
            }
            if (std::abs(inner(post, pre)) < 1e-3) continue;

            const ShutterScenario scenario(shutters, modes, rand.unit_amplitudes(m - 1), pre,
                                           post);
            const CertaintyOrthogonalityReport report = certainty_orthogonality_report(scenario);
            const bool residual_ok = report.residual <= residual_tol;
            if (residual_ok) ++vanishing;
            if (residual_ok != report.all_modes_certain) ++counterexamples;
            break;
        }
    }

    result.elapsed_ms = ms_since(start);
    result.pass = counterexamples == 0;
    result.detail = "500 scenarios across 2..6 shutters, " + std::to_string(vanishing) +
                    " with vanishing residual, " + std::to_string(counterexamples) +
                    " counterexamples (residual tol " + sci(residual_tol) + ")";
    return result;
}

CheckResult check_monte_carlo_consistency() {
    CheckResult result{7, "monte-carlo-consistency", false, "", 0.0};
    const auto start = Clock::now();
    const ShutterScenario scenario = default_scenario(3);

    const std::int64_t n = 100000;
    const BatchStats stats = run_batch(scenario, n, 20020617);
    const double n_d = static_cast<double>(n);

    const double reflected_fraction = static_cast<double>(stats.total(PhotonResult::reflected)) / n_d;
    const double joint_fraction =
        static_cast<double>(stats.count(PhotonResult::reflected, true)) / n_d;
    const std::int64_t transmitted_postselected = stats.count(PhotonResult::transmitted, true);

    const double p_r = 1.0 / 3.0;
    const double p_joint = 1.0 / 9.0;
    const double bound_r = 4.0 * std::sqrt(p_r * (1.0 - p_r) / n_d);
    const double bound_joint = 4.0 * std::sqrt(p_joint * (1.0 - p_joint) / n_d);

    const double dev_r = std::abs(reflected_fraction - p_r);
    const double dev_joint = std::abs(joint_fraction - p_joint);

    result.elapsed_ms = ms_since(start);
    result.pass = dev_r <= bound_r && dev_joint <= bound_joint && transmitted_postselected == 0 &&
                  result.elapsed_ms < 2000.0;
    result.detail = "reflected dev " + sci(dev_r) + " (4-sigma " + sci(bound_r) +
                    "), reflected&postselected dev " + sci(dev_joint) + " (4-sigma " +
                    sci(bound_joint) + "), transmitted&postselected = " +
                    std::to_string(transmitted_postselected) + ", " + sci(result.elapsed_ms) +
                    " ms";
    return result;
}

CheckResult check_simulate_determinism() {
    CheckResult result{8, "simulate-determinism", false, "", 0.0};
    const auto start = Clock::now();

    const ScenarioConfig config = parse_scenario_config(default_config_json());
    const std::string first = to_json(simulate_report(build_scenario(config), 50000, 777)).dump(2);
    const std::string second = to_json(simulate_report(build_scenario(config), 50000, 777)).dump(2);

    result.pass = first == second;
    result.detail = result.pass
                        ? "two runs produced byte-identical output (" +
                              std::to_string(first.size()) + " bytes)"
                        : "outputs differ";
    result.elapsed_ms = ms_since(start);
    return result;
}

CheckResult check_property_suites(double tol, double psd_floor) {
    CheckResult result{9, "property-suites", false, "", 0.0};
    const auto start = Clock::now();
    std::ostringstream failures;

    // Sum of squared basis coefficients equals the squared norm.
    int parseval_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        Rand rand(0x9A25, static_cast<std::uint64_t>(i));
        const std::size_t d = 2 + static_cast<std::size_t>(i % 7);
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < d; ++k) labels.push_back("q" + std::to_string(k));
        const SpaceShape space("system", labels);

        const StateVector u = rand.state(space);
        std::vector<StateVector> basis{rand.unit_state(space)};
        for (auto& v : orthogonal_complement({basis.front()})) basis.push_back(std::move(v));

        double sum = 0.0;
        for (const Cx& c : change_basis(u, basis)) sum += std::norm(c);
        const double n = norm(u);
        if (std::abs(sum - n * n) > tol) ++parseval_failures;
    }
    if (parseval_failures > 0) failures << " parseval=" << parseval_failures;

    // Projectors are idempotent and Hermitian.
    int projector_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        Rand rand(0x9B26, static_cast<std::uint64_t>(i));
        const std::size_t d = 2 + static_cast<std::size_t>(i % 5);
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < d; ++k) labels.push_back("q" + std::to_string(k));
        const SpaceShape space("system", labels);

        std::vector<StateVector> span;
        const std::size_t rank = 1 + static_cast<std::size_t>(i) % (d - 1);
        for (std::size_t k = 0; k < rank; ++k) span.push_back(rand.state(space));
        Operator p = Operator::zero(space);
        try {
            p = projector(span);
        } catch (const ValidationError&) {
            continue;  // dependent random draw; astronomically rare
        }
        const Operator defect = p * p - p;
        double worst = hermiticity_defect(p);
        for (const Cx& e : defect.entries()) worst = std::max(worst, std::abs(e));
        if (worst > tol) ++projector_failures;
    }
    if (projector_failures > 0) failures << " projector=" << projector_failures;

    // Partial trace preserves trace and positivity on random pure states.
    int trace_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        Rand rand(0x9C27, static_cast<std::uint64_t>(i));
        const std::size_t d1 = 2 + static_cast<std::size_t>(i % 3);
        const std::size_t d2 = 2 + static_cast<std::size_t>((i / 3) % 3);
        std::vector<std::string> left, right;
        for (std::size_t k = 0; k < d1; ++k) left.push_back("l" + std::to_string(k));
        for (std::size_t k = 0; k < d2; ++k) right.push_back("r" + std::to_string(k));
        const SpaceShape joint =
            SpaceShape("left", left).tensor_with(SpaceShape("right", right));

        const DensityOperator rho = DensityOperator::from_pure(rand.unit_state(joint));
        const DensityOperator reduced = partial_trace(rho, i % 2 == 0 ? "left" : "right");
        const double trace_err = std::abs(trace_of(reduced.as_operator()) - Cx(1.0, 0.0));
        const auto eigenvalues = hermitian_eigenvalues(reduced.as_operator());
        if (trace_err > tol || eigenvalues.front() < -psd_floor) ++trace_failures;
    }
    if (trace_failures > 0) failures << " partial-trace=" << trace_failures;

    // Intermediate-outcome probabilities sum to 1 over a complete observable.
    int abl_failures = 0;
    for (int i = 0; i < 1000; ++i) {
        Rand rand(0x9D28, static_cast<std::uint64_t>(i));
        const std::size_t d = 2 + static_cast<std::size_t>(i % 5);
        std::vector<std::string> labels;
        for (std::size_t k = 0; k < d; ++k) labels.push_back("q" + std::to_string(k));
        const SpaceShape space("system", labels);

        const PrePostEnsemble ensemble(rand.unit_state(space), rand.unit_state(space));
        const Observable obs = i % 2 == 0 ? Observable::projective(space)
                                          : Observable::presence_at(space, labels[i % d]);
        double sum = 0.0;
        try {
            for (const double p : abl_distribution(ensemble, obs)) sum += p;
        } catch (const DegenerateError&) {
            continue;  // requires an exactly orthogonal random pair
        }
        if (std::abs(sum - 1.0) > tol) ++abl_failures;
    }
    if (abl_failures > 0) failures << " abl=" << abl_failures;

    result.elapsed_ms = ms_since(start);
    result.pass = parseval_failures + projector_failures + trace_failures + abl_failures == 0;
    result.detail = result.pass ? "4 property suites x 1000 randomized instances, all within " +
                                      sci(tol)
                                : "failing instances:" + failures.str();
    return result;
}

}  // namespace

std::vector<CheckResult> run_acceptance_checks(const AcceptanceOptions& options) {
    const double tol10 = options.tolerance_override.value_or(1e-10);
    const double tol9 = options.tolerance_override.value_or(1e-9);
    const double psd_floor = options.tolerance_override.value_or(eps_psd);

    std::vector<CheckResult> results;
    results.push_back(check_transmitted_basis_coefficients(tol10));
    results.push_back(check_reduced_density_numbers(tol10));
    results.push_back(check_branch_probabilities(tol10));
    results.push_back(check_three_box_certainty(tol9, tol10));
    results.push_back(check_arbitrary_photon_amplitudes(tol10));
    results.push_back(check_equivalence_property(tol9));
    results.push_back(check_monte_carlo_consistency());
    results.push_back(check_simulate_determinism());
    results.push_back(check_property_suites(tol10, psd_floor));
    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

nlohmann::json to_json(const std::vector<CheckResult>& results) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& r : results) {
        nlohmann::json c;
        c["id"] = r.id;
        c["name"] = r.name;
        c["pass"] = r.pass;
        c["detail"] = r.detail;
        c["elapsed_ms"] = r.elapsed_ms;
        checks.push_back(std::move(c));
    }
    return {{"checks", checks}, {"pass", all_pass(results)}};
}

std::string to_text(const std::vector<CheckResult>& results) {
    std::ostringstream out;
    for (const auto& r : results) {
        char line[512];
        std::snprintf(line, sizeof(line), "[%d] %-37s %s  %s\n", r.id, r.name.c_str(),
                      r.pass ? "PASS" : "FAIL", r.detail.c_str());
        out << line;
    }
    out << (all_pass(results) ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
    return out.str();
}

}  // namespace shutterbox
