// montecarlo.hpp
// Simulation of individual experimental runs: draw the photon's fate
// (reflected or transmitted), then attempt post-selection on the drawn
// branch. Sampling uses exact per-scenario probabilities computed once;
// empirical frequencies are checked against the exact values.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "shutterbox/rng.hpp"
#include "shutterbox/shutter.hpp"

namespace shutterbox {

enum class PhotonResult { reflected = 0, transmitted = 1 };

std::string to_string(PhotonResult r);

struct RunRecord {
    PhotonResult photon_result = PhotonResult::transmitted;
    bool postselected = false;
    std::int64_t run_index = 0;
};

// Exact branch and conditional post-selection probabilities for a scenario.
// Values within eps_zero of 0 or 1 are clamped to exactly 0 or 1, so
// structurally impossible cells stay impossible in the sampler.
struct CellProbabilities {
    double reflect = 0.0;
    double postselect_given_reflect = 0.0;
    double postselect_given_transmit = 0.0;
};

CellProbabilities exact_cell_probabilities(const ShutterScenario& s);

// One run: the branch draw consumes the stream's first uniform, the
// post-selection attempt the second. Post-selection is attempted on both
// branches.
RunRecord sample_run(const CellProbabilities& p, std::int64_t run_index, RngStream& stream);
RunRecord sample_run(const ShutterScenario& s, std::int64_t run_index, RngStream& stream);

struct BatchStats {
    std::int64_t n_runs = 0;
    std::uint64_t seed = 0;
    // counts[photon_result][postselected ? 1 : 0]
    std::array<std::array<std::int64_t, 2>, 2> counts{};

    std::int64_t count(PhotonResult r, bool postselected) const {
        return counts[static_cast<std::size_t>(r)][postselected ? 1 : 0];
    }
    std::int64_t total(PhotonResult r) const { return count(r, false) + count(r, true); }
};

// n independent runs on counter-derived streams keyed by (seed, run index).
// May evaluate runs concurrently; results are identical to sequential
// evaluation.
BatchStats run_batch(const ShutterScenario& s, std::int64_t n, std::uint64_t seed);

struct CellComparison {
    PhotonResult photon_result = PhotonResult::reflected;
    bool postselected = false;
    std::int64_t observed = 0;
    double expected_probability = 0.0;
    // Binomial z-score; 0 for a zero-variance cell with the exact expected
    // count, infinity for a zero-variance cell that deviates.
    double z = 0.0;
    bool pass = false;  // |z| <= 4
};

struct ComparisonReport {
    std::vector<CellComparison> cells;
    double chi_square = 0.0;
    int degrees_of_freedom = 0;
    double p_value = 1.0;
    bool pass = false;  // every cell passes
};

// Per-cell z-scores of observed counts against the exact cell
// probabilities of the scenario; verdict passes iff every |z| <= 4.
ComparisonReport compare_to_exact(const BatchStats& stats, const ShutterScenario& s);

// Upper tail of the chi-square distribution with `dof` degrees of freedom,
// via the regularized incomplete gamma function.
double chi_square_tail(double chi_square, int dof);

}  // namespace shutterbox
