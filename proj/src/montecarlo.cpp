#include "shutterbox/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <thread>

namespace shutterbox {

std::string to_string(PhotonResult r) {
    return r == PhotonResult::reflected ? "reflected" : "transmitted";
}

namespace {

double clamp_probability(double p) {
    if (p <= eps_zero) return 0.0;
    if (p >= 1.0 - eps_zero) return 1.0;
    return p;
}

}  // namespace

CellProbabilities exact_cell_probabilities(const ShutterScenario& s) {
    const InteractionSplit split = interact(joint_initial(s));
    const Subspace subspace = postselection_subspace(s);

    CellProbabilities p;
    p.reflect = clamp_probability(split.p_reflect);
    if (p.reflect > 0.0)
        p.postselect_given_reflect =
            clamp_probability(postselect(normalize(split.reflected), subspace).probability);
    if (p.reflect < 1.0)
        p.postselect_given_transmit =
            clamp_probability(postselect(normalize(split.transmitted), subspace).probability);
    return p;
}

RunRecord sample_run(const CellProbabilities& p, std::int64_t run_index, RngStream& stream) {
    const bool reflected = stream.next_unit() < p.reflect;
    const double p_post = reflected ? p.postselect_given_reflect : p.postselect_given_transmit;
    const bool postselected = stream.next_unit() < p_post;
    return {reflected ? PhotonResult::reflected : PhotonResult::transmitted, postselected,
            run_index};
}

RunRecord sample_run(const ShutterScenario& s, std::int64_t run_index, RngStream& stream) {
    const CellProbabilities p = exact_cell_probabilities(s);
    return sample_run(p, run_index, stream);
}

namespace {

using CountGrid = std::array<std::array<std::int64_t, 2>, 2>;

CountGrid count_range(const CellProbabilities& p, std::uint64_t seed, std::int64_t begin,
                      std::int64_t end) {
    CountGrid counts{};
    for (std::int64_t i = begin; i < end; ++i) {
        RngStream stream(seed, static_cast<std::uint64_t>(i));
        const RunRecord record = sample_run(p, i, stream);
        ++counts[static_cast<std::size_t>(record.photon_result)][record.postselected ? 1 : 0];
    }
    return counts;
}

}  // namespace

BatchStats run_batch(const ShutterScenario& s, std::int64_t n, std::uint64_t seed) {
    if (n < 1) throw ValidationError("batch needs at least one run");
    const CellProbabilities p = exact_cell_probabilities(s);

    BatchStats stats;
    stats.n_runs = n;
    stats.seed = seed;

    unsigned workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (n < 32768 || workers == 1) {
        stats.counts = count_range(p, seed, 0, n);
        return stats;
    }

    // Per-run streams make the aggregate independent of the split points;
    // partial counts are added in shard order for good measure.
    const std::int64_t shard = (n + workers - 1) / workers;
    std::vector<CountGrid> partial(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::int64_t begin = std::min<std::int64_t>(n, w * shard);
        const std::int64_t end = std::min<std::int64_t>(n, begin + shard);
        threads.emplace_back(
            [&partial, &p, seed, begin, end, w] { partial[w] = count_range(p, seed, begin, end); });
    }
    for (auto& t : threads) t.join();
    for (const CountGrid& grid : partial)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) stats.counts[i][j] += grid[i][j];
    return stats;
}

namespace {

// Regularized incomplete gamma functions, series and continued-fraction
// forms chosen by the usual x < a+1 split.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 10000; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q_continued_fraction(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k < 10000; ++k) {
        const double an = -k * (k - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double gamma_q(double a, double x) {
    if (x < 0.0 || a <= 0.0) throw ValidationError("gamma_q requires x >= 0 and a > 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_continued_fraction(a, x);
}

}  // namespace

double chi_square_tail(double chi_square, int dof) {
    if (dof < 0) throw ValidationError("negative degrees of freedom");
    if (dof == 0) return chi_square <= 0.0 ? 1.0 : 0.0;
    return gamma_q(0.5 * dof, 0.5 * chi_square);
}

ComparisonReport compare_to_exact(const BatchStats& stats, const ShutterScenario& s) {
    const CellProbabilities p = exact_cell_probabilities(s);
    const double n = static_cast<double>(stats.n_runs);

    ComparisonReport report;
    report.pass = true;
    int populated_cells = 0;
    for (const PhotonResult result : {PhotonResult::reflected, PhotonResult::transmitted}) {
        const double p_branch = result == PhotonResult::reflected ? p.reflect : 1.0 - p.reflect;
        const double p_post = result == PhotonResult::reflected ? p.postselect_given_reflect
                                                                : p.postselect_given_transmit;
        for (const bool postselected : {false, true}) {
            CellComparison cell;
            cell.photon_result = result;
            cell.postselected = postselected;
            cell.observed = stats.count(result, postselected);
            cell.expected_probability = p_branch * (postselected ? p_post : 1.0 - p_post);

            const double expected = n * cell.expected_probability;
            const double variance = expected * (1.0 - cell.expected_probability);
            if (variance > 0.0) {
                cell.z = (static_cast<double>(cell.observed) - expected) / std::sqrt(variance);
            } else if (std::abs(static_cast<double>(cell.observed) - expected) < 0.5) {
                cell.z = 0.0;
            } else {
                cell.z = std::numeric_limits<double>::infinity();
            }
            cell.pass = std::abs(cell.z) <= 4.0;
            report.pass = report.pass && cell.pass;

            if (cell.expected_probability > 0.0) {
                ++populated_cells;
                const double deviation = static_cast<double>(cell.observed) - expected;
                report.chi_square += deviation * deviation / expected;
            }
            report.cells.push_back(cell);
        }
    }
    report.degrees_of_freedom = populated_cells > 0 ? populated_cells - 1 : 0;
    report.p_value = chi_square_tail(report.chi_square, report.degrees_of_freedom);
    return report;
}

}  // namespace shutterbox
