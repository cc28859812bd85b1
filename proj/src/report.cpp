#include "shutterbox/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace shutterbox {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string fmt(Cx z) {
    if (z.imag() == 0.0) return fmt(z.real());
    std::string out = fmt(z.real());
    out += (z.imag() < 0.0 ? " - " : " + ");
    out += fmt(std::abs(z.imag()));
    out += "i";
    return out;
}

nlohmann::json json_pair(Cx z) { return {z.real(), z.imag()}; }

nlohmann::json json_pairs(const std::vector<Cx>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const Cx& v : values) out.push_back(json_pair(v));
    return out;
}

}  // namespace

ExactReport exact_report(const ShutterScenario& s) {
    ExactReport report;
    const StateVector joint = joint_initial(s);
    const InteractionSplit split = interact(joint);

    report.joint_amplitudes = joint.amplitudes();
    report.reflected_amplitudes = split.reflected.amplitudes();
    report.transmitted_amplitudes = split.transmitted.amplitudes();
    report.p_reflect = split.p_reflect;
    report.p_transmit = split.p_transmit;
    report.shutter_labels = s.shutters();
    for (std::size_t i = 0; i < joint.dimension(); ++i)
        report.joint_kets.push_back(joint.shape().ket_label(i));

    if (split.p_reflect > eps_zero) {
        const DensityOperator reduced = reflected_reduced_density(s);
        std::vector<std::vector<Cx>> density(reduced.dimension());
        for (std::size_t i = 0; i < reduced.dimension(); ++i)
            for (std::size_t j = 0; j < reduced.dimension(); ++j)
                density[i].push_back(reduced.entry(i, j));
        report.reflected_reduced_density = std::move(density);
        const double p_ps = postselection_prob_given_reflection(s);
        report.p_postselect_given_reflect = p_ps;
        report.p_reflect_and_postselect = split.p_reflect * p_ps;
    }

    if (split.p_transmit > eps_zero) {
        report.postselection_basis_coefficients = transmitted_in_postselection_basis(s);
        report.postselection_residual =
            std::sqrt(postselect(transmitted_state(s), postselection_subspace(s)).probability);
    }
    return report;
}

AblReport abl_report(const ShutterScenario& s) {
    const PrePostEnsemble ensemble(s.pre_state(), s.post_state());
    const SpaceShape space = s.shutter_space();
    AblReport report;
    for (const auto& shutter : s.shutters()) {
        AblRow row;
        row.shutter = shutter;
        try {
            const Observable look = Observable::presence_at(space, shutter);
            const double p = abl_probability(ensemble, look, look.outcome_index("in " + shutter));
            row.probability = p;
            row.certain = std::abs(p - 1.0) <= certainty_tol;
        } catch (const DegenerateError& e) {
            row.error = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

SimulateReport simulate_report(const ShutterScenario& s, std::int64_t n, std::uint64_t seed) {
    SimulateReport report;
    report.stats = run_batch(s, n, seed);
    report.exact = exact_cell_probabilities(s);
    report.comparison = compare_to_exact(report.stats, s);
    return report;
}

nlohmann::json to_json(const ExactReport& report) {
    nlohmann::json doc;
    doc["joint_state"]["kets"] = report.joint_kets;
    doc["joint_state"]["amplitudes"] = json_pairs(report.joint_amplitudes);
    doc["branches"]["reflected"]["amplitudes"] = json_pairs(report.reflected_amplitudes);
    doc["branches"]["reflected"]["probability"] = report.p_reflect;
    doc["branches"]["transmitted"]["amplitudes"] = json_pairs(report.transmitted_amplitudes);
    doc["branches"]["transmitted"]["probability"] = report.p_transmit;

    doc["probabilities"]["reflect"] = report.p_reflect;
    doc["probabilities"]["transmit"] = report.p_transmit;
    if (report.p_postselect_given_reflect)
        doc["probabilities"]["postselect_given_reflect"] = *report.p_postselect_given_reflect;
    if (report.p_reflect_and_postselect)
        doc["probabilities"]["reflect_and_postselect"] = *report.p_reflect_and_postselect;

    if (report.reflected_reduced_density) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : *report.reflected_reduced_density) rows.push_back(json_pairs(row));
        doc["reflected_reduced_density"]["labels"] = report.shutter_labels;
        doc["reflected_reduced_density"]["matrix"] = rows;
    }
    if (report.postselection_basis_coefficients)
        doc["transmitted_in_postselection_basis"] =
            json_pairs(*report.postselection_basis_coefficients);
    if (report.postselection_residual)
        doc["postselection_residual"] = *report.postselection_residual;
    return doc;
}

nlohmann::json to_json(const AblReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : report.rows) {
        nlohmann::json r;
        r["shutter"] = row.shutter;
        if (row.probability) r["probability"] = *row.probability;
        r["certain"] = row.certain;
        if (row.error) r["error"] = *row.error;
        rows.push_back(std::move(r));
    }
    return {{"rows", rows}};
}

nlohmann::json to_json(const SimulateReport& report) {
    nlohmann::json doc;
    doc["n_runs"] = report.stats.n_runs;
    doc["seed"] = report.stats.seed;
    for (const PhotonResult r : {PhotonResult::reflected, PhotonResult::transmitted}) {
        doc["counts"][to_string(r)]["postselected"] = report.stats.count(r, true);
        doc["counts"][to_string(r)]["rejected"] = report.stats.count(r, false);
    }
    doc["exact"]["p_reflect"] = report.exact.reflect;
    doc["exact"]["p_postselect_given_reflect"] = report.exact.postselect_given_reflect;
    doc["exact"]["p_postselect_given_transmit"] = report.exact.postselect_given_transmit;

    nlohmann::json cells = nlohmann::json::array();
    for (const auto& cell : report.comparison.cells) {
        nlohmann::json c;
        c["photon_result"] = to_string(cell.photon_result);
        c["postselected"] = cell.postselected;
        c["observed"] = cell.observed;
        c["expected_probability"] = cell.expected_probability;
        c["z"] = std::isfinite(cell.z) ? nlohmann::json(cell.z) : nlohmann::json("infinite");
        c["pass"] = cell.pass;
        cells.push_back(std::move(c));
    }
    doc["comparison"]["cells"] = cells;
    doc["comparison"]["chi_square"] = report.comparison.chi_square;
    doc["comparison"]["degrees_of_freedom"] = report.comparison.degrees_of_freedom;
    doc["comparison"]["p_value"] = report.comparison.p_value;
    doc["comparison"]["pass"] = report.comparison.pass;
    return doc;
}

std::string to_text(const ExactReport& report) {
    std::ostringstream out;
    out << "Joint state after interaction\n";
    for (std::size_t i = 0; i < report.joint_kets.size(); ++i) {
        const Cx a = report.joint_amplitudes[i];
        const Cx r = report.reflected_amplitudes[i];
        out << "  " << report.joint_kets[i] << "  " << fmt(a);
        if (std::abs(a) > eps_zero)
            out << (std::abs(r) > eps_zero ? "  [reflected]" : "  [transmitted]");
        out << "\n";
    }
    out << "\nProbabilities\n";
    out << "  reflect                  " << fmt(report.p_reflect) << "\n";
    out << "  transmit                 " << fmt(report.p_transmit) << "\n";
    if (report.p_postselect_given_reflect)
        out << "  postselect | reflect     " << fmt(*report.p_postselect_given_reflect) << "\n";
    if (report.p_reflect_and_postselect)
        out << "  reflect & postselect     " << fmt(*report.p_reflect_and_postselect) << "\n";

    if (report.reflected_reduced_density) {
        out << "\nReflected reduced density (shutter space";
        for (const auto& label : report.shutter_labels) out << " " << label;
        out << ")\n";
        for (const auto& row : *report.reflected_reduced_density) {
            out << " ";
            for (const Cx& e : row) out << " " << fmt(e);
            out << "\n";
        }
    }

    if (report.postselection_basis_coefficients) {
        out << "\nTransmitted state in the post-selection basis\n  (";
        bool first = true;
        for (const Cx& c : *report.postselection_basis_coefficients) {
            if (!first) out << ", ";
            out << fmt(c);
            first = false;
        }
        out << ")\n";
        out << "  residual against post-selection subspace: "
            << fmt(*report.postselection_residual) << "\n";
    }
    return out.str();
}

std::string to_text(const AblReport& report) {
    std::ostringstream out;
    out << "Probability of finding the particle when looking in one place only\n";
    for (const auto& row : report.rows) {
        out << "  " << row.shutter << "  ";
        if (row.probability)
            out << fmt(*row.probability) << (row.certain ? "  (certain)" : "");
        else
            out << "degenerate: " << *row.error;
        out << "\n";
    }
    return out.str();
}

std::string to_text(const SimulateReport& report) {
    std::ostringstream out;
    out << "Batch of " << report.stats.n_runs << " runs, seed " << report.stats.seed << "\n";
    out << "  cell                        count      expected p     z\n";
    for (const auto& cell : report.comparison.cells) {
        char line[160];
        std::snprintf(line, sizeof(line), "  %-11s %-12s %9lld   %12.6g  %8.3f %s\n",
                      to_string(cell.photon_result).c_str(),
                      cell.postselected ? "postselected" : "rejected",
                      static_cast<long long>(cell.observed), cell.expected_probability, cell.z,
                      cell.pass ? "" : " FAIL");
        out << line;
    }
    out << "  chi-square " << fmt(report.comparison.chi_square) << " on "
        << report.comparison.degrees_of_freedom
        << " dof, p = " << fmt(report.comparison.p_value) << "\n";
    out << "  verdict: " << (report.comparison.pass ? "pass" : "FAIL") << "\n";
    return out.str();
}

}  // namespace shutterbox
