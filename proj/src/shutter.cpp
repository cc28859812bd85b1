#include "shutterbox/shutter.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace shutterbox {

namespace {

constexpr const char* photon_name = "photon";
constexpr const char* shutter_name = "shutter";

std::string primed(const std::string& label) { return label + "'"; }

double vector_norm(const std::vector<Cx>& v) {
    double sum = 0.0;
    for (const Cx& a : v) sum += std::norm(a);
    return std::sqrt(sum);
}

}  // namespace

ShutterScenario::ShutterScenario(std::vector<std::string> shutters,
                                 std::vector<std::string> photon_modes,
                                 std::vector<Cx> photon_amplitudes, StateVector pre_state,
                                 StateVector post_state,
                                 std::vector<StateVector> post_basis_extension)
    : shutters_(std::move(shutters)),
      photon_modes_(std::move(photon_modes)),
      photon_amplitudes_(std::move(photon_amplitudes)),
      pre_state_(std::move(pre_state)),
      post_state_(std::move(post_state)),
      extension_(std::move(post_basis_extension)) {
    if (shutters_.size() < 2) throw ValidationError("scenario needs at least two shutters");
    if (photon_modes_.empty()) throw ValidationError("scenario needs at least one photon mode");
    if (photon_modes_.size() >= shutters_.size())
        throw ValidationError("photon mode count must be smaller than the shutter count");

    const std::unordered_set<std::string> shutter_set(shutters_.begin(), shutters_.end());
    if (shutter_set.size() != shutters_.size())
        throw ValidationError("duplicate shutter labels");
    std::unordered_set<std::string> mode_set;
    for (const auto& mode : photon_modes_) {
        if (!shutter_set.count(mode))
            throw ValidationError("photon mode '" + mode + "' is not a shutter label");
        if (!mode_set.insert(mode).second)
            throw ValidationError("duplicate photon mode '" + mode + "'");
    }

    if (photon_amplitudes_.size() != photon_modes_.size())
        throw ValidationError("one photon amplitude per photon mode required");
    for (const Cx& a : photon_amplitudes_)
        if (!is_finite(a)) throw ValidationError("non-finite photon amplitude");
    if (std::abs(vector_norm(photon_amplitudes_) - 1.0) > eps_norm)
        throw ValidationError("photon amplitudes are not normalized");

    const SpaceShape space = shutter_space();
    if (!(pre_state_.shape() == space))
        throw ShapeError("pre-state is not over the scenario's shutter space");
    if (!(post_state_.shape() == space))
        throw ShapeError("post-state is not over the scenario's shutter space");
    pre_state_.require_normalized("scenario pre-state");
    post_state_.require_normalized("scenario post-state");

    if (!extension_.empty()) {
        if (extension_.size() != shutters_.size() - 1)
            throw ValidationError("post-basis extension must complete the shutter space");
        std::vector<StateVector> full{post_state_};
        full.insert(full.end(), extension_.begin(), extension_.end());
        // Subspace construction checks pairwise orthonormality.
        Subspace(space, std::move(full));
    }
}

SpaceShape ShutterScenario::shutter_space() const { return SpaceShape(shutter_name, shutters_); }

SpaceShape ShutterScenario::photon_space() const {
    std::vector<std::string> labels;
    labels.reserve(photon_modes_.size());
    for (const auto& mode : photon_modes_) labels.push_back(primed(mode));
    return SpaceShape(photon_name, std::move(labels));
}

SpaceShape ShutterScenario::joint_space() const {
    return photon_space().tensor_with(shutter_space());
}

StateVector ShutterScenario::photon_state() const {
    return StateVector(photon_space(), photon_amplitudes_, true);
}

ShutterScenario ShutterScenario::with_photon_amplitudes(std::vector<Cx> amplitudes) const {
    return ShutterScenario(shutters_, photon_modes_, std::move(amplitudes), pre_state_,
                           post_state_, extension_);
}

ThreeBoxPostSelection three_box_post_selection(const SpaceShape& shutter_space) {
    if (shutter_space.dimension() != 3)
        throw ValidationError("three-box post-selection needs a 3-dimensional shutter space");
    const double r6 = 1.0 / std::sqrt(6.0);
    const double r2 = 1.0 / std::sqrt(2.0);

    // The two explicit members of the post-selection basis; the post-state
    // itself is pinned down as their orthogonal complement.
    const StateVector post_prime(shutter_space, {Cx(r6, 0), Cx(r6, 0), Cx(2 * r6, 0)}, true);
    const StateVector post_double_prime(shutter_space, {Cx(r2, 0), Cx(-r2, 0), Cx(0, 0)}, true);
    const auto complement = orthogonal_complement({post_prime, post_double_prime});
    return {complement.at(0), {post_prime, post_double_prime}};
}

ShutterScenario default_scenario(std::size_t shutter_count) {
    if (shutter_count != 3)
        throw ValidationError(
            "no default post-state is defined for shutter_count != 3; supply one explicitly");

    const SpaceShape space("shutter", {"a", "b", "c"});
    const double r2 = 1.0 / std::sqrt(2.0);
    const ThreeBoxPostSelection three_box = three_box_post_selection(space);
    return ShutterScenario({"a", "b", "c"}, {"a", "b"}, {Cx(r2, 0), Cx(r2, 0)},
                           StateVector::uniform(space), three_box.post, three_box.extension);
}

StateVector joint_initial(const ShutterScenario& s) {
    // Both factors are unit norm, so this only rounds away their product's
    // accumulated tolerance.
    return normalize(tensor(s.photon_state(), s.pre_state()));
}

InteractionSplit interact(const StateVector& joint) {
    const SpaceShape& shape = joint.shape();
    if (shape.subsystem_count() != 2 || shape.subsystem(0).name != photon_name ||
        shape.subsystem(1).name != shutter_name)
        throw ShapeError("interaction requires a photon ⊗ shutter joint state");
    joint.require_normalized("interaction joint state");

    const auto& photon_labels = shape.subsystem(0).basis;
    const auto& shutter_labels = shape.subsystem(1).basis;
    std::vector<Cx> reflected(joint.dimension());
    std::vector<Cx> transmitted(joint.dimension());
    for (std::size_t i = 0; i < photon_labels.size(); ++i)
        for (std::size_t j = 0; j < shutter_labels.size(); ++j) {
            const std::size_t flat = i * shutter_labels.size() + j;
            if (photon_labels[i] == primed(shutter_labels[j]))
                reflected[flat] = joint.amplitude(flat);
            else
                transmitted[flat] = joint.amplitude(flat);
        }

    InteractionSplit split{StateVector(shape, std::move(reflected)),
                           StateVector(shape, std::move(transmitted)), 0.0, 0.0};
    const double nr = norm(split.reflected);
    const double nt = norm(split.transmitted);
    split.p_reflect = nr * nr;
    split.p_transmit = nt * nt;
    return split;
}

StateVector transmitted_state(const ShutterScenario& s) {
    const InteractionSplit split = interact(joint_initial(s));
    if (split.p_transmit <= eps_zero)
        throw DegenerateError("transmitted branch vanishes: photon blocked in every mode");
    return normalize(split.transmitted);
}

Subspace postselection_subspace(const ShutterScenario& s) {
    const SpaceShape photon = s.photon_space();
    std::vector<StateVector> basis;
    basis.reserve(s.photon_mode_count());
    for (const auto& mode : s.photon_modes())
        basis.push_back(tensor(StateVector::basis_state(photon, primed(mode)), s.post_state()));
    return Subspace(s.joint_space(), std::move(basis));
}

std::vector<StateVector> postselection_joint_basis(const ShutterScenario& s) {
    std::vector<StateVector> shutter_basis{s.post_state()};
    if (!s.post_basis_extension().empty()) {
        shutter_basis.insert(shutter_basis.end(), s.post_basis_extension().begin(),
                             s.post_basis_extension().end());
    } else {
        for (auto& v : orthogonal_complement({s.post_state()}))
            shutter_basis.push_back(std::move(v));
    }

    const SpaceShape photon = s.photon_space();
    std::vector<StateVector> joint_basis;
    joint_basis.reserve(shutter_basis.size() * s.photon_mode_count());
    for (const StateVector& v : shutter_basis)
        for (const auto& mode : s.photon_modes())
            joint_basis.push_back(tensor(StateVector::basis_state(photon, primed(mode)), v));
    return joint_basis;
}

std::vector<Cx> transmitted_in_postselection_basis(const ShutterScenario& s) {
    return change_basis(transmitted_state(s), postselection_joint_basis(s));
}

DensityOperator reflected_reduced_density(const ShutterScenario& s) {
    const InteractionSplit split = interact(joint_initial(s));
    if (split.p_reflect <= eps_zero)
        throw DegenerateError("reflected branch vanishes: photon cannot meet the particle");
    return partial_trace(DensityOperator::from_pure(normalize(split.reflected)), shutter_name);
}

double postselection_prob_given_reflection(const ShutterScenario& s) {
    return expectation_trace(projector({s.post_state()}), reflected_reduced_density(s));
}

CertaintyOrthogonalityReport certainty_orthogonality_report(const ShutterScenario& s) {
    CertaintyOrthogonalityReport report;
    report.residual = std::sqrt(postselect(transmitted_state(s), postselection_subspace(s)).probability);

    const PrePostEnsemble ensemble(s.pre_state(), s.post_state());
    const SpaceShape space = s.shutter_space();
    report.all_modes_certain = true;
    for (const auto& mode : s.photon_modes()) {
        const Observable look = Observable::presence_at(space, mode);
        const double p = abl_probability(ensemble, look, look.outcome_index("in " + mode));
        const bool certain = std::abs(p - 1.0) <= certainty_tol;
        report.modes.push_back({mode, p, certain});
        report.all_modes_certain = report.all_modes_certain && certain;
    }
    report.residual_vanishes = report.residual <= eps_orth;
    report.equivalence_holds = report.residual_vanishes == report.all_modes_certain;
    return report;
}

}  // namespace shutterbox
