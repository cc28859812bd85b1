// shutter.hpp
// The N-shutter experiment, end to end: a particle in a superposition of
// shutter locations, a photon aimed at a subset of those locations, the
// reflected/transmitted split of the joint state after the interaction,
// and the post-selection subspace spanned by photon-mode ⊗ post-state
// vectors. Subsystems are ordered photon-first; photon basis labels are
// the primed shutter labels ("a" -> "a'").

#pragma once

#include <string>
#include <vector>

#include "shutterbox/prepost.hpp"

namespace shutterbox {

class ShutterScenario {
public:
    // shutters: all shutter labels (size M >= 2).
    // photon_modes: the 1 <= N < M shutters the photon can reach.
    // photon_amplitudes: N complex amplitudes, unit norm.
    // pre_state, post_state: normalized states on the shutter space.
    // post_basis_extension: optional orthonormal completion of
    // {post_state} on the shutter space, used when expressing states in
    // the post-selection basis; derived deterministically when empty.
    ShutterScenario(std::vector<std::string> shutters, std::vector<std::string> photon_modes,
                    std::vector<Cx> photon_amplitudes, StateVector pre_state,
                    StateVector post_state, std::vector<StateVector> post_basis_extension = {});

    const std::vector<std::string>& shutters() const { return shutters_; }
    const std::vector<std::string>& photon_modes() const { return photon_modes_; }
    const std::vector<Cx>& photon_amplitudes() const { return photon_amplitudes_; }
    const StateVector& pre_state() const { return pre_state_; }
    const StateVector& post_state() const { return post_state_; }
    const std::vector<StateVector>& post_basis_extension() const { return extension_; }

    std::size_t shutter_count() const { return shutters_.size(); }
    std::size_t photon_mode_count() const { return photon_modes_.size(); }

    SpaceShape shutter_space() const;
    SpaceShape photon_space() const;
    SpaceShape joint_space() const;
    StateVector photon_state() const;

    // Same scenario with different photon amplitudes.
    ShutterScenario with_photon_amplitudes(std::vector<Cx> amplitudes) const;

private:
    std::vector<std::string> shutters_;
    std::vector<std::string> photon_modes_;
    std::vector<Cx> photon_amplitudes_;
    StateVector pre_state_;
    StateVector post_state_;
    std::vector<StateVector> extension_;
};

struct ThreeBoxPostSelection {
    StateVector post;                    // the derived post-selection state
    std::vector<StateVector> extension;  // the two explicit basis partners
};

// The three-box post-selection basis on a 3-dimensional shutter space:
// the two explicit vectors (1/√6)(|1⟩+|2⟩+2|3⟩) and (1/√2)(|1⟩−|2⟩)
// (positional, whatever the labels), plus the post-state derived as their
// orthogonal complement, which comes out to (1/√3)(|1⟩+|2⟩−|3⟩).
ThreeBoxPostSelection three_box_post_selection(const SpaceShape& shutter_space);

// The standard three-shutter configuration: shutters {a,b,c}, photon
// aimed uniformly at {a,b}, uniform pre-state, three-box post-state.
// Only shutter_count = 3 is defined; other counts need an explicitly
// supplied post-state.
ShutterScenario default_scenario(std::size_t shutter_count);

// Photon ⊗ pre-state product state before the interaction; normalized.
StateVector joint_initial(const ShutterScenario& s);

struct InteractionSplit {
    StateVector reflected;    // unnormalized branch, photon label matches shutter label
    StateVector transmitted;  // unnormalized branch, labels differ
    double p_reflect = 0.0;
    double p_transmit = 0.0;
};

// Splits a normalized joint state into reflected and transmitted branches
// by amplitude relabeling: the component |x'⟩|y⟩ is reflected iff x = y.
// The branches partition the amplitudes exactly.
InteractionSplit interact(const StateVector& joint);

// Normalized transmitted branch; throws DegenerateError when the photon is
// blocked in every accessible mode.
StateVector transmitted_state(const ShutterScenario& s);

// span{ |x'⟩ ⊗ post_state : x in photon_modes }, orthonormal by construction.
Subspace postselection_subspace(const ShutterScenario& s);

// Joint-space basis vectors |x'⟩ ⊗ |v⟩ with v running over {post_state} ∪
// extension (extension-major is v, photon mode x minor), i.e. the
// post-selection basis of the combined space.
std::vector<StateVector> postselection_joint_basis(const ShutterScenario& s);

// Coefficients of the transmitted state in the post-selection basis. The
// first photon_mode_count entries are the post-selection overlaps.
std::vector<Cx> transmitted_in_postselection_basis(const ShutterScenario& s);

// Partial trace over the photon of the normalized reflected branch's
// density operator.
DensityOperator reflected_reduced_density(const ShutterScenario& s);

// tr(|post⟩⟨post| · reflected reduced density).
double postselection_prob_given_reflection(const ShutterScenario& s);

struct ModeCertainty {
    std::string mode;
    double abl_probability = 0.0;
    bool certain = false;
};

struct CertaintyOrthogonalityReport {
    double residual = 0.0;  // ‖P_post · transmitted_state‖
    std::vector<ModeCertainty> modes;
    bool all_modes_certain = false;
    bool residual_vanishes = false;  // residual <= eps_orth
    bool equivalence_holds = false;  // residual_vanishes == all_modes_certain
};

// Connects the geometric statement (transmitted branch orthogonal to the
// post-selection subspace) with the per-mode intermediate-measurement
// certainties of the pre/post pair.
CertaintyOrthogonalityReport certainty_orthogonality_report(const ShutterScenario& s);

}  // namespace shutterbox
