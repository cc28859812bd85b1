// prepost.hpp
// Pre/post-selected ensemble logic: Born probabilities, the
// Aharonov-Bergmann-Lebowitz rule for intermediate measurements on
// pre- and post-selected ensembles, certainty detection and subspace
// post-selection. No dynamics between the two selections is modeled;
// the free Hamiltonian is the identity.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shutterbox/linalg.hpp"
#include "shutterbox/operators.hpp"
#include "shutterbox/state.hpp"

namespace shutterbox {

struct OutcomeProjector {
    std::string label;
    Operator projector;
};

// A projective observable: mutually orthogonal projectors summing to the
// identity, one per outcome. Both conditions are verified on construction.
class Observable {
public:
    Observable(SpaceShape shape, std::vector<OutcomeProjector> outcomes);

    // One rank-1 outcome per basis vector; outcome labels are the joint
    // basis labels.
    static Observable projective(const SpaceShape& shape);

    // Two outcomes, "in <label>" and "not in <label>", for a
    // single-subsystem shape: looking for the particle only in one place.
    static Observable presence_at(const SpaceShape& shape, const std::string& label);

    const SpaceShape& shape() const { return shape_; }
    const std::vector<OutcomeProjector>& outcomes() const { return outcomes_; }
    std::size_t outcome_index(const std::string& label) const;

private:
    SpaceShape shape_;
    std::vector<OutcomeProjector> outcomes_;
};

// A pre-selected state and a post-selected state on the same space,
// both normalized.
struct PrePostEnsemble {
    StateVector pre;
    StateVector post;

    PrePostEnsemble(StateVector pre_state, StateVector post_state);
};

// ⟨ψ|P|ψ⟩ for a normalized state and an outcome projector.
double born_probability(const StateVector& state, const Operator& outcome_projector);

// |⟨ψ2|P_k|ψ1⟩|² / Σ_j |⟨ψ2|P_j|ψ1⟩|². Throws DegenerateError when the
// denominator vanishes (no intermediate outcome is compatible with both
// selections); that is an inconsistent ensemble, not probability 0.
double abl_probability(const PrePostEnsemble& ens, const Observable& obs,
                       std::size_t outcome_index);

// All outcomes in one pass; same degenerate-denominator contract.
std::vector<double> abl_distribution(const PrePostEnsemble& ens, const Observable& obs);

// Labels whose ABL probability is 1 within certainty_tol.
std::vector<std::string> certainty_outcomes(const PrePostEnsemble& ens, const Observable& obs);

// An orthonormal spanning set defining a projector.
class Subspace {
public:
    Subspace(SpaceShape shape, std::vector<StateVector> basis);

    const SpaceShape& shape() const { return shape_; }
    const std::vector<StateVector>& basis() const { return basis_; }
    std::size_t dimension() const { return basis_.size(); }
    Operator projector() const;

private:
    SpaceShape shape_;
    std::vector<StateVector> basis_;
};

struct PostselectResult {
    double probability = 0.0;
    // Absent when the probability is below eps_zero; never a NaN vector.
    std::optional<StateVector> collapsed;
};

// Projects a normalized state onto the subspace: probability ‖P·state‖²
// and, when that is nonzero, the renormalized projection.
PostselectResult postselect(const StateVector& state, const Subspace& subspace);

}  // namespace shutterbox
