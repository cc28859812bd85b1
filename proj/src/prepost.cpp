#include "shutterbox/prepost.hpp"

#include <cmath>

namespace shutterbox {

namespace {

void validate_observable(const SpaceShape& shape, const std::vector<OutcomeProjector>& outcomes) {
    if (outcomes.empty()) throw ValidationError("observable needs at least one outcome");
    Operator sum = Operator::zero(shape);
    for (const auto& outcome : outcomes) {
        if (!(outcome.projector.shape() == shape))
            throw ShapeError("outcome projector shape differs from observable shape");
        sum = sum + outcome.projector;
    }
    const Operator defect = sum - Operator::identity(shape);
    for (const Cx& e : defect.entries())
        if (std::abs(e) > eps_herm)
            throw ValidationError("outcome projectors do not sum to the identity");
    for (std::size_t i = 0; i < outcomes.size(); ++i)
        for (std::size_t j = i + 1; j < outcomes.size(); ++j) {
            const Operator cross = outcomes[i].projector * outcomes[j].projector;
            for (const Cx& e : cross.entries())
                if (std::abs(e) > eps_herm)
                    throw ValidationError("outcome projectors '" + outcomes[i].label + "' and '" +
                                          outcomes[j].label + "' are not orthogonal");
        }
}

}  // namespace

Observable::Observable(SpaceShape shape, std::vector<OutcomeProjector> outcomes)
    : shape_(std::move(shape)), outcomes_(std::move(outcomes)) {
    validate_observable(shape_, outcomes_);
}

Observable Observable::projective(const SpaceShape& shape) {
    std::vector<OutcomeProjector> outcomes;
    outcomes.reserve(shape.dimension());
    for (std::size_t k = 0; k < shape.dimension(); ++k) {
        Operator p = Operator::zero(shape);
        p.entry(k, k) = Cx(1.0, 0.0);
        std::string label;
        for (const auto& part : shape.labels_of(k)) {
            if (!label.empty()) label += ",";
            label += part;
        }
        outcomes.push_back({std::move(label), std::move(p)});
    }
    return Observable(shape, std::move(outcomes));
}

Observable Observable::presence_at(const SpaceShape& shape, const std::string& label) {
    if (shape.subsystem_count() != 1)
        throw ShapeError("presence observable is defined on a single-subsystem shape");
    const std::size_t k = shape.label_index(0, label);
    Operator in = Operator::zero(shape);
    in.entry(k, k) = Cx(1.0, 0.0);
    const Operator out = Operator::identity(shape) - in;
    std::vector<OutcomeProjector> outcomes;
    outcomes.push_back({"in " + label, std::move(in)});
    outcomes.push_back({"not in " + label, out});
    return Observable(shape, std::move(outcomes));
}

std::size_t Observable::outcome_index(const std::string& label) const {
    for (std::size_t i = 0; i < outcomes_.size(); ++i)
        if (outcomes_[i].label == label) return i;
    throw ValidationError("unknown outcome label '" + label + "'");
}

PrePostEnsemble::PrePostEnsemble(StateVector pre_state, StateVector post_state)
    : pre(std::move(pre_state)), post(std::move(post_state)) {
    if (!(pre.shape() == post.shape()))
        throw ShapeError("pre- and post-selection states have different shapes");
    pre.require_normalized("pre-selection state");
    post.require_normalized("post-selection state");
}

double born_probability(const StateVector& state, const Operator& outcome_projector) {
    state.require_normalized("Born rule input state");
    if (!(state.shape() == outcome_projector.shape()))
        throw ShapeError("state and projector shapes differ");
    return inner(state, apply(outcome_projector, state)).real();
}

std::vector<double> abl_distribution(const PrePostEnsemble& ens, const Observable& obs) {
    if (!(ens.pre.shape() == obs.shape()))
        throw ShapeError("ensemble and observable shapes differ");
    std::vector<double> weights;
    weights.reserve(obs.outcomes().size());
    double denominator = 0.0;
    for (const auto& outcome : obs.outcomes()) {
        const double w = std::norm(inner(ens.post, apply(outcome.projector, ens.pre)));
        weights.push_back(w);
        denominator += w;
    }
    if (denominator <= eps_zero)
        throw DegenerateError(
            "post-selection is impossible after every intermediate outcome of this observable");
    for (double& w : weights) w /= denominator;
    return weights;
}

double abl_probability(const PrePostEnsemble& ens, const Observable& obs,
                       std::size_t outcome_index) {
    const auto distribution = abl_distribution(ens, obs);
    if (outcome_index >= distribution.size())
        throw ValidationError("observable outcome index out of range");
    return distribution[outcome_index];
}

std::vector<std::string> certainty_outcomes(const PrePostEnsemble& ens, const Observable& obs) {
    const auto distribution = abl_distribution(ens, obs);
    std::vector<std::string> certain;
    for (std::size_t k = 0; k < distribution.size(); ++k)
        if (std::abs(distribution[k] - 1.0) <= certainty_tol)
            certain.push_back(obs.outcomes()[k].label);
    return certain;
}

Subspace::Subspace(SpaceShape shape, std::vector<StateVector> basis)
    : shape_(std::move(shape)), basis_(std::move(basis)) {
    if (basis_.empty()) throw ValidationError("subspace needs at least one basis vector");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!(basis_[i].shape() == shape_))
            throw ShapeError("subspace basis vector shape differs from subspace shape");
        for (std::size_t j = 0; j <= i; ++j) {
            const Cx g = inner(basis_[i], basis_[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - Cx(expected, 0.0)) > eps_orth)
                throw ValidationError("subspace basis is not orthonormal");
        }
    }
}

Operator Subspace::projector() const { return shutterbox::projector(basis_); }

PostselectResult postselect(const StateVector& state, const Subspace& subspace) {
    state.require_normalized("post-selection input state");
    if (!(state.shape() == subspace.shape()))
        throw ShapeError("state and subspace shapes differ");
    StateVector projected = StateVector::zero(state.shape());
    for (const StateVector& b : subspace.basis()) projected = projected + inner(b, state) * b;
    const double n = norm(projected);
    PostselectResult result;
    result.probability = n * n;
    if (result.probability > eps_zero) result.collapsed = normalize(projected);
    return result;
}

}  // namespace shutterbox
