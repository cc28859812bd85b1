#include "shutterbox/state.hpp"

#include <cmath>

namespace shutterbox {

StateVector::StateVector(SpaceShape shape, std::vector<Cx> amplitudes, bool normalized)
    : shape_(std::move(shape)), amplitudes_(std::move(amplitudes)), normalized_(normalized) {
    if (amplitudes_.size() != shape_.dimension())
        throw ShapeError("amplitude count does not match shape dimension");
    for (const Cx& a : amplitudes_)
        if (!is_finite(a)) throw ValidationError("non-finite amplitude");
    if (normalized_) require_normalized("state marked normalized");
}

StateVector StateVector::zero(SpaceShape shape) {
    const std::size_t dim = shape.dimension();
    return StateVector(std::move(shape), std::vector<Cx>(dim));
}

StateVector StateVector::uniform(SpaceShape shape) {
    const std::size_t dim = shape.dimension();
    std::vector<Cx> amplitudes(dim, Cx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
    return StateVector(std::move(shape), std::move(amplitudes), true);
}

StateVector StateVector::basis_state(const SpaceShape& shape,
                                     std::span<const std::string> labels) {
    if (labels.size() != shape.subsystem_count())
        throw ShapeError("one basis label per subsystem required");
    std::vector<std::size_t> digits(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) digits[i] = shape.label_index(i, labels[i]);
    std::vector<Cx> amplitudes(shape.dimension());
    amplitudes[shape.flat_index(digits)] = Cx(1.0, 0.0);
    return StateVector(shape, std::move(amplitudes), true);
}

StateVector StateVector::basis_state(const SpaceShape& shape, const std::string& label) {
    const std::vector<std::string> labels{label};
    return basis_state(shape, labels);
}

void StateVector::require_normalized(const std::string& what) const {
    if (std::abs(norm(*this) - 1.0) > eps_norm)
        throw ValidationError(what + ": not normalized (norm = " +
                              std::to_string(norm(*this)) + ")");
}

StateVector operator+(const StateVector& u, const StateVector& v) {
    if (!(u.shape_ == v.shape_)) throw ShapeError("state shapes differ in addition");
    std::vector<Cx> out = u.amplitudes_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += v.amplitudes_[i];
    return StateVector(u.shape_, std::move(out));
}

StateVector operator-(const StateVector& u, const StateVector& v) {
    if (!(u.shape_ == v.shape_)) throw ShapeError("state shapes differ in subtraction");
    std::vector<Cx> out = u.amplitudes_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= v.amplitudes_[i];
    return StateVector(u.shape_, std::move(out));
}

StateVector operator*(Cx scale, const StateVector& v) {
    std::vector<Cx> out = v.amplitudes_;
    for (Cx& a : out) a *= scale;
    return StateVector(v.shape_, std::move(out));
}

double norm(const StateVector& v) {
    double sum = 0.0;
    for (const Cx& a : v.amplitudes()) sum += std::norm(a);
    return std::sqrt(sum);
}

StateVector normalize(const StateVector& v) {
    const double n = norm(v);
    if (n <= eps_zero) throw DegenerateError("cannot normalize a zero vector");
    std::vector<Cx> out = v.amplitudes();
    for (Cx& a : out) a /= n;
    return StateVector(v.shape(), std::move(out), true);
}

}  // namespace shutterbox
