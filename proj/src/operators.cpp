#include "shutterbox/operators.hpp"

#include <algorithm>
#include <cmath>

#include "shutterbox/linalg.hpp"

namespace shutterbox {

Operator::Operator(SpaceShape shape, std::vector<Cx> entries)
    : shape_(std::move(shape)), dim_(shape_.dimension()), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw ShapeError("operator entry count does not match shape dimension squared");
    for (const Cx& e : entries_)
        if (!is_finite(e)) throw ValidationError("non-finite operator entry");
}

Operator Operator::zero(SpaceShape shape) {
    const std::size_t dim = shape.dimension();
    return Operator(std::move(shape), std::vector<Cx>(dim * dim));
}

Operator Operator::identity(SpaceShape shape) {
    Operator out = zero(std::move(shape));
    for (std::size_t i = 0; i < out.dimension(); ++i) out.entry(i, i) = Cx(1.0, 0.0);
    return out;
}

Operator operator+(const Operator& a, const Operator& b) {
    if (!(a.shape_ == b.shape_)) throw ShapeError("operator shapes differ in addition");
    std::vector<Cx> out = a.entries_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.entries_[i];
    return Operator(a.shape_, std::move(out));
}

Operator operator-(const Operator& a, const Operator& b) {
    if (!(a.shape_ == b.shape_)) throw ShapeError("operator shapes differ in subtraction");
    std::vector<Cx> out = a.entries_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.entries_[i];
    return Operator(a.shape_, std::move(out));
}

Operator operator*(Cx scale, const Operator& a) {
    std::vector<Cx> out = a.entries_;
    for (Cx& e : out) e *= scale;
    return Operator(a.shape_, std::move(out));
}

Operator operator*(const Operator& a, const Operator& b) {
    if (!(a.shape_ == b.shape_)) throw ShapeError("operator shapes differ in product");
    const std::size_t d = a.dim_;
    Operator out = Operator::zero(a.shape_);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            const Cx aik = a.entry(i, k);
            if (aik == Cx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < d; ++j) out.entry(i, j) += aik * b.entry(k, j);
        }
    return out;
}

Operator adjoint(const Operator& a) {
    Operator out = Operator::zero(a.shape());
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j < a.dimension(); ++j)
            out.entry(i, j) = std::conj(a.entry(j, i));
    return out;
}

Cx trace_of(const Operator& a) {
    Cx t(0.0, 0.0);
    for (std::size_t i = 0; i < a.dimension(); ++i) t += a.entry(i, i);
    return t;
}

StateVector apply(const Operator& a, const StateVector& v) {
    if (!(a.shape() == v.shape())) throw ShapeError("operator and state shapes differ");
    const std::size_t d = a.dimension();
    std::vector<Cx> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        Cx acc(0.0, 0.0);
        for (std::size_t j = 0; j < d; ++j) acc += a.entry(i, j) * v.amplitude(j);
        out[i] = acc;
    }
    return StateVector(v.shape(), std::move(out));
}

double hermiticity_defect(const Operator& a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            worst = std::max(worst, std::abs(a.entry(i, j) - std::conj(a.entry(j, i))));
    return worst;
}

namespace {

void validate_density(const Operator& op) {
    if (hermiticity_defect(op) > eps_herm)
        throw ValidationError("density operator is not Hermitian");
    if (std::abs(trace_of(op) - Cx(1.0, 0.0)) > eps_norm)
        throw ValidationError("density operator trace differs from 1");
    const auto eigenvalues = hermitian_eigenvalues(op);
    if (!eigenvalues.empty() && eigenvalues.front() < -eps_psd)
        throw ValidationError("density operator has eigenvalue " +
                              std::to_string(eigenvalues.front()) + " below -eps_psd");
}

}  // namespace

DensityOperator DensityOperator::from_pure(const StateVector& psi) {
    psi.require_normalized("pure density operator input");
    const std::size_t d = psi.dimension();
    std::vector<Cx> entries(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            entries[i * d + j] = psi.amplitude(i) * std::conj(psi.amplitude(j));
    // |ψ⟩⟨ψ| of a normalized ψ is Hermitian PSD with unit trace by
    // construction; skip the eigensolve.
    return DensityOperator(Operator(psi.shape(), std::move(entries)));
}

DensityOperator DensityOperator::from_matrix(SpaceShape shape, std::vector<Cx> entries) {
    Operator op(std::move(shape), std::move(entries));
    validate_density(op);
    return DensityOperator(std::move(op));
}

double expectation_trace(const Operator& a, const DensityOperator& rho) {
    if (!(a.shape() == rho.shape()))
        throw ShapeError("operator and density operator shapes differ");
    Cx t(0.0, 0.0);
    const std::size_t d = a.dimension();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) t += a.entry(i, k) * rho.entry(k, i);
    return t.real();
}

}  // namespace shutterbox
