#include "shutterbox/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace shutterbox {

StateVector tensor(const StateVector& u, const StateVector& v) {
    SpaceShape shape = u.shape().tensor_with(v.shape());
    const std::size_t dv = v.dimension();
    std::vector<Cx> out(u.dimension() * dv);
    for (std::size_t i = 0; i < u.dimension(); ++i) {
        const Cx ui = u.amplitude(i);
        for (std::size_t j = 0; j < dv; ++j) out[i * dv + j] = ui * v.amplitude(j);
    }
    return StateVector(std::move(shape), std::move(out));
}

Cx inner(const StateVector& u, const StateVector& v) {
    if (!(u.shape() == v.shape())) throw ShapeError("state shapes differ in inner product");
    Cx acc(0.0, 0.0);
    for (std::size_t i = 0; i < u.dimension(); ++i)
        acc += std::conj(u.amplitude(i)) * v.amplitude(i);
    return acc;
}

StateVector canonical_phase(const StateVector& v) {
    for (std::size_t i = 0; i < v.dimension(); ++i) {
        const Cx a = v.amplitude(i);
        const double m = std::abs(a);
        if (m > eps_zero) return (std::conj(a) / m) * v;
    }
    return v;
}

namespace {

// Subtracts the projection of w onto each basis vector, in order.
StateVector project_out(StateVector w, const std::vector<StateVector>& basis) {
    for (const StateVector& b : basis) w = w - inner(b, w) * b;
    return w;
}

}  // namespace

std::vector<StateVector> orthonormalize(const std::vector<StateVector>& vectors) {
    std::vector<StateVector> basis;
    basis.reserve(vectors.size());
    for (const StateVector& v : vectors) {
        if (!basis.empty() && !(v.shape() == basis.front().shape()))
            throw ShapeError("mixed shapes in orthonormalization");
        const double original = norm(v);
        if (original <= eps_zero) throw ValidationError("zero vector in span");
        // Two projection passes: the second removes the rounding left by
        // the first when the new vector is nearly in the current span.
        StateVector w = project_out(project_out(v, basis), basis);
        if (norm(w) <= eps_orth * original)
            throw ValidationError("linearly dependent spanning set");
        basis.push_back(normalize(w));
    }
    return basis;
}

std::vector<StateVector> orthogonal_complement(const std::vector<StateVector>& vectors) {
    if (vectors.empty())
        throw ValidationError("orthogonal complement of an empty list is not defined");
    std::vector<StateVector> basis = orthonormalize(vectors);
    const SpaceShape& shape = vectors.front().shape();
    const std::size_t input_rank = basis.size();
    const std::size_t wanted = shape.dimension() - input_rank;

    // Candidate residuals below this threshold are skipped. Any direction
    // still missing from the span forces some standard-basis residual of at
    // least 1/sqrt(dim), so the scan always finds `wanted` vectors.
    constexpr double candidate_floor = 1e-6;

    std::vector<StateVector> complement;
    std::vector<Cx> one_hot(shape.dimension());
    for (std::size_t k = 0; k < shape.dimension() && complement.size() < wanted; ++k) {
        std::fill(one_hot.begin(), one_hot.end(), Cx(0.0, 0.0));
        one_hot[k] = Cx(1.0, 0.0);
        StateVector w = project_out(StateVector(shape, one_hot), basis);
        if (norm(w) <= candidate_floor) continue;
        w = project_out(w, basis);
        StateVector unit = canonical_phase(normalize(w));
        complement.push_back(unit);
        basis.push_back(std::move(unit));
    }
    return complement;
}

std::vector<Cx> change_basis(const StateVector& u, const std::vector<StateVector>& basis) {
    if (basis.size() != u.dimension())
        throw ValidationError("basis does not span the space (wrong vector count)");
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!(basis[i].shape() == u.shape()))
            throw ShapeError("basis vector shape differs from state shape");
        for (std::size_t j = 0; j <= i; ++j) {
            const Cx g = inner(basis[i], basis[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(g - Cx(expected, 0.0)) > eps_orth)
                throw ValidationError("basis is not orthonormal");
        }
    }
    std::vector<Cx> coefficients(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) coefficients[k] = inner(basis[k], u);
    return coefficients;
}

Operator projector(const std::vector<StateVector>& span) {
    if (span.empty()) throw ValidationError("projector of an empty span is not defined");
    const std::vector<StateVector> basis = orthonormalize(span);
    const SpaceShape& shape = span.front().shape();
    Operator p = Operator::zero(shape);
    for (const StateVector& b : basis)
        for (std::size_t i = 0; i < b.dimension(); ++i) {
            const Cx bi = b.amplitude(i);
            if (bi == Cx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.dimension(); ++j)
                p.entry(i, j) += bi * std::conj(b.amplitude(j));
        }
    return p;
}

DensityOperator partial_trace(const DensityOperator& rho, std::string_view keep) {
    const SpaceShape& shape = rho.shape();
    const std::size_t kept = shape.subsystem_index(keep);
    const std::size_t kept_dim = shape.subsystem(kept).basis.size();
    const std::size_t kept_stride = shape.stride(kept);

    std::vector<Cx> entries(kept_dim * kept_dim);
    for (std::size_t f = 0; f < shape.dimension(); ++f) {
        if ((f / kept_stride) % kept_dim != 0) continue;  // environment index, kept digit 0
        for (std::size_t i = 0; i < kept_dim; ++i)
            for (std::size_t j = 0; j < kept_dim; ++j)
                entries[i * kept_dim + j] += rho.entry(f + i * kept_stride, f + j * kept_stride);
    }
    return DensityOperator::from_matrix(SpaceShape({shape.subsystem(kept)}), std::move(entries));
}

std::vector<double> hermitian_eigenvalues(const Operator& a) {
    if (hermiticity_defect(a) > eps_herm)
        throw ValidationError("eigensolver requires a Hermitian operator");
    const std::size_t d = a.dimension();

    // Work on an exactly Hermitian copy.
    std::vector<Cx> m(a.entries());
    for (std::size_t p = 0; p < d; ++p) {
        m[p * d + p] = Cx(m[p * d + p].real(), 0.0);
        for (std::size_t q = p + 1; q < d; ++q) {
            const Cx avg = 0.5 * (m[p * d + q] + std::conj(m[q * d + p]));
            m[p * d + q] = avg;
            m[q * d + p] = std::conj(avg);
        }
    }

    double scale = 0.0;
    for (const Cx& e : m) scale += std::norm(e);
    scale = std::sqrt(scale);
    const double tol = 1e-14 * std::max(1.0, scale);

    // Cyclic complex Jacobi: each rotation zeroes one off-diagonal pair.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) off += 2.0 * std::norm(m[p * d + q]);
        if (std::sqrt(off) <= tol) break;

        for (std::size_t p = 0; p < d; ++p)
            for (std::size_t q = p + 1; q < d; ++q) {
                const Cx g = m[p * d + q];
                const double mag = std::abs(g);
                if (mag <= tol / (d * d)) continue;
                const Cx phase = g / mag;
                const double alpha = m[p * d + p].real();
                const double beta = m[q * d + q].real();
                const double theta = (beta - alpha) / (2.0 * mag);
                const double t =
                    (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = t * c;

                // Unitary J: J(p,p)=c, J(p,q)=s, J(q,p)=-s*conj(phase),
                // J(q,q)=c*conj(phase); update A <- J^dagger A J.
                for (std::size_t i = 0; i < d; ++i) {
                    const Cx aip = m[i * d + p];
                    const Cx aiq = m[i * d + q];
                    m[i * d + p] = c * aip - s * std::conj(phase) * aiq;
                    m[i * d + q] = s * aip + c * std::conj(phase) * aiq;
                }
                for (std::size_t j = 0; j < d; ++j) {
                    const Cx apj = m[p * d + j];
                    const Cx aqj = m[q * d + j];
                    m[p * d + j] = c * apj - s * phase * aqj;
                    m[q * d + j] = s * apj + c * phase * aqj;
                }
                m[p * d + q] = Cx(0.0, 0.0);
                m[q * d + p] = Cx(0.0, 0.0);
                m[p * d + p] = Cx(m[p * d + p].real(), 0.0);
                m[q * d + q] = Cx(m[q * d + q].real(), 0.0);
            }
    }

    std::vector<double> eigenvalues(d);
    for (std::size_t i = 0; i < d; ++i) eigenvalues[i] = m[i * d + i].real();
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

}  // namespace shutterbox
