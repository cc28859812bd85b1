// linalg.hpp
// Vector-space operations on labeled states and operators: tensor products,
// inner products, orthonormalization, basis changes, projectors, partial
// traces and a small Hermitian eigensolver.

#pragma once

#include <string_view>
#include <vector>

#include "shutterbox/operators.hpp"
#include "shutterbox/state.hpp"

namespace shutterbox {

// Kronecker product; the left operand's subsystems come first in the result
// shape. Throws ShapeError on a subsystem name collision.
StateVector tensor(const StateVector& u, const StateVector& v);

// ⟨u|v⟩, conjugate-linear in u. Throws ShapeError unless shapes match.
Cx inner(const StateVector& u, const StateVector& v);

// Rotates v by a global phase so its first coefficient of magnitude
// above eps_zero is real and positive.
StateVector canonical_phase(const StateVector& v);

// Modified Gram-Schmidt with one re-orthogonalization pass. Throws
// ValidationError if the input is linearly dependent (or contains a vector
// of norm <= eps_zero). Does not alter the span or the leading direction.
std::vector<StateVector> orthonormalize(const std::vector<StateVector>& vectors);

// Orthonormal basis of the orthogonal complement of span(vectors),
// deterministic: candidates are taken from the standard basis in index
// order and each result is put in canonical phase. An empty input list is
// not allowed; for a full-rank input the result is empty.
std::vector<StateVector> orthogonal_complement(const std::vector<StateVector>& vectors);

// Coefficients of u in an orthonormal basis spanning the whole space:
// c_k = ⟨basis_k|u⟩. Throws ValidationError if the basis is not orthonormal
// within eps_orth or has the wrong count.
std::vector<Cx> change_basis(const StateVector& u, const std::vector<StateVector>& basis);

// Orthogonal projector onto span(vectors); the span is orthonormalized
// internally, so any linearly independent spanning set is accepted.
Operator projector(const std::vector<StateVector>& span);

// Traces out every subsystem except `keep`.
DensityOperator partial_trace(const DensityOperator& rho, std::string_view keep);

// Eigenvalues of a Hermitian operator, ascending (cyclic Jacobi sweeps).
// Throws ValidationError if the operator is not Hermitian within eps_herm.
std::vector<double> hermitian_eigenvalues(const Operator& a);

}  // namespace shutterbox
