// operators.hpp
// Dense square operators and density operators over labeled spaces.
// Entries are stored row-major.

#pragma once

#include <string_view>
#include <vector>

#include "shutterbox/space.hpp"
#include "shutterbox/state.hpp"
#include "shutterbox/types.hpp"

namespace shutterbox {

class Operator {
public:
    Operator(SpaceShape shape, std::vector<Cx> entries);

    static Operator zero(SpaceShape shape);
    static Operator identity(SpaceShape shape);

    const SpaceShape& shape() const { return shape_; }
    std::size_t dimension() const { return dim_; }
    Cx entry(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Cx& entry(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const std::vector<Cx>& entries() const { return entries_; }

    friend Operator operator+(const Operator& a, const Operator& b);
    friend Operator operator-(const Operator& a, const Operator& b);
    friend Operator operator*(Cx scale, const Operator& a);
    friend Operator operator*(const Operator& a, const Operator& b);

private:
    SpaceShape shape_;
    std::size_t dim_ = 0;
    std::vector<Cx> entries_;
};

Operator adjoint(const Operator& a);
Cx trace_of(const Operator& a);
StateVector apply(const Operator& a, const StateVector& v);

// Largest |a_ij - conj(a_ji)| over all entries.
double hermiticity_defect(const Operator& a);

// Hermitian, unit trace, eigenvalues >= -eps_psd; verified on construction.
class DensityOperator {
public:
    static DensityOperator from_pure(const StateVector& psi);
    static DensityOperator from_matrix(SpaceShape shape, std::vector<Cx> entries);

    const SpaceShape& shape() const { return op_.shape(); }
    std::size_t dimension() const { return op_.dimension(); }
    Cx entry(std::size_t row, std::size_t col) const { return op_.entry(row, col); }
    const Operator& as_operator() const { return op_; }

private:
    explicit DensityOperator(Operator op) : op_(std::move(op)) {}

    Operator op_;
};

// Re tr(a · rho); the imaginary part vanishes for Hermitian a.
double expectation_trace(const Operator& a, const DensityOperator& rho);

}  // namespace shutterbox
