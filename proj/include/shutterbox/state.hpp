// state.hpp
// Complex amplitude vectors over labeled tensor-product spaces.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "shutterbox/space.hpp"
#include "shutterbox/types.hpp"

namespace shutterbox {

// Immutable after construction. A state carries an explicit "normalized"
// mark; nothing ever renormalizes silently. The mark is verified when set,
// so a marked state satisfies |‖v‖ − 1| <= eps_norm.
class StateVector {
public:
    StateVector(SpaceShape shape, std::vector<Cx> amplitudes, bool normalized = false);

    static StateVector zero(SpaceShape shape);
    static StateVector uniform(SpaceShape shape);
    static StateVector basis_state(const SpaceShape& shape, std::span<const std::string> labels);
    static StateVector basis_state(const SpaceShape& shape, const std::string& label);

    const SpaceShape& shape() const { return shape_; }
    const std::vector<Cx>& amplitudes() const { return amplitudes_; }
    Cx amplitude(std::size_t i) const { return amplitudes_.at(i); }
    std::size_t dimension() const { return amplitudes_.size(); }
    bool marked_normalized() const { return normalized_; }

    // Throws ValidationError unless ‖v‖ is within eps_norm of 1.
    void require_normalized(const std::string& what) const;

    friend StateVector operator+(const StateVector& u, const StateVector& v);
    friend StateVector operator-(const StateVector& u, const StateVector& v);
    friend StateVector operator*(Cx scale, const StateVector& v);

private:
    SpaceShape shape_;
    std::vector<Cx> amplitudes_;
    bool normalized_ = false;
};

double norm(const StateVector& v);

// Throws DegenerateError when ‖v‖ <= eps_zero. The result is marked normalized.
StateVector normalize(const StateVector& v);

}  // namespace shutterbox
