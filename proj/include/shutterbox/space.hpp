// space.hpp
// Labeled tensor-product space shapes. A shape is an ordered list of named
// subsystems, each with an ordered basis of text labels; flat indices run
// row-major over subsystem order (leftmost subsystem is the major index).

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "shutterbox/types.hpp"

namespace shutterbox {

struct Subsystem {
    std::string name;
    std::vector<std::string> basis;

    bool operator==(const Subsystem&) const = default;
};

class SpaceShape {
public:
    SpaceShape() = default;
    explicit SpaceShape(std::vector<Subsystem> subsystems);

    // Single-subsystem shape.
    SpaceShape(std::string name, std::vector<std::string> basis);

    std::size_t dimension() const { return dimension_; }
    std::size_t subsystem_count() const { return subsystems_.size(); }
    const std::vector<Subsystem>& subsystems() const { return subsystems_; }
    const Subsystem& subsystem(std::size_t i) const { return subsystems_.at(i); }

    bool has_subsystem(std::string_view name) const;
    std::size_t subsystem_index(std::string_view name) const;  // throws ShapeError

    // Mixed-radix index math over subsystem dimensions.
    std::size_t stride(std::size_t subsystem) const;
    std::size_t flat_index(std::span<const std::size_t> digits) const;
    std::vector<std::size_t> digits_of(std::size_t flat) const;

    // Position of a label within one subsystem's basis; throws ShapeError.
    std::size_t label_index(std::size_t subsystem, std::string_view label) const;

    // Labels of a flat basis index, one per subsystem.
    std::vector<std::string> labels_of(std::size_t flat) const;

    // Ket-style rendering of a flat basis index, e.g. "|a'⟩|b⟩".
    std::string ket_label(std::size_t flat) const;

    // Concatenation of subsystem lists; throws ShapeError on a name collision.
    SpaceShape tensor_with(const SpaceShape& other) const;

    bool operator==(const SpaceShape& other) const { return subsystems_ == other.subsystems_; }

private:
    std::vector<Subsystem> subsystems_;
    std::size_t dimension_ = 1;
};

}  // namespace shutterbox
