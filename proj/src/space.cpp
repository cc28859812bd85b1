#include "shutterbox/space.hpp"

#include <algorithm>
#include <unordered_set>

namespace shutterbox {

namespace {

void validate_subsystems(const std::vector<Subsystem>& subsystems) {
    std::unordered_set<std::string_view> names;
    for (const auto& sub : subsystems) {
        if (sub.name.empty())
            throw ShapeError("subsystem name must be nonempty");
        if (!names.insert(sub.name).second)
            throw ShapeError("duplicate subsystem name '" + sub.name + "'");
        if (sub.basis.empty())
            throw ShapeError("subsystem '" + sub.name + "' has an empty basis");
        std::unordered_set<std::string_view> labels;
        for (const auto& label : sub.basis) {
            if (label.empty())
                throw ShapeError("subsystem '" + sub.name + "' has an empty basis label");
            if (!labels.insert(label).second)
                throw ShapeError("duplicate basis label '" + label + "' in subsystem '" +
                                 sub.name + "'");
        }
    }
}

}  // namespace

SpaceShape::SpaceShape(std::vector<Subsystem> subsystems) : subsystems_(std::move(subsystems)) {
    validate_subsystems(subsystems_);
    for (const auto& sub : subsystems_) dimension_ *= sub.basis.size();
}

SpaceShape::SpaceShape(std::string name, std::vector<std::string> basis)
    : SpaceShape(std::vector<Subsystem>{Subsystem{std::move(name), std::move(basis)}}) {}

bool SpaceShape::has_subsystem(std::string_view name) const {
    return std::any_of(subsystems_.begin(), subsystems_.end(),
                       [&](const Subsystem& s) { return s.name == name; });
}

std::size_t SpaceShape::subsystem_index(std::string_view name) const {
    for (std::size_t i = 0; i < subsystems_.size(); ++i)
        if (subsystems_[i].name == name) return i;
    throw ShapeError("unknown subsystem '" + std::string(name) + "'");
}

std::size_t SpaceShape::stride(std::size_t subsystem) const {
    std::size_t s = 1;
    for (std::size_t i = subsystems_.size(); i-- > subsystem + 1;) s *= subsystems_[i].basis.size();
    return s;
}

std::size_t SpaceShape::flat_index(std::span<const std::size_t> digits) const {
    if (digits.size() != subsystems_.size())
        throw ShapeError("index digit count does not match subsystem count");
    std::size_t flat = 0;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= subsystems_[i].basis.size())
            throw ShapeError("basis index out of range for subsystem '" + subsystems_[i].name +
                             "'");
        flat = flat * subsystems_[i].basis.size() + digits[i];
    }
    return flat;
}

std::vector<std::size_t> SpaceShape::digits_of(std::size_t flat) const {
    std::vector<std::size_t> digits(subsystems_.size());
    for (std::size_t i = subsystems_.size(); i-- > 0;) {
        const std::size_t d = subsystems_[i].basis.size();
        digits[i] = flat % d;
        flat /= d;
    }
    return digits;
}

std::size_t SpaceShape::label_index(std::size_t subsystem, std::string_view label) const {
    const auto& basis = subsystems_.at(subsystem).basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == label) return i;
    throw ShapeError("unknown basis label '" + std::string(label) + "' in subsystem '" +
                     subsystems_.at(subsystem).name + "'");
}

std::vector<std::string> SpaceShape::labels_of(std::size_t flat) const {
    const auto digits = digits_of(flat);
    std::vector<std::string> labels(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) labels[i] = subsystems_[i].basis[digits[i]];
    return labels;
}

std::string SpaceShape::ket_label(std::size_t flat) const {
    std::string out;
    for (const auto& label : labels_of(flat)) {
        out += "|";
        out += label;
        out += "⟩";
    }
    return out;
}

SpaceShape SpaceShape::tensor_with(const SpaceShape& other) const {
    std::vector<Subsystem> combined = subsystems_;
    for (const auto& sub : other.subsystems_) {
        if (has_subsystem(sub.name))
            throw ShapeError("subsystem name collision on '" + sub.name + "'");
        combined.push_back(sub);
    }
    return SpaceShape(std::move(combined));
}

}  // namespace shutterbox
