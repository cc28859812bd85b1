// types.hpp
// Shared numeric aliases, tolerances and error types.

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace shutterbox {

using Cx = std::complex<double>;

// Numeric tolerances. All quantities handled by the toolkit are exact
// small surds, so double precision leaves several orders of headroom.
inline constexpr double eps_norm = 1e-10;  // norm-1 deviation of normalized states
inline constexpr double eps_orth = 1e-10;  // orthogonality / reconstruction residuals
inline constexpr double eps_herm = 1e-10;  // Hermiticity / projector identities
inline constexpr double eps_psd = 1e-9;    // eigenvalue floor for density operators
inline constexpr double eps_zero = 1e-12;  // threshold below which a norm counts as zero

// An intermediate outcome counts as certain when |p - 1| <= certainty_tol.
// Looser than eps_orth to absorb rounding accumulated through projector
// application.
inline constexpr double certainty_tol = 1e-9;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Shape mismatches, subsystem name collisions, unknown subsystem names.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Violated value invariants: non-finite amplitudes, unnormalized states,
// dependent spanning sets, non-orthonormal bases and the like.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Structurally degenerate requests: vanishing ABL denominator, empty branch
// normalization. Distinct from ValidationError so callers can tell "your
// input is malformed" from "this quantity does not exist for these states".
class DegenerateError : public Error {
public:
    using Error::Error;
};

inline bool is_finite(Cx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace shutterbox
