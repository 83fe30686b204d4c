#pragma once

// All numeric thresholds used by the library, the verification suite and the
// CLI live here so that no tolerance is ever re-invented at a call site.

namespace quatmap::tol {

// Identities whose evaluation is pure +/- and halving of the inputs.
inline constexpr double round_trip = 1e-12;

// Closed-form coefficients checked against the 16x16 elimination path,
// which accumulates a few more rounding steps.
inline constexpr double oracle_match = 1e-10;

// Gaussian elimination pivot threshold; below this solve16 reports
// SingularSystem. The conjugation-basis system is made of 0/+-1 entries and
// stays far above it.
inline constexpr double pivot_min = 1e-10;

// |pq| = |p| |q| under sqrt rounding.
inline constexpr double norm_mul = 1e-10;

// Fixed-point checks whose expected values are exactly representable.
inline constexpr double exact = 1e-14;

// 2x2 complex decomposition round trip.
inline constexpr double complex_round_trip = 1e-14;

// Operator matrices against direct quaternion evaluation.
inline constexpr double operator_match = 1e-12;

// CLI decompose success gate on the reconstruction residual.
inline constexpr double residual_gate = 1e-10;

}  // namespace quatmap::tol
