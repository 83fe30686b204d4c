#pragma once

#include "quatmap/operators.hpp"

namespace quatmap {

/// Coefficients of an R-linear map of the quaternion algebra over the
/// conjugation basis {E, I, J, K}, acting by right multiplication:
///
///   f(x) = E(x) a0 + I(x) a1 + J(x) a2 + K(x) a3
///
/// Every 4x4 real matrix has exactly one such quadruple; decompose and
/// decompose_oracle both compute it, by independent routes.
struct Expansion {
    Quaternion a0;  ///< coefficient of E
    Quaternion a1;  ///< coefficient of I
    Quaternion a2;  ///< coefficient of J
    Quaternion a3;  ///< coefficient of K

    Quaternion& coefficient(std::size_t m);
    const Quaternion& coefficient(std::size_t m) const;
};

/// Closed-form decomposition. Each coefficient component is a half-sum or
/// half-difference of two matrix entries (a substitution then recovers the
/// a0 components), so the cost is a handful of additions.
Expansion decompose(const RealMatrix4& f);

/// Brute-force decomposition: solves the 16x16 system whose columns are the
/// flattened matrices of the sixteen maps x -> sigma_m(x) u_n. Serves as the
/// independent oracle for decompose. Throws SingularSystem if the basis
/// failed to span, which would falsify the uniqueness statement and must
/// never happen.
Expansion decompose_oracle(const RealMatrix4& f);

/// Sum of the four composite matrices: the matrix of the map the expansion
/// denotes. Inverse of decompose.
RealMatrix4 reconstruct(const Expansion& e);

/// Max-absolute-entry of f - reconstruct(e).
double residual(const RealMatrix4& f, const Expansion& e);

double max_abs_diff(const Expansion& a, const Expansion& b);

}  // namespace quatmap
