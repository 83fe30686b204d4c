#pragma once

#include <array>
#include <stdexcept>

#include "quatmap/quaternion.hpp"

namespace quatmap {

/// Dense 4x4 real matrix, row-major: entry (r, c) multiplies input component
/// c and lands in output component r. Acting on coordinate columns in the
/// fixed (1, i, j, k) order it is the concrete form of an R-linear map of the
/// quaternion algebra.
struct RealMatrix4 {
    std::array<std::array<double, 4>, 4> m{};

    double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
};

RealMatrix4 identity4();
RealMatrix4 zero4();
RealMatrix4 diagonal4(double d0, double d1, double d2, double d3);

/// Matrix-vector product in the fixed component order.
Quaternion apply(const RealMatrix4& f, const Quaternion& q);

RealMatrix4 mat_add(const RealMatrix4& a, const RealMatrix4& b);
RealMatrix4 mat_sub(const RealMatrix4& a, const RealMatrix4& b);
RealMatrix4 mat_scale(double c, const RealMatrix4& a);
RealMatrix4 mat_negate(const RealMatrix4& a);

/// Composition a after b: apply(mat_compose(a, b), x) == apply(a, apply(b, x)).
RealMatrix4 mat_compose(const RealMatrix4& a, const RealMatrix4& b);

double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b);
bool is_finite(const RealMatrix4& a);

/// Row-major flattening: element 4*r + c holds entry (r, c).
std::array<double, 16> flatten(const RealMatrix4& a);

/// Raised when elimination meets a pivot below tol::pivot_min, i.e. the
/// candidate basis behind the system does not span.
class SingularSystem : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Dense 16-equation linear system A x = rhs.
struct LinearSystem16 {
    std::array<std::array<double, 16>, 16> a{};
    std::array<double, 16> rhs{};
};

/// Gaussian elimination with partial pivoting (absolute-value pivot
/// selection). Returns the unique solution or throws SingularSystem.
std::array<double, 16> solve16(LinearSystem16 sys);

}  // namespace quatmap
