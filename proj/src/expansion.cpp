#include "quatmap/expansion.hpp"

namespace quatmap {

Quaternion& Expansion::coefficient(std::size_t m) {
    switch (m) {
        case 0: return a0;
        case 1: return a1;
        case 2: return a2;
        default: return a3;
    }
}

const Quaternion& Expansion::coefficient(std::size_t m) const {
    return const_cast<Expansion*>(this)->coefficient(m);
}

// The sixteen matrix entries of f, grouped by which coefficient components
// they contain, give four independent 4x4 linear systems, one per component
// index. In each group, one entry pairs with the first-column entry of the
// same component so that their half-sum or half-difference isolates a single
// unknown; the remaining a0 component then follows by substitution.
//
//   component 0 (w):  f00 f11 f22 f33    component 1 (x):  f10 f01 f32 f23
//   component 2 (y):  f20 f31 f02 f13    component 3 (z):  f30 f21 f12 f03
Expansion decompose(const RealMatrix4& f_) {
    const auto& f = f_.m;
    Expansion e;

    e.a1.w = (f[0][0] - f[1][1]) / 2;
    e.a2.w = (f[0][0] - f[2][2]) / 2;
    e.a3.w = (f[0][0] - f[3][3]) / 2;
    e.a0.w = f[0][0] - e.a1.w - e.a2.w - e.a3.w;

    e.a1.x = (f[1][0] + f[0][1]) / 2;
    e.a2.x = (f[1][0] + f[3][2]) / 2;
    e.a3.x = (f[1][0] - f[2][3]) / 2;
    e.a0.x = f[1][0] - e.a1.x - e.a2.x - e.a3.x;

    e.a1.y = (f[2][0] - f[3][1]) / 2;
    e.a2.y = (f[2][0] + f[0][2]) / 2;
    e.a3.y = (f[2][0] + f[1][3]) / 2;
    e.a0.y = f[2][0] - e.a1.y - e.a2.y - e.a3.y;

    e.a1.z = (f[3][0] + f[2][1]) / 2;
    e.a2.z = (f[3][0] - f[1][2]) / 2;
    e.a3.z = (f[3][0] + f[0][3]) / 2;
    e.a0.z = f[3][0] - e.a1.z - e.a2.z - e.a3.z;

    return e;
}

Expansion decompose_oracle(const RealMatrix4& f) {
    LinearSystem16 sys;
    // Column 4m + n is the flattened matrix of x -> sigma_m(x) u_n; the
    // unknown vector is the sixteen coefficient components in the same order.
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n) {
            const auto column = flatten(
                composite_matrix(basis_unit(n), kBasisMaps[m], Side::RightCompose));
            for (std::size_t row = 0; row < 16; ++row)
                sys.a[row][4 * m + n] = column[row];
        }
    sys.rhs = flatten(f);

    const auto solution = solve16(sys);

    Expansion e;
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n)
            set_component(e.coefficient(m), n, solution[4 * m + n]);
    return e;
}

RealMatrix4 reconstruct(const Expansion& e) {
    RealMatrix4 sum = zero4();
    for (std::size_t m = 0; m < 4; ++m)
        sum = mat_add(sum, composite_matrix(e.coefficient(m), kBasisMaps[m],
                                            Side::RightCompose));
    return sum;
}

double residual(const RealMatrix4& f, const Expansion& e) {
    return max_abs_diff(f, reconstruct(e));
}

double max_abs_diff(const Expansion& a, const Expansion& b) {
    double worst = 0.0;
    for (std::size_t m = 0; m < 4; ++m)
        worst = std::max(worst, max_abs_diff(a.coefficient(m), b.coefficient(m)));
    return worst;
}

}  // namespace quatmap
