#include "quatmap/realmat.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "quatmap/tolerances.hpp"

namespace quatmap {

RealMatrix4 identity4() { return diagonal4(1.0, 1.0, 1.0, 1.0); }

RealMatrix4 zero4() { return RealMatrix4{}; }

RealMatrix4 diagonal4(double d0, double d1, double d2, double d3) {
    RealMatrix4 f;
    f.m[0][0] = d0;
    f.m[1][1] = d1;
    f.m[2][2] = d2;
    f.m[3][3] = d3;
    return f;
}

Quaternion apply(const RealMatrix4& f, const Quaternion& q) {
    Quaternion out;
    for (std::size_t r = 0; r < 4; ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < 4; ++c) sum += f.m[r][c] * component(q, c);
        set_component(out, r, sum);
    }
    return out;
}

RealMatrix4 mat_add(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out.m[r][c] = a.m[r][c] + b.m[r][c];
    return out;
}

RealMatrix4 mat_sub(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) out.m[r][c] = a.m[r][c] - b.m[r][c];
    return out;
}

RealMatrix4 mat_scale(double c, const RealMatrix4& a) {
    RealMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t col = 0; col < 4; ++col) out.m[r][col] = c * a.m[r][col];
    return out;
}

RealMatrix4 mat_negate(const RealMatrix4& a) { return mat_scale(-1.0, a); }

RealMatrix4 mat_compose(const RealMatrix4& a, const RealMatrix4& b) {
    RealMatrix4 out;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) {
            double sum = 0.0;
            for (std::size_t k = 0; k < 4; ++k) sum += a.m[r][k] * b.m[k][c];
            out.m[r][c] = sum;
        }
    return out;
}

double max_abs_diff(const RealMatrix4& a, const RealMatrix4& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
            worst = std::max(worst, std::abs(a.m[r][c] - b.m[r][c]));
    return worst;
}

bool is_finite(const RealMatrix4& a) {
    for (const auto& row : a.m)
        for (double entry : row)
            if (!std::isfinite(entry)) return false;
    return true;
}

std::array<double, 16> flatten(const RealMatrix4& a) {
    std::array<double, 16> flat{};
    for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) flat[4 * r + c] = a.m[r][c];
    return flat;
}

std::array<double, 16> solve16(LinearSystem16 sys) {
    auto& a = sys.a;
    auto& b = sys.rhs;
    constexpr std::size_t n = 16;

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < tol::pivot_min)
            throw SingularSystem("solve16: pivot below " +
                                 std::to_string(tol::pivot_min) + " at column " +
                                 std::to_string(col));
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            a[r][col] = 0.0;
            for (std::size_t c = col + 1; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }

    std::array<double, 16> x{};
    for (std::size_t r = n; r-- > 0;) {
        double sum = b[r];
        for (std::size_t c = r + 1; c < n; ++c) sum -= a[r][c] * x[c];
        x[r] = sum / a[r][r];
    }
    return x;
}

}  // namespace quatmap
