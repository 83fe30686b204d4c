#pragma once

#include <cmath>
#include <cstddef>

namespace quatmap {

/// Element of the real quaternion algebra with basis (1, i, j, k).
///
/// The component order (w, x, y, z) = coefficients of (1, i, j, k) is fixed
/// everywhere in this project; component index m always refers to the m-th
/// basis element. Only finite components are admitted into the algebra;
/// finiteness is enforced at the input boundaries, the arithmetic itself is
/// total on finite values.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

constexpr Quaternion add(const Quaternion& p, const Quaternion& q) {
    return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z};
}

constexpr Quaternion sub(const Quaternion& p, const Quaternion& q) {
    return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z};
}

constexpr Quaternion scale(double c, const Quaternion& q) {
    return {c * q.w, c * q.x, c * q.y, c * q.z};
}

constexpr Quaternion neg(const Quaternion& q) {
    return {-q.w, -q.x, -q.y, -q.z};
}

/// Hamilton product: i2 = j2 = k2 = -1, ij = k, jk = i, ki = j.
constexpr Quaternion mul(const Quaternion& p, const Quaternion& q) {
    return {
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    };
}

/// Full conjugation: w + xi + yj + zk  ->  w - xi - yj - zk.
constexpr Quaternion conj_full(const Quaternion& q) {
    return {q.w, -q.x, -q.y, -q.z};
}

/// Euclidean norm.
inline double norm(const Quaternion& q) {
    return std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
}

constexpr double component(const Quaternion& q, std::size_t m) {
    return m == 0 ? q.w : m == 1 ? q.x : m == 2 ? q.y : q.z;
}

constexpr void set_component(Quaternion& q, std::size_t m, double value) {
    switch (m) {
        case 0: q.w = value; break;
        case 1: q.x = value; break;
        case 2: q.y = value; break;
        default: q.z = value; break;
    }
}

/// The m-th basis element: 1, i, j or k.
constexpr Quaternion basis_unit(std::size_t m) {
    Quaternion u;
    set_component(u, m, 1.0);
    return u;
}

inline bool is_finite(const Quaternion& q) {
    return std::isfinite(q.w) && std::isfinite(q.x) && std::isfinite(q.y) &&
           std::isfinite(q.z);
}

inline double max_abs_diff(const Quaternion& p, const Quaternion& q) {
    const Quaternion d = sub(p, q);
    return std::max(std::max(std::abs(d.w), std::abs(d.x)),
                    std::max(std::abs(d.y), std::abs(d.z)));
}

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) { return add(p, q); }
constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) { return sub(p, q); }
constexpr Quaternion operator-(const Quaternion& q) { return neg(q); }
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) { return mul(p, q); }
constexpr Quaternion operator*(double c, const Quaternion& q) { return scale(c, q); }

}  // namespace quatmap
