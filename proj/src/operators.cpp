#include "quatmap/operators.hpp"

namespace quatmap {

Quaternion conjugate(BasisMap sigma, const Quaternion& q) {
    switch (sigma) {
        case BasisMap::E: return q;
        case BasisMap::I: return {q.w, -q.x, q.y, q.z};
        case BasisMap::J: return {q.w, q.x, -q.y, q.z};
        case BasisMap::K: return {q.w, q.x, q.y, -q.z};
    }
    return q;  // unreachable
}

RealMatrix4 basis_matrix(BasisMap sigma) {
    switch (sigma) {
        case BasisMap::E: return identity4();
        case BasisMap::I: return diagonal4(1.0, -1.0, 1.0, 1.0);
        case BasisMap::J: return diagonal4(1.0, 1.0, -1.0, 1.0);
        case BasisMap::K: return diagonal4(1.0, 1.0, 1.0, -1.0);
    }
    return identity4();  // unreachable
}

// Writing a = a0 + a1 i + a2 j + a3 k, column c of the matrix of x -> a x is
// the product a * u_c in components. The layout below is that product spelled
// out; tests check it against mul() on random inputs.
RealMatrix4 left_mul_matrix(const Quaternion& a) {
    RealMatrix4 f;
    f.m = {{{a.w, -a.x, -a.y, -a.z},
            {a.x, a.w, -a.z, a.y},
            {a.y, a.z, a.w, -a.x},
            {a.z, -a.y, a.x, a.w}}};
    return f;
}

// Column c is u_c * a. Differs from left_mul_matrix only in the sign pattern
// of the lower-right 3x3 block.
RealMatrix4 right_mul_matrix(const Quaternion& a) {
    RealMatrix4 f;
    f.m = {{{a.w, -a.x, -a.y, -a.z},
            {a.x, a.w, a.z, -a.y},
            {a.y, -a.z, a.w, a.x},
            {a.z, a.y, -a.x, a.w}}};
    return f;
}

RealMatrix4 composite_matrix(const Quaternion& a, BasisMap sigma, Side side) {
    const RealMatrix4 mul_matrix =
        side == Side::LeftCompose ? left_mul_matrix(a) : right_mul_matrix(a);
    return mat_compose(mul_matrix, basis_matrix(sigma));
}

char basis_map_char(BasisMap sigma) {
    switch (sigma) {
        case BasisMap::E: return 'E';
        case BasisMap::I: return 'I';
        case BasisMap::J: return 'J';
        case BasisMap::K: return 'K';
    }
    return '?';  // unreachable
}

std::string_view side_name(Side side) {
    return side == Side::LeftCompose ? "left" : "right";
}

std::optional<BasisMap> parse_basis_map(std::string_view text) {
    if (text.size() != 1) return std::nullopt;
    switch (text[0]) {
        case 'E': return BasisMap::E;
        case 'I': return BasisMap::I;
        case 'J': return BasisMap::J;
        case 'K': return BasisMap::K;
        default: return std::nullopt;
    }
}

std::optional<Side> parse_side(std::string_view text) {
    if (text == "left") return Side::LeftCompose;
    if (text == "right") return Side::RightCompose;
    return std::nullopt;
}

}  // namespace quatmap
