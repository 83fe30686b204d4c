#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "quatmap/quaternion.hpp"
#include "quatmap/realmat.hpp"

namespace quatmap {

/// The four single-coefficient conjugations of the quaternion algebra:
/// E is the identity, and I, J, K flip the sign of exactly the i, j, k
/// coefficient respectively. E is an automorphism; each of I, J, K is an
/// antiautomorphism (sigma(pq) = sigma(q) sigma(p)). Composing I, J and K
/// gives the full conjugation.
enum class BasisMap { E, I, J, K };

inline constexpr std::array<BasisMap, 4> kBasisMaps{BasisMap::E, BasisMap::I,
                                                    BasisMap::J, BasisMap::K};

/// Which side the coefficient multiplies on after the conjugation:
/// LeftCompose is x -> a * sigma(x), RightCompose is x -> sigma(x) * a.
enum class Side { LeftCompose, RightCompose };

/// Direct elementwise evaluation of sigma(q).
Quaternion conjugate(BasisMap sigma, const Quaternion& q);

/// Matrix of sigma: identity4 for E and the diagonal sign matrices
/// diag(1,-1,1,1), diag(1,1,-1,1), diag(1,1,1,-1) for I, J, K.
RealMatrix4 basis_matrix(BasisMap sigma);

/// Matrix of x -> a x.  As a function of a this is the left regular
/// representation, a homomorphism: L(a) L(b) = L(ab).
RealMatrix4 left_mul_matrix(const Quaternion& a);

/// Matrix of x -> x a.  As a function of a this is the right regular
/// representation, an antihomomorphism: R(a) R(b) = R(ba).
RealMatrix4 right_mul_matrix(const Quaternion& a);

/// Matrix of x -> a sigma(x) (LeftCompose) or x -> sigma(x) a (RightCompose).
/// Defined constructively, as the multiplication matrix composed with the
/// sign matrix of sigma; tests pin the construction against direct
/// quaternion evaluation on every basis unit.
RealMatrix4 composite_matrix(const Quaternion& a, BasisMap sigma, Side side);

char basis_map_char(BasisMap sigma);
std::string_view side_name(Side side);
std::optional<BasisMap> parse_basis_map(std::string_view text);
std::optional<Side> parse_side(std::string_view text);

}  // namespace quatmap
