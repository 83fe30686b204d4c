#pragma once

#include <array>
#include <complex>

namespace quatmap {

/// Dense 2x2 real matrix acting on (re, im) columns: the concrete form of an
/// R-linear map of the complex plane.
struct RealMatrix2 {
    std::array<std::array<double, 2>, 2> m{};

    double& operator()(std::size_t r, std::size_t c) { return m[r][c]; }
    double operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
};

/// Coefficients of the two-dimensional analogue of the quaternion expansion:
/// any R-linear map of the complex plane is f(z) = a z + b conj(z) for
/// exactly one pair (a, b).
struct ComplexPair {
    std::complex<double> a;
    std::complex<double> b;
};

ComplexPair decompose_complex(const RealMatrix2& m);
RealMatrix2 reconstruct_complex(const ComplexPair& p);

std::complex<double> apply(const RealMatrix2& m, std::complex<double> z);
double max_abs_diff(const RealMatrix2& a, const RealMatrix2& b);

}  // namespace quatmap
