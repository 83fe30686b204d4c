#include "quatmap/complex_map.hpp"

#include <cmath>

namespace quatmap {

// With f acting on (re, im) columns and f(z) = a z + b conj(z):
//   m00 = Re a + Re b    m01 = -Im a + Im b
//   m10 = Im a + Im b    m11 =  Re a - Re b
// so half-sums and half-differences of the entries recover a and b.
ComplexPair decompose_complex(const RealMatrix2& f) {
    const auto& m = f.m;
    return {{(m[0][0] + m[1][1]) / 2, (m[1][0] - m[0][1]) / 2},
            {(m[0][0] - m[1][1]) / 2, (m[1][0] + m[0][1]) / 2}};
}

RealMatrix2 reconstruct_complex(const ComplexPair& p) {
    RealMatrix2 f;
    f.m[0][0] = p.a.real() + p.b.real();
    f.m[0][1] = -p.a.imag() + p.b.imag();
    f.m[1][0] = p.a.imag() + p.b.imag();
    f.m[1][1] = p.a.real() - p.b.real();
    return f;
}

std::complex<double> apply(const RealMatrix2& f, std::complex<double> z) {
    return {f.m[0][0] * z.real() + f.m[0][1] * z.imag(),
            f.m[1][0] * z.real() + f.m[1][1] * z.imag()};
}

double max_abs_diff(const RealMatrix2& a, const RealMatrix2& b) {
    double worst = 0.0;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c)
            worst = std::max(worst, std::abs(a.m[r][c] - b.m[r][c]));
    return worst;
}

}  // namespace quatmap
