#include "quatmap/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "quatmap/expansion.hpp"
#include "quatmap/rng.hpp"
#include "quatmap/tolerances.hpp"

namespace quatmap {

namespace {

constexpr std::array<Side, 2> kSides{Side::LeftCompose, Side::RightCompose};

double check_mul_associativity(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Quaternion p = rng.quaternion(), q = rng.quaternion(),
                         r = rng.quaternion();
        worst = std::max(worst, max_abs_diff(mul(mul(p, q), r), mul(p, mul(q, r))));
    }
    return worst;
}

double check_mul_bilinearity(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Quaternion p = rng.quaternion(), q = rng.quaternion(),
                         r = rng.quaternion();
        const double c = rng.symmetric();
        worst = std::max(
            worst, max_abs_diff(mul(add(p, scale(c, q)), r),
                                add(mul(p, r), scale(c, mul(q, r)))));
        worst = std::max(
            worst, max_abs_diff(mul(r, add(p, scale(c, q))),
                                add(mul(r, p), scale(c, mul(r, q)))));
    }
    return worst;
}

double check_norm_multiplicative(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Quaternion p = rng.quaternion(), q = rng.quaternion();
        worst = std::max(worst, std::abs(norm(mul(p, q)) - norm(p) * norm(q)));
    }
    return worst;
}

double check_left_representation(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Quaternion a = rng.quaternion(), b = rng.quaternion();
        worst = std::max(worst,
                         max_abs_diff(mat_compose(left_mul_matrix(a), left_mul_matrix(b)),
                                      left_mul_matrix(mul(a, b))));
    }
    return worst;
}

double check_right_representation(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Quaternion a = rng.quaternion(), b = rng.quaternion();
        worst = std::max(
            worst, max_abs_diff(mat_compose(right_mul_matrix(a), right_mul_matrix(b)),
                                right_mul_matrix(mul(b, a))));
    }
    return worst;
}

double check_left_right_commute(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Quaternion a = rng.quaternion(), b = rng.quaternion();
        worst = std::max(worst,
                         max_abs_diff(mat_compose(left_mul_matrix(a), right_mul_matrix(b)),
                                      mat_compose(right_mul_matrix(b), left_mul_matrix(a))));
    }
    return worst;
}

// Enumerated over the basis units, independent of the trial count. Expected
// to hold exactly: every quantity involved is a signed unit.
double check_conjugation_laws(SampleRng&, int) {
    double worst = 0.0;
    for (const BasisMap sigma : {BasisMap::I, BasisMap::J, BasisMap::K})
        for (std::size_t m = 0; m < 4; ++m)
            for (std::size_t n = 0; n < 4; ++n) {
                const Quaternion u = basis_unit(m), v = basis_unit(n);
                worst = std::max(
                    worst, max_abs_diff(conjugate(sigma, mul(u, v)),
                                        mul(conjugate(sigma, v), conjugate(sigma, u))));
            }
    for (std::size_t m = 0; m < 4; ++m)
        for (std::size_t n = 0; n < 4; ++n) {
            const Quaternion u = basis_unit(m), v = basis_unit(n);
            worst = std::max(worst,
                             max_abs_diff(conjugate(BasisMap::E, mul(u, v)),
                                          mul(conjugate(BasisMap::E, u),
                                              conjugate(BasisMap::E, v))));
        }
    // I then J then K composes to the full conjugation.
    for (std::size_t m = 0; m < 4; ++m) {
        const Quaternion u = basis_unit(m);
        const Quaternion chained =
            conjugate(BasisMap::I, conjugate(BasisMap::J, conjugate(BasisMap::K, u)));
        worst = std::max(worst, max_abs_diff(chained, conj_full(u)));
    }
    return worst;
}

double check_basis_matrix_involutions(SampleRng&, int) {
    double worst = 0.0;
    for (const BasisMap sigma : kBasisMaps) {
        const RealMatrix4 s = basis_matrix(sigma);
        worst = std::max(worst, max_abs_diff(mat_compose(s, s), identity4()));
        for (const BasisMap other : kBasisMaps) {
            const RealMatrix4 o = basis_matrix(other);
            worst = std::max(worst, max_abs_diff(mat_compose(s, o), mat_compose(o, s)));
        }
    }
    return worst;
}

double check_operator_matrices(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Quaternion a = rng.quaternion();
        const BasisMap sigma = kBasisMaps[t % 4];
        const Side side = kSides[(t / 4) % 2];
        const RealMatrix4 op = composite_matrix(a, sigma, side);
        for (std::size_t n = 0; n < 4; ++n) {
            const Quaternion u = basis_unit(n);
            const Quaternion direct = side == Side::LeftCompose
                                          ? mul(a, conjugate(sigma, u))
                                          : mul(conjugate(sigma, u), a);
            worst = std::max(worst, max_abs_diff(apply(op, u), direct));
        }
    }
    return worst;
}

double check_expansion_round_trip(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const RealMatrix4 f = rng.matrix4();
        worst = std::max(worst, residual(f, decompose(f)));
    }
    return worst;
}

double check_expansion_uniqueness(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Expansion e = rng.expansion();
        worst = std::max(worst, max_abs_diff(decompose(reconstruct(e)), e));
    }
    return worst;
}

double check_oracle_equivalence(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const RealMatrix4 f = rng.matrix4();
        worst = std::max(worst, max_abs_diff(decompose(f), decompose_oracle(f)));
    }
    return worst;
}

double check_decompose_linearity(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const RealMatrix4 f = rng.matrix4(), g = rng.matrix4();
        const double alpha = rng.symmetric(), beta = rng.symmetric();
        const Expansion combined =
            decompose(mat_add(mat_scale(alpha, f), mat_scale(beta, g)));
        const Expansion ef = decompose(f), eg = decompose(g);
        for (std::size_t m = 0; m < 4; ++m) {
            const Quaternion expected = add(scale(alpha, ef.coefficient(m)),
                                            scale(beta, eg.coefficient(m)));
            worst = std::max(worst, max_abs_diff(combined.coefficient(m), expected));
        }
    }
    return worst;
}

double check_complex_round_trip(SampleRng& rng, int trials) {
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
        const RealMatrix2 f = rng.matrix2();
        worst = std::max(worst,
                         max_abs_diff(reconstruct_complex(decompose_complex(f)), f));
    }
    return worst;
}

struct Check {
    const char* name;
    double tolerance;
    double (*run)(SampleRng&, int);
};

constexpr Check kChecks[] = {
    {"mul associativity", tol::round_trip, check_mul_associativity},
    {"mul bilinearity", tol::round_trip, check_mul_bilinearity},
    {"norm multiplicativity", tol::norm_mul, check_norm_multiplicative},
    {"left representation homomorphism", tol::operator_match, check_left_representation},
    {"right representation antihomomorphism", tol::operator_match, check_right_representation},
    {"left/right multiplication commute", tol::operator_match, check_left_right_commute},
    {"conjugation (anti)automorphism laws", 0.0, check_conjugation_laws},
    {"sign matrices involutive and commuting", 0.0, check_basis_matrix_involutions},
    {"operator matrices match direct evaluation", tol::operator_match, check_operator_matrices},
    {"expansion round trip", tol::round_trip, check_expansion_round_trip},
    {"expansion uniqueness", tol::round_trip, check_expansion_uniqueness},
    {"closed form matches linear-solve oracle", tol::oracle_match, check_oracle_equivalence},
    {"decompose linearity", tol::round_trip, check_decompose_linearity},
    {"complex decomposition round trip", tol::complex_round_trip, check_complex_round_trip},
};

}  // namespace

bool VerifyReport::all_passed() const {
    for (const auto& p : properties)
        if (!p.passed) return false;
    return true;
}

const PropertyResult* VerifyReport::first_failure() const {
    for (const auto& p : properties)
        if (!p.passed) return &p;
    return nullptr;
}

std::string VerifyReport::to_text() const {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "seed   %llu\ntrials %d\n",
                  static_cast<unsigned long long>(seed), trials);
    out += line;
    for (const auto& p : properties) {
        std::snprintf(line, sizeof line, "%s  %-44s max error %.3e  tol %.1e\n",
                      p.passed ? "PASS" : "FAIL", p.name.c_str(), p.max_error,
                      p.tolerance);
        out += line;
    }
    std::snprintf(line, sizeof line, "result %s (%zu/%zu properties)\n",
                  all_passed() ? "PASS" : "FAIL",
                  static_cast<std::size_t>(
                      std::count_if(properties.begin(), properties.end(),
                                    [](const PropertyResult& p) { return p.passed; })),
                  properties.size());
    out += line;
    return out;
}

VerifyReport run_verify(std::uint64_t seed, int trials) {
    VerifyReport report;
    report.seed = seed;
    report.trials = trials;
    for (const Check& check : kChecks) {
        SampleRng rng(seed);
        PropertyResult result;
        result.name = check.name;
        result.tolerance = check.tolerance;
        result.max_error = check.run(rng, trials);
        result.passed = result.max_error <= check.tolerance;
        report.properties.push_back(std::move(result));
    }
    return report;
}

}  // namespace quatmap
