/*
 * acceptance.cpp
 *
 * End-to-end gate for the decomposition toolkit. One line per criterion:
 *
 *   1. round-trip residual over 1000 seeded random matrices, under a time cap
 *   2. uniqueness: the 16x16 basis system is regular; decompose inverts
 *      reconstruct on 1000 random coefficient quadruples
 *   3. closed-form decompose vs the linear-solve oracle on 1000 matrices
 *   4. x -> x a expands as coefficient a on E alone
 *   5. x -> a x + x a expands as (a + conj(a), ...) with the i/j/k parts of a
 *      redistributed; expected values confirmed by the oracle first
 *   6. composite operator matrices match direct quaternion evaluation
 *   7. I, J, K reverse products exactly; chained together they give full
 *      conjugation
 *   8. complex-plane analogue: fixed cases exact, random round trip tight
 *   9. CLI: deterministic verify report, byte-identical across runs;
 *      malformed input exits 1
 *
 * Prints PASS/FAIL per criterion and exits nonzero if any failed.
 */

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <string>

#include "quatmap/complex_map.hpp"
#include "quatmap/expansion.hpp"
#include "quatmap/rng.hpp"
#include "quatmap/tolerances.hpp"
#include "quatmap/verify.hpp"
#include "support.hpp"

using namespace quatmap;

namespace {

int failures = 0;

void report(int number, bool passed, const char* title, double worst,
            double bound) {
    std::printf("%s  %d. %-58s (worst %.3e, bound %.1e)\n",
                passed ? "PASS" : "FAIL", number, title, worst, bound);
    if (!passed) ++failures;
}

void report_plain(int number, bool passed, const char* title) {
    std::printf("%s  %d. %s\n", passed ? "PASS" : "FAIL", number, title);
    if (!passed) ++failures;
}

const Quaternion kSamples[] = {
    {1.0, 0.0, 0.0, 0.0},
    {0.0, 1.0, 0.0, 0.0},
    {0.0, 0.0, 1.0, 0.0},
    {0.0, 0.0, 0.0, 1.0},
    {1.0, 2.0, 3.0, 4.0},
};

void criterion_1_round_trip() {
    SampleRng rng(1001);
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const RealMatrix4 f = rng.matrix4();
        worst = std::max(worst, residual(f, decompose(f)));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool passed = worst < tol::round_trip && seconds < 1.0;
    std::printf("%s  1. %-58s (worst %.3e, bound %.1e, %.3f s)\n",
                passed ? "PASS" : "FAIL",
                "round-trip residual on 1000 random matrices", worst,
                tol::round_trip, seconds);
    if (!passed) ++failures;
}

void criterion_2_uniqueness() {
    SampleRng rng(1002);
    bool regular = true;
    double worst = 0.0;
    try {
        // regularity of the basis system, exercised through the oracle
        decompose_oracle(rng.matrix4());
        for (int t = 0; t < 1000; ++t) {
            const Expansion e = rng.expansion();
            worst = std::max(worst, max_abs_diff(decompose(reconstruct(e)), e));
        }
    } catch (const SingularSystem&) {
        regular = false;
    }
    report(2, regular && worst < tol::round_trip,
           "unique coefficients: decompose inverts reconstruct", worst,
           tol::round_trip);
}

void criterion_3_oracle_equivalence() {
    SampleRng rng(1003);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const RealMatrix4 f = rng.matrix4();
        worst = std::max(worst, max_abs_diff(decompose(f), decompose_oracle(f)));
    }
    report(3, worst < tol::oracle_match,
           "closed form agrees with 16x16 linear-solve oracle", worst,
           tol::oracle_match);
}

void criterion_4_right_multiplication() {
    double worst = 0.0;
    for (const Quaternion& a : kSamples) {
        const Expansion e = decompose(right_mul_matrix(a));
        worst = std::max(worst, max_abs_diff(e, {a, {}, {}, {}}));
    }
    report(4, worst < tol::exact,
           "x -> x a expands as coefficient a on the identity map", worst,
           tol::exact);
}

void criterion_5_two_sided_sum() {
    double worst = 0.0;
    bool oracle_confirms = true;
    for (const Quaternion& a : kSamples) {
        const RealMatrix4 f = mat_add(left_mul_matrix(a), right_mul_matrix(a));
        const Expansion expected{add(a, conj_full(a)),
                                 {0.0, 0.0, a.y, a.z},
                                 {0.0, a.x, 0.0, a.z},
                                 {0.0, a.x, a.y, 0.0}};
        if (max_abs_diff(decompose_oracle(f), expected) > tol::oracle_match)
            oracle_confirms = false;
        worst = std::max(worst, max_abs_diff(decompose(f), expected));
    }
    report(5, oracle_confirms && worst < tol::exact,
           "x -> a x + x a expands as (a + conj(a), ...)", worst, tol::exact);
}

void criterion_6_composite_operators() {
    SampleRng rng(1006);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Quaternion a = rng.quaternion();
        const BasisMap sigma = kBasisMaps[t % 4];
        const Side side = (t / 4) % 2 == 0 ? Side::LeftCompose : Side::RightCompose;
        const RealMatrix4 op = composite_matrix(a, sigma, side);
        for (std::size_t n = 0; n < 4; ++n) {
            const Quaternion u = basis_unit(n);
            const Quaternion direct = side == Side::LeftCompose
                                          ? mul(a, conjugate(sigma, u))
                                          : mul(conjugate(sigma, u), a);
            worst = std::max(worst, max_abs_diff(apply(op, u), direct));
        }
    }
    report(6, worst < tol::operator_match,
           "operator matrices reproduce a*sigma(x) and sigma(x)*a", worst,
           tol::operator_match);
}

void criterion_7_antiautomorphisms() {
    double worst = 0.0;
    for (const BasisMap sigma : {BasisMap::I, BasisMap::J, BasisMap::K})
        for (std::size_t m = 0; m < 4; ++m)
            for (std::size_t n = 0; n < 4; ++n) {
                const Quaternion u = basis_unit(m), v = basis_unit(n);
                worst = std::max(
                    worst,
                    max_abs_diff(conjugate(sigma, mul(u, v)),
                                 mul(conjugate(sigma, v), conjugate(sigma, u))));
            }
    for (std::size_t m = 0; m < 4; ++m) {
        const Quaternion u = basis_unit(m);
        const Quaternion chained = conjugate(
            BasisMap::I, conjugate(BasisMap::J, conjugate(BasisMap::K, u)));
        worst = std::max(worst, max_abs_diff(chained, conj_full(u)));
    }
    report_plain(7, worst == 0.0,
                 "I, J, K reverse products exactly; I(J(K(x))) = conj(x)");
}

void criterion_8_complex_analogue() {
    bool fixed_ok = true;
    const auto expect = [&](const RealMatrix2& f, std::complex<double> a,
                            std::complex<double> b) {
        const ComplexPair p = decompose_complex(f);
        if (p.a != a || p.b != b) fixed_ok = false;
    };
    RealMatrix2 id, conj, rot;
    id.m = {{{1, 0}, {0, 1}}};
    conj.m = {{{1, 0}, {0, -1}}};
    rot.m = {{{0, -1}, {1, 0}}};
    expect(id, {1, 0}, {0, 0});
    expect(conj, {0, 0}, {1, 0});
    expect(rot, {0, 1}, {0, 0});

    SampleRng rng(1008);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        const RealMatrix2 f = rng.matrix2();
        worst = std::max(worst,
                         max_abs_diff(reconstruct_complex(decompose_complex(f)), f));
    }
    report(8, fixed_ok && worst < tol::complex_round_trip,
           "complex-plane analogue: fixed cases exact, round trip", worst,
           tol::complex_round_trip);
}

void criterion_9_cli_contract() {
    const std::string cli = QUATMAP_CLI_PATH;
    const auto first =
        testsupport::run_command(cli + " verify --seed 42 --trials 1000");
    const auto second =
        testsupport::run_command(cli + " verify --seed 42 --trials 1000");
    const bool verify_ok = first.exit_code == 0 && second.exit_code == 0 &&
                           !first.output.empty() && first.output == second.output;

    const std::string bad = testsupport::write_temp_file(
                                "acceptance-bad-matrix",
                                "{\"matrix\": [[1,2,3],[4,5,6]]}")
                                .string();
    const auto malformed = testsupport::run_command(
        cli + " decompose --input " + testsupport::shell_quote(bad) +
        " 2>/dev/null");
    const bool reject_ok = malformed.exit_code == 1;

    report_plain(9, verify_ok && reject_ok,
                 "CLI: seeded verify is byte-stable; malformed input exits 1");
}

}  // namespace

int main() {
    std::printf("acceptance suite\n");
    criterion_1_round_trip();
    criterion_2_uniqueness();
    criterion_3_oracle_equivalence();
    criterion_4_right_multiplication();
    criterion_5_two_sided_sum();
    criterion_6_composite_operators();
    criterion_7_antiautomorphisms();
    criterion_8_complex_analogue();
    criterion_9_cli_contract();
    if (failures == 0) {
        std::printf("all criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
