// quatmap command line tool.
//
// Subcommands:
//   decompose  read a 4x4 matrix from JSON, print its expansion over the
//              conjugation basis together with the reconstruction residual
//   operator   print the matrix of x -> a*sigma(x) or x -> sigma(x)*a
//   verify     run the seeded invariant suite and print a pass/fail table
//   examples   walk the built-in worked examples and check their expansions
//
// Exit codes: 0 success, 1 usage or malformed input, 2 mathematical failure.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "quatmap/expansion.hpp"
#include "quatmap/json_io.hpp"
#include "quatmap/tolerances.hpp"
#include "quatmap/verify.hpp"

namespace {

using namespace quatmap;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathFailure = 2;

// "w,x,y,z" with optional whitespace around each number.
std::optional<Quaternion> parse_coeff(const std::string& text) {
    Quaternion q;
    const char* cursor = text.c_str();
    for (std::size_t m = 0; m < 4; ++m) {
        char* end = nullptr;
        const double value = std::strtod(cursor, &end);
        if (end == cursor || !std::isfinite(value)) return std::nullopt;
        set_component(q, m, value);
        cursor = end;
        while (*cursor == ' ' || *cursor == '\t') ++cursor;
        if (m < 3) {
            if (*cursor != ',') return std::nullopt;
            ++cursor;
        }
    }
    if (*cursor != '\0') return std::nullopt;
    return q;
}

void print_quaternion_row(const char* label, const Quaternion& q) {
    std::printf("%s = %.6g + %.6g i + %.6g j + %.6g k\n", label, q.w, q.x, q.y,
                q.z);
}

void print_expansion_text(const Expansion& e) {
    print_quaternion_row("a0", e.a0);
    print_quaternion_row("a1", e.a1);
    print_quaternion_row("a2", e.a2);
    print_quaternion_row("a3", e.a3);
}

void print_matrix_text(const RealMatrix4& f) {
    for (std::size_t r = 0; r < 4; ++r)
        std::printf("[ %10.6g %10.6g %10.6g %10.6g ]\n", f(r, 0), f(r, 1),
                    f(r, 2), f(r, 3));
}

int cmd_decompose(const std::string& input_path, const std::string& format,
                  bool with_oracle) {
    std::ifstream in(input_path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open '%s'\n", input_path.c_str());
        return kExitUsage;
    }

    RealMatrix4 f;
    try {
        f = parse_matrix4(nlohmann::json::parse(in));
    } catch (const nlohmann::json::parse_error& e) {
        std::fprintf(stderr, "error: '%s' is not valid JSON: %s\n",
                     input_path.c_str(), e.what());
        return kExitUsage;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: '%s': %s\n", input_path.c_str(), e.what());
        return kExitUsage;
    }

    const Expansion e = decompose(f);
    const double r = residual(f, e);

    double oracle_gap = 0.0;
    if (with_oracle) {
        try {
            oracle_gap = max_abs_diff(e, decompose_oracle(f));
        } catch (const SingularSystem& err) {
            std::fprintf(stderr, "error: oracle system singular: %s\n",
                         err.what());
            return kExitMathFailure;
        }
    }

    if (format == "json") {
        nlohmann::json out;
        out["coefficients"] = e;
        out["residual"] = r;
        if (with_oracle) out["oracle_max_diff"] = oracle_gap;
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        print_expansion_text(e);
        std::printf("residual = %.3e\n", r);
        if (with_oracle) std::printf("oracle max diff = %.3e\n", oracle_gap);
    }

    if (r >= tol::residual_gate) {
        std::fprintf(stderr, "error: reconstruction residual %.3e exceeds %.1e\n",
                     r, tol::residual_gate);
        return kExitMathFailure;
    }
    return kExitOk;
}

int cmd_operator(const std::string& map_text, const std::string& side_text,
                 const std::string& coeff_text) {
    const std::optional<BasisMap> sigma = parse_basis_map(map_text);
    const std::optional<Side> side = parse_side(side_text);
    const std::optional<Quaternion> a = parse_coeff(coeff_text);
    if (!sigma || !side) {
        std::fprintf(stderr, "error: --map must be E|I|J|K, --side left|right\n");
        return kExitUsage;
    }
    if (!a) {
        std::fprintf(stderr,
                     "error: --coeff must be four comma-separated numbers, got '%s'\n",
                     coeff_text.c_str());
        return kExitUsage;
    }

    nlohmann::json out;
    out["matrix"] = composite_matrix(*a, *sigma, *side).m;
    std::printf("%s\n", out.dump(2).c_str());
    return kExitOk;
}

int cmd_verify(std::uint64_t seed, int trials) {
    const VerifyReport report = run_verify(seed, trials);
    std::fputs(report.to_text().c_str(), stdout);
    if (!report.all_passed()) {
        std::fprintf(stderr, "first failing property: %s\n",
                     report.first_failure()->name.c_str());
        return kExitMathFailure;
    }
    return kExitOk;
}

struct WorkedExample {
    const char* title;       // human-readable map description
    RealMatrix4 matrix;      // the map itself
    Expansion expected;      // its known expansion
};

int cmd_examples() {
    const Quaternion samples[] = {
        {1.0, 0.0, 0.0, 0.0},
        {0.0, 1.0, 0.0, 0.0},
        {1.0, 2.0, 3.0, 4.0},
    };

    bool ok = true;
    for (const Quaternion& a : samples) {
        // x -> x a expands as plain right multiplication: a0 = a, rest zero.
        const WorkedExample right_mul{
            "x -> x a",
            right_mul_matrix(a),
            {a, {}, {}, {}},
        };
        // x -> a x + x a: the i, j, k coefficients of a redistribute over the
        // three conjugations while the real part doubles into a0.
        const WorkedExample symmetric_sum{
            "x -> a x + x a",
            mat_add(left_mul_matrix(a), right_mul_matrix(a)),
            {
                add(a, conj_full(a)),
                {0.0, 0.0, a.y, a.z},
                {0.0, a.x, 0.0, a.z},
                {0.0, a.x, a.y, 0.0},
            },
        };

        for (const WorkedExample& ex : {right_mul, symmetric_sum}) {
            std::printf("example: %s with a = %.6g + %.6g i + %.6g j + %.6g k\n",
                        ex.title, a.w, a.x, a.y, a.z);
            print_matrix_text(ex.matrix);
            const Expansion got = decompose(ex.matrix);
            print_expansion_text(got);

            const double gap = max_abs_diff(got, ex.expected);
            const double oracle_gap =
                max_abs_diff(got, decompose_oracle(ex.matrix));
            if (gap > tol::exact || oracle_gap > tol::oracle_match) {
                std::fprintf(stderr,
                             "error: %s: expansion off by %.3e (oracle %.3e)\n",
                             ex.title, gap, oracle_gap);
                ok = false;
            }
            std::printf("\n");
        }
    }
    return ok ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decompose R-linear maps of the quaternion algebra over the conjugation basis"};
    app.require_subcommand(1);

    std::string input_path;
    std::string format = "json";
    bool with_oracle = false;
    CLI::App* decompose_cmd =
        app.add_subcommand("decompose", "Expand a 4x4 matrix over {E, I, J, K}");
    decompose_cmd->add_option("--input", input_path, "JSON file with {\"matrix\": [[4x4]]}")
        ->required();
    decompose_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    decompose_cmd->add_flag("--oracle", with_oracle,
                            "Also solve the 16x16 system and report the gap");

    std::string map_text;
    std::string side_text;
    std::string coeff_text;
    CLI::App* operator_cmd =
        app.add_subcommand("operator", "Print the matrix of a conjugation composite");
    operator_cmd->add_option("--map", map_text, "Conjugation: E, I, J or K")->required();
    operator_cmd->add_option("--side", side_text, "left (a*sigma(x)) or right (sigma(x)*a)")
        ->required();
    operator_cmd->add_option("--coeff", coeff_text, "Coefficient quaternion \"w,x,y,z\"")
        ->required();

    std::uint64_t seed = 42;
    int trials = 1000;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Run the seeded invariant suite");
    verify_cmd->add_option("--seed", seed, "Generator seed");
    verify_cmd->add_option("--trials", trials, "Samples per property")
        ->check(CLI::PositiveNumber);

    CLI::App* examples_cmd =
        app.add_subcommand("examples", "Reproduce the built-in worked examples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (app.got_subcommand(decompose_cmd))
        return cmd_decompose(input_path, format, with_oracle);
    if (app.got_subcommand(operator_cmd))
        return cmd_operator(map_text, side_text, coeff_text);
    if (app.got_subcommand(verify_cmd)) return cmd_verify(seed, trials);
    if (app.got_subcommand(examples_cmd)) return cmd_examples();
    return kExitUsage;
}
