#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace quatmap {

struct PropertyResult {
    std::string name;
    double max_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    /// First failing property, or nullptr when everything passed.
    const PropertyResult* first_failure() const;
    /// Fixed-format table; byte-identical for identical seed and trials.
    std::string to_text() const;
};

/// Runs the whole invariant suite: algebra laws, operator identification,
/// expansion round trip, uniqueness, oracle equivalence and the complex-plane
/// analogue. Each property draws from its own SampleRng seeded with `seed`.
VerifyReport run_verify(std::uint64_t seed, int trials);

}  // namespace quatmap
