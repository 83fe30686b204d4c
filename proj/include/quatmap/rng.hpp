#pragma once

#include <cstdint>
#include <random>

#include "quatmap/complex_map.hpp"
#include "quatmap/expansion.hpp"

namespace quatmap {

/// Deterministic sample source for the randomized checks.
///
/// Built on std::mt19937_64, whose output sequence is pinned by the standard,
/// with an explicit 53-bit mapping to [-1, 1) instead of a distribution
/// object, so identical seeds give identical samples on every platform, run
/// and standard library.
class SampleRng {
  public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [-1, 1).
    double symmetric() {
        const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return 2.0 * unit - 1.0;
    }

    Quaternion quaternion() {
        Quaternion q;
        q.w = symmetric();
        q.x = symmetric();
        q.y = symmetric();
        q.z = symmetric();
        return q;
    }

    RealMatrix4 matrix4() {
        RealMatrix4 f;
        for (auto& row : f.m)
            for (double& entry : row) entry = symmetric();
        return f;
    }

    RealMatrix2 matrix2() {
        RealMatrix2 f;
        for (auto& row : f.m)
            for (double& entry : row) entry = symmetric();
        return f;
    }

    Expansion expansion() {
        Expansion e;
        e.a0 = quaternion();
        e.a1 = quaternion();
        e.a2 = quaternion();
        e.a3 = quaternion();
        return e;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace quatmap
