#pragma once

#include <cstdint>
#include <random>

#include "paulimix/qubit.hpp"

namespace paulimix {

// Deterministic sampling used by the verifier and the test suites. The
// mt19937_64 stream and the bit-shift double conversion are both fully
// specified, so identical seeds give identical samples on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    std::uint64_t index(std::uint64_t n) { return eng_() % n; }

    // Uniform in [0, 1).
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform in the closed unit ball, by rejection.
    BlochVector in_ball() {
        for (;;) {
            BlochVector r{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (r.dot(r) <= 1.0) return r;
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace paulimix
