#pragma once

#include <cstdint>

#include "nsdisp/types.hpp"

namespace nsdisp {

// splitmix64: tiny, fully specified, identical on every platform. Used for
// the reproducible verification batteries.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    double log_uniform(double lo, double hi);

private:
    std::uint64_t state_;
};

// Bounds for randomized dispersion cases. Kn and Pr windows keep the three
// roots separated enough that both solution routes resolve them cleanly.
struct RandomCaseOptions {
    double kn_min = 1e-3;
    double kn_max = 0.3;
    double pr_min = 5e-2;
    double pr_max = 20.0;
    double gamma_min = 1.01;
    double gamma_max = 2.5;
};

struct RandomCase {
    FluidState fluid;
    double k;
};

// Draws a valid fluid state and wavenumber with the requested Knudsen and
// Prandtl numbers (mu and lambda are back-solved from the targets).
RandomCase random_case(SplitMix64& rng, const RandomCaseOptions& opt = {});

} // namespace nsdisp
