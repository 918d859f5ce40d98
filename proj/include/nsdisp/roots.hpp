#pragma once

#include <array>

#include "nsdisp/dispersion.hpp"
#include "nsdisp/types.hpp"

namespace nsdisp {

enum class Branch { minus, zero, plus };

const char* branch_name(Branch b);

// One labeled mode of the dispersion cubic.
struct ModeRoot {
    Branch branch;
    cdouble x;               // omega/k [m/s]
    cdouble omega;           // k * x [1/s]
    double phase_speed;      // Re(omega)/k [m/s]
    double attenuation_rate; // -Im(omega) [1/s]
};

struct RootSet {
    std::array<ModeRoot, 3> roots; // ordered minus, zero, plus
    RegimeInfo regime;
    std::array<double, 3> vieta_residuals; // sum, pair-sum, product

    const ModeRoot& branch(Branch b) const;
};

// All three complex roots of the cubic, Cardano followed by Newton polishing.
// Order is unspecified; repeated roots are returned with multiplicity.
std::array<cdouble, 3> solve_cubic(const CubicDispersion& poly);

// Closed-form roots {0, -i k a1 -+ c(k)} of the non-conductive (lambda = 0)
// dispersion relation. Throws on lambda != 0.
RootSet stokes_roots(const FluidState& fluid, const DerivedCoefficients& coeffs,
                     double k);

// Deterministic branch assignment by minimum-total-distance matching against
// the reference points {-i k a1 - c(k), x0_ref, -i k a1 + c(k)}.
RootSet label_branches(const std::array<cdouble, 3>& roots,
                       const FluidState& fluid,
                       const DerivedCoefficients& coeffs, double k);

// Normalized residuals of the three Vieta identities
// (sum = -b2, pairwise sum = b1, product = -b0).
std::array<double, 3> vieta_check(const CubicDispersion& poly,
                                  const std::array<cdouble, 3>& roots);

// build_cubic + solve_cubic + label_branches in one step.
RootSet mode_roots(const FluidState& fluid, const DerivedCoefficients& coeffs,
                   double k);

} // namespace nsdisp
