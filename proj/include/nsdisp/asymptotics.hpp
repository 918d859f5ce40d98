#pragma once

#include <array>

#include "nsdisp/roots.hpp"

namespace nsdisp {

enum class AsymRegime { large_pr, small_pr, nonviscous, stokes };

const char* asym_regime_name(AsymRegime r);

// Small parameters an expansion was evaluated at, and whether the point lies
// inside the regime's declared validity window.
struct ExpansionValidity {
    double inv_pr;
    double pr;
    double kn;
    double kn_th;
    bool inside_window;
};

struct Expansion {
    AsymRegime regime;
    int order; // 0 or 1
    std::array<ModeRoot, 3> roots; // approximations, ordered minus/zero/plus
    double c_k;  // sqrt(c^2 - k^2 a1^2)
    double cT_k; // sqrt(c^2/gamma - k^2 a1^2)
    ExpansionValidity validity;
};

// Large-Prandtl expansion about the Stokes roots. Order 0 is exact at
// 1/Pr = 0; order 1 carries the O(1/Pr) corrections.
Expansion large_pr_expansion(const FluidState& fluid,
                             const DerivedCoefficients& coeffs, double k,
                             int order);

// Small-Prandtl expansion about the isothermal roots, requires mu > 0.
// The zero branch is the damped thermal mode -i 3 k a1 gamma / (2 Pr).
Expansion small_pr_expansion(const FluidState& fluid,
                             const DerivedCoefficients& coeffs, double k,
                             int order);

// mu = 0 expansion: acoustic branches at +-c with the Stokes-Kirchhoff
// zero-viscosity attenuation, thermal branch at -i k lambda / (rho gamma Cv).
Expansion nonviscous_expansion(const FluidState& fluid,
                               const DerivedCoefficients& coeffs, double k);

// The four algebraically equal writings of the zero-viscosity acoustic
// attenuation: (gamma-1) k lambda / (2 rho gamma Cv), the Cp form, the
// Kn_th form and the speed-ratio form.
std::array<double, 4> kirchhoff_attenuation_forms(const FluidState& fluid,
                                                  const DerivedCoefficients& coeffs,
                                                  double k);

struct StokesSpeed {
    double c_k;        // exact sqrt(c^2 - k^2 a1^2); 0 when overdamped
    double quadratic;  // c - 2 k^2 mu^2 / (9 rho^2 c)
    bool overdamped;
};

StokesSpeed stokes_speed(const FluidState& fluid,
                         const DerivedCoefficients& coeffs, double k);

// Dimensionless plus-branch phase speed, omega_R/(c k) for large_pr and
// omega_R/(c_T k) for small_pr, per the combined Knudsen-Prandtl formulas.
double normalized_speed(const FluidState& fluid,
                        const DerivedCoefficients& coeffs, double k,
                        AsymRegime regime);

} // namespace nsdisp
