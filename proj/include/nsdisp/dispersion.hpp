#pragma once

#include <array>
#include <utility>

#include "nsdisp/types.hpp"

namespace nsdisp {

// Damping scales of a plane wave with wavenumber k.
struct AcousticScales {
    double a1;    // Stokes attenuation scale 2 mu / (3 rho) [m^2/s]
    double a;     // k * a1 [m/s]
    double Kn;    // viscous Knudsen number k mu / (rho c) = 1.5 a / c [-]
    double Kn_th; // thermal Knudsen number k lambda / (rho Cp c) [-]
};

AcousticScales acoustic_scales(const FluidState& fluid,
                               const DerivedCoefficients& coeffs, double k);

enum class Regime { euler, stokes, nonviscous, general };

inline constexpr double knudsen_critical = 1e-2;

struct RegimeInfo {
    Regime regime;
    bool continuum_ok;          // Kn <= knudsen_critical
    bool overdamped_acoustic;   // c^2 - k^2 a1^2 < 0
    bool overdamped_isothermal; // c^2/gamma - k^2 a1^2 < 0
};

RegimeInfo classify_regime(const FluidState& fluid,
                           const DerivedCoefficients& coeffs, double k);

// One of the two quadratic factors of the dispersion cubic:
// X^2 + 2 i k a1 X - c^2 (adiabatic) or X^2 + 2 i k a1 X - c^2/gamma.
struct QuadraticFactor {
    enum class Kind { adiabatic, isothermal };
    Kind kind;
    cdouble c1; // coefficient of X
    cdouble c0; // constant term
    // -i k a1 -+ c(k) resp. -i k a1 -+ c_T(k), principal square root.
    std::array<cdouble, 2> roots() const;
};

// Monic complex cubic P(X) = X^3 + b2 X^2 + b1 X + b0 in X = omega/k,
// with P(X) = X Q(X) + i s_t Q_T(X) where s_t = k lambda / (rho Cv).
struct CubicDispersion {
    cdouble b2, b1, b0;
    double k;
    double s_v; // k a1, viscous damping scale [m/s]
    double s_t; // k lambda / (rho Cv) = 3 gamma k a1 / (2 Pr) [m/s]
    AcousticScales scales;
    FluidState fluid;
    DerivedCoefficients coeffs;

    cdouble eval(cdouble x) const { return ((x + b2) * x + b1) * x + b0; }
    cdouble deriv(cdouble x) const { return (3.0 * x + 2.0 * b2) * x + b1; }
    // Magnitude used to normalize residuals: max(|c|^3, |x|^3).
    double residual_scale(cdouble x) const;
};

// Builds the cubic and cross-checks both coefficient parameterizations
// (the (mu, lambda, Cv, Gamma) form against the (a1, gamma, Pr) form).
CubicDispersion build_cubic(const FluidState& fluid,
                            const DerivedCoefficients& coeffs, double k);

std::pair<QuadraticFactor, QuadraticFactor>
build_quadratics(const FluidState& fluid, const DerivedCoefficients& coeffs,
                 double k);

} // namespace nsdisp
