#include "nsdisp/dispersion.hpp"

#include <cmath>
#include <string>

namespace nsdisp {

namespace {

void require_wavenumber(double k, const std::string& context) {
    if (!(std::isfinite(k) && k > 0.0))
        throw validation_error(context + ": k must be positive");
}

double rel_diff(cdouble a, cdouble b, double floor) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return std::abs(a - b) / scale;
}

} // namespace

AcousticScales acoustic_scales(const FluidState& f,
                               const DerivedCoefficients& d, double k) {
    validate(f, "acoustic_scales");
    require_wavenumber(k, "acoustic_scales");

    AcousticScales s;
    s.a1 = 2.0 * f.mu / (3.0 * f.rho);
    s.a = s.a1 * k;
    s.Kn = 1.5 * s.a / f.c;
    s.Kn_th = k * f.lambda / (f.rho * d.Cp * f.c);
    return s;
}

RegimeInfo classify_regime(const FluidState& f, const DerivedCoefficients& d,
                           double k) {
    const AcousticScales s = acoustic_scales(f, d, k);

    RegimeInfo info;
    if (f.mu == 0.0 && f.lambda == 0.0)
        info.regime = Regime::euler;
    else if (f.lambda == 0.0)
        info.regime = Regime::stokes;
    else if (f.mu == 0.0)
        info.regime = Regime::nonviscous;
    else
        info.regime = Regime::general;

    info.continuum_ok = s.Kn <= knudsen_critical;
    info.overdamped_acoustic = f.c * f.c - s.a * s.a < 0.0;
    info.overdamped_isothermal = f.c * f.c / f.gamma - s.a * s.a < 0.0;
    return info;
}

std::array<cdouble, 2> QuadraticFactor::roots() const {
    // X^2 + c1 X + c0 with c1 = 2 i k a1: roots -i k a1 -+ sqrt(c^2 - k^2 a1^2).
    const cdouble half = -0.5 * c1;
    const cdouble radius = std::sqrt(half * half - c0);
    return {half - radius, half + radius};
}

double CubicDispersion::residual_scale(cdouble x) const {
    const double m = std::max(fluid.c, std::abs(x));
    return m * m * m;
}

CubicDispersion build_cubic(const FluidState& f, const DerivedCoefficients& d,
                            double k) {
    require_wavenumber(k, "build_cubic");

    CubicDispersion p;
    p.k = k;
    p.scales = acoustic_scales(f, d, k);
    p.fluid = f;
    p.coeffs = d;
    p.s_v = p.scales.a;
    p.s_t = k * f.lambda / (f.rho * f.Cv);

    const double c2 = f.c * f.c;
    p.b2 = cdouble(0.0, 2.0 * p.s_v + p.s_t);
    p.b1 = -(c2 + 2.0 * p.s_v * p.s_t);
    p.b0 = cdouble(0.0, -p.s_t * c2 / f.gamma);

    // Cross-check against the raw transport-coefficient form
    // i k (4mu/3 + lambda/Cv)/rho, -(c^2 + 4 k^2 lambda mu/(3 rho^2 Cv)),
    // -i k lambda (c^2/Cv - Gamma^2 T)/rho.
    const cdouble b2_raw(0.0, k * (4.0 * f.mu / 3.0 + f.lambda / f.Cv) / f.rho);
    const cdouble b1_raw =
        -(c2 + 4.0 * k * k * f.lambda * f.mu / (3.0 * f.rho * f.rho * f.Cv));
    const cdouble b0_raw(
        0.0, -k * f.lambda * (c2 / f.Cv - d.Gamma * d.Gamma * f.T) / f.rho);

    constexpr double tol = 1e-12;
    const double floor2 = f.c;
    if (rel_diff(p.b2, b2_raw, floor2) > tol ||
        rel_diff(p.b1, b1_raw, floor2 * floor2) > tol ||
        rel_diff(p.b0, b0_raw, floor2 * floor2 * floor2) > tol)
        throw numerical_error("build_cubic: coefficient parameterizations disagree");

    // And against the literal (a1, gamma, Pr) form where Pr is finite.
    if (f.mu > 0.0 && f.lambda > 0.0) {
        const double inv_pr = f.lambda / (f.mu * d.Cp);
        const cdouble b2_pr(0.0, 2.0 * p.s_v * (1.0 + 0.75 * f.gamma * inv_pr));
        const cdouble b1_pr = -(c2 + 3.0 * f.gamma * p.s_v * p.s_v * inv_pr);
        const cdouble b0_pr(0.0, -1.5 * p.s_v * c2 * inv_pr);
        if (rel_diff(p.b2, b2_pr, floor2) > tol ||
            rel_diff(p.b1, b1_pr, floor2 * floor2) > tol ||
            rel_diff(p.b0, b0_pr, floor2 * floor2 * floor2) > tol)
            throw numerical_error("build_cubic: Prandtl-form coefficients disagree");
    }

    return p;
}

std::pair<QuadraticFactor, QuadraticFactor>
build_quadratics(const FluidState& f, const DerivedCoefficients& d, double k) {
    require_wavenumber(k, "build_quadratics");
    const AcousticScales s = acoustic_scales(f, d, k);
    const cdouble c1(0.0, 2.0 * s.a);

    QuadraticFactor q{QuadraticFactor::Kind::adiabatic, c1, -f.c * f.c};
    QuadraticFactor qt{QuadraticFactor::Kind::isothermal, c1,
                       -f.c * f.c / f.gamma};
    return {q, qt};
}

} // namespace nsdisp
