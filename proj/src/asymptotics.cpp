#include "nsdisp/asymptotics.hpp"

#include <cmath>
#include <limits>

namespace nsdisp {

const char* asym_regime_name(AsymRegime r) {
    switch (r) {
    case AsymRegime::large_pr: return "large-pr";
    case AsymRegime::small_pr: return "small-pr";
    case AsymRegime::nonviscous: return "nonviscous";
    case AsymRegime::stokes: return "stokes";
    }
    return "?";
}

namespace {

// Validity windows: Kn below the continuum threshold plus a one-decade
// margin on the expansion parameter.
constexpr double pr_large_min = 10.0;
constexpr double pr_small_max = 0.1;

void require_order(int order) {
    if (order != 0 && order != 1)
        throw validation_error("expansion order must be 0 or 1");
}

Expansion make_expansion(AsymRegime regime, int order,
                         const std::array<cdouble, 3>& x,
                         const CubicDispersion& p, bool inside) {
    Expansion e;
    e.regime = regime;
    e.order = order;
    const double c2 = p.fluid.c * p.fluid.c;
    const double sv2 = p.s_v * p.s_v;
    e.c_k = c2 - sv2 > 0.0 ? std::sqrt(c2 - sv2) : 0.0;
    e.cT_k = c2 / p.fluid.gamma - sv2 > 0.0
                 ? std::sqrt(c2 / p.fluid.gamma - sv2)
                 : 0.0;
    const double inv_pr =
        std::isinf(p.coeffs.Pr) ? 0.0 : 1.0 / p.coeffs.Pr;
    e.validity = {inv_pr, p.coeffs.Pr, p.scales.Kn, p.scales.Kn_th, inside};

    const Branch order3[3] = {Branch::minus, Branch::zero, Branch::plus};
    for (int i = 0; i < 3; ++i) {
        ModeRoot r;
        r.branch = order3[i];
        r.x = x[i];
        r.omega = p.k * x[i];
        r.phase_speed = r.omega.real() / p.k + 0.0;
        r.attenuation_rate = -r.omega.imag() + 0.0;
        e.roots[i] = r;
    }
    return e;
}

} // namespace

Expansion large_pr_expansion(const FluidState& f,
                             const DerivedCoefficients& d, double k,
                             int order) {
    require_order(order);
    const CubicDispersion p = build_cubic(f, d, k);
    const RegimeInfo regime = classify_regime(f, d, k);
    if (regime.overdamped_acoustic)
        throw validation_error(
            "large_pr_expansion: overdamped acoustic regime, c(k) vanishes");

    const double ck = std::sqrt(f.c * f.c - p.s_v * p.s_v);
    const cdouble visc(0.0, -p.s_v);
    std::array<cdouble, 3> x = {visc - ck, cdouble(0.0), visc + ck};

    if (order >= 1) {
        // s_v/Pr stays finite for mu = 0: s_v * inv_pr = 2 s_t / (3 gamma).
        const double sv_ip = 2.0 * p.s_t / (3.0 * f.gamma);
        const double g1 = f.gamma - 1.0;
        x[0] -= 3.0 * g1 * sv_ip * (p.s_v + cdouble(0.0, ck)) / (4.0 * ck);
        x[2] += 3.0 * g1 * sv_ip * (p.s_v - cdouble(0.0, ck)) / (4.0 * ck);
        x[1] = cdouble(0.0, -1.5 * sv_ip);
    }

    const bool inside = p.scales.Kn <= knudsen_critical &&
                        (std::isinf(d.Pr) || d.Pr >= pr_large_min);
    return make_expansion(AsymRegime::large_pr, order, x, p, inside);
}

Expansion small_pr_expansion(const FluidState& f,
                             const DerivedCoefficients& d, double k,
                             int order) {
    require_order(order);
    if (!(f.mu > 0.0))
        throw validation_error(
            "small_pr_expansion: singular for mu = 0 (correction divides by k a1)");
    if (!(f.lambda > 0.0))
        throw validation_error("small_pr_expansion: requires lambda > 0");
    const CubicDispersion p = build_cubic(f, d, k);
    const RegimeInfo regime = classify_regime(f, d, k);
    if (regime.overdamped_isothermal)
        throw validation_error(
            "small_pr_expansion: overdamped isothermal regime, c_T(k) vanishes");

    const double cTk = std::sqrt(f.c * f.c / f.gamma - p.s_v * p.s_v);
    const cdouble visc(0.0, -p.s_v);
    // Zero branch damped, following Vieta applied to the cubic.
    std::array<cdouble, 3> x = {visc - cTk,
                                cdouble(0.0, -1.5 * p.s_v * f.gamma / d.Pr),
                                visc + cTk};

    const double g1 = f.gamma - 1.0;
    const double c2 = f.c * f.c;
    const double denom = 3.0 * f.gamma * f.gamma * p.s_v * cTk;
    const cdouble corr_minus = g1 * c2 * (p.s_v - cdouble(0.0, cTk)) / denom * d.Pr;
    const cdouble corr_plus = -g1 * c2 * (p.s_v + cdouble(0.0, cTk)) / denom * d.Pr;
    if (order >= 1) {
        x[0] += corr_minus;
        x[2] += corr_plus;
    }

    // The expansion is asymptotic in Pr at fixed k a1; the window demands a
    // genuinely small first-order correction besides the nominal Pr bound.
    const bool inside = p.scales.Kn <= knudsen_critical &&
                        d.Pr <= pr_small_max &&
                        std::abs(corr_plus) <= 0.05 * cTk;
    return make_expansion(AsymRegime::small_pr, order, x, p, inside);
}

std::array<double, 4>
kirchhoff_attenuation_forms(const FluidState& f, const DerivedCoefficients& d,
                            double k) {
    const AcousticScales s = acoustic_scales(f, d, k);
    const double g1 = f.gamma - 1.0;
    return {
        g1 * k * f.lambda / (2.0 * f.rho * f.gamma * f.Cv),
        g1 * k * f.lambda / (2.0 * f.rho * d.Cp),
        0.5 * g1 * f.c * s.Kn_th,
        k * f.lambda / (2.0 * f.rho * d.Cp) * (f.c * f.c / (d.cT * d.cT) - 1.0),
    };
}

Expansion nonviscous_expansion(const FluidState& f,
                               const DerivedCoefficients& d, double k) {
    if (f.mu != 0.0)
        throw validation_error(
            "nonviscous_expansion: regime mismatch, requires mu = 0");
    const CubicDispersion p = build_cubic(f, d, k);

    const auto forms = kirchhoff_attenuation_forms(f, d, k);
    for (double v : forms) {
        const double scale = std::max(std::abs(forms[0]), std::abs(v));
        if (scale > 0.0 && std::abs(v - forms[0]) / scale > 1e-12)
            throw numerical_error(
                "nonviscous_expansion: Kirchhoff attenuation forms disagree");
    }

    const double att0 = k * f.lambda / (f.rho * f.gamma * f.Cv);
    const std::array<cdouble, 3> x = {cdouble(-f.c, -forms[0]),
                                      cdouble(0.0, -att0),
                                      cdouble(f.c, -forms[0])};
    const bool inside = p.scales.Kn_th <= knudsen_critical;
    return make_expansion(AsymRegime::nonviscous, 1, x, p, inside);
}

StokesSpeed stokes_speed(const FluidState& f, const DerivedCoefficients& d,
                         double k) {
    validate(f, "stokes_speed");
    if (!(std::isfinite(k) && k > 0.0))
        throw validation_error("stokes_speed: k must be positive");

    const AcousticScales s = acoustic_scales(f, d, k);
    StokesSpeed out;
    const double arg = f.c * f.c - s.a * s.a;
    out.overdamped = arg < 0.0;
    out.c_k = out.overdamped ? 0.0 : std::sqrt(arg);
    out.quadratic =
        f.c - 2.0 * k * k * f.mu * f.mu / (9.0 * f.rho * f.rho * f.c);
    return out;
}

double normalized_speed(const FluidState& f, const DerivedCoefficients& d,
                        double k, AsymRegime regime) {
    const AcousticScales s = acoustic_scales(f, d, k);
    const double kn = s.Kn;
    const double g = f.gamma;

    if (regime == AsymRegime::large_pr) {
        const double inv_pr = std::isinf(d.Pr) ? 0.0 : 1.0 / d.Pr;
        return 1.0 - 2.0 * kn * kn / 9.0 +
               (g - 1.0) / (2.0 * g) * kn * inv_pr +
               2.0 * (g - 1.0) / (9.0 * g) * kn * kn * inv_pr;
    }
    if (regime == AsymRegime::small_pr) {
        if (!(f.lambda > 0.0))
            throw validation_error(
                "normalized_speed: small-pr regime requires finite Pr (lambda > 0)");
        return 1.0 - 2.0 * kn * kn / 9.0 + (g - 1.0) / (3.0 * g) * d.Pr -
               2.0 * (g - 1.0) / 27.0 * kn * kn * d.Pr;
    }
    throw validation_error(
        "normalized_speed: regime must be large-pr or small-pr");
}

} // namespace nsdisp
