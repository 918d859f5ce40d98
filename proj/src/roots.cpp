#include "nsdisp/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace nsdisp {

const char* branch_name(Branch b) {
    switch (b) {
    case Branch::minus: return "minus";
    case Branch::zero: return "zero";
    case Branch::plus: return "plus";
    }
    return "?";
}

const ModeRoot& RootSet::branch(Branch b) const {
    for (const auto& r : roots)
        if (r.branch == b)
            return r;
    throw numerical_error("RootSet: missing branch label");
}

namespace {

// Newton refinement; keeps the iterate with the smallest residual and stops
// early on stagnation.
cdouble polish(const CubicDispersion& p, cdouble x) {
    cdouble best = x;
    double best_res = std::abs(p.eval(x));
    for (int it = 0; it < 5 && best_res > 0.0; ++it) {
        const cdouble dp = p.deriv(x);
        if (dp == cdouble(0.0, 0.0))
            break;
        x -= p.eval(x) / dp;
        const double res = std::abs(p.eval(x));
        if (res < best_res) {
            best = x;
            best_res = res;
        } else {
            break;
        }
    }
    return best;
}

cdouble principal_cbrt(cdouble z) {
    if (z == cdouble(0.0, 0.0))
        return z;
    return std::polar(std::cbrt(std::abs(z)), std::arg(z) / 3.0);
}

} // namespace

std::array<cdouble, 3> solve_cubic(const CubicDispersion& p) {
    // Depressed form: X = t - b2/3, t^3 + qq t + rr = 0.
    const cdouble shift = p.b2 / 3.0;
    const cdouble qq = p.b1 - p.b2 * p.b2 / 3.0;
    const cdouble rr =
        2.0 * p.b2 * p.b2 * p.b2 / 27.0 - p.b2 * p.b1 / 3.0 + p.b0;

    std::array<cdouble, 3> t;
    if (qq == cdouble(0.0, 0.0) && rr == cdouble(0.0, 0.0)) {
        t = {cdouble(0.0), cdouble(0.0), cdouble(0.0)};
    } else {
        const cdouble disc = std::sqrt(rr * rr / 4.0 + qq * qq * qq / 27.0);
        // Pick the sign that avoids cancellation in -r/2 +- disc.
        cdouble u3 = -rr / 2.0 + disc;
        if (std::abs(-rr / 2.0 - disc) > std::abs(u3))
            u3 = -rr / 2.0 - disc;
        const cdouble u = principal_cbrt(u3);
        const cdouble v = (u == cdouble(0.0, 0.0)) ? cdouble(0.0) : -qq / (3.0 * u);
        // Three cube roots of unity.
        const cdouble w(-0.5, 0.5 * std::sqrt(3.0));
        const cdouble wc = std::conj(w);
        t = {u + v, w * u + wc * v, wc * u + w * v};
    }

    std::array<cdouble, 3> roots;
    for (int i = 0; i < 3; ++i)
        roots[i] = polish(p, t[i] - shift);
    return roots;
}

std::array<double, 3> vieta_check(const CubicDispersion& p,
                                  const std::array<cdouble, 3>& x) {
    const cdouble sum = x[0] + x[1] + x[2];
    const cdouble pair = x[0] * x[1] + x[0] * x[2] + x[1] * x[2];
    const cdouble prod = x[0] * x[1] * x[2];

    const double c = p.fluid.c;
    const auto norm = [](cdouble got, cdouble want, double floor) {
        const double scale = std::max({std::abs(got), std::abs(want), floor});
        return std::abs(got - want) / scale;
    };
    return {norm(sum, -p.b2, c), norm(pair, p.b1, c * c),
            norm(prod, -p.b0, c * c * c)};
}

namespace {

RootSet assemble(const std::array<cdouble, 3>& matched,
                 const CubicDispersion& p) {
    RootSet set;
    set.regime = classify_regime(p.fluid, p.coeffs, p.k);
    set.vieta_residuals = vieta_check(p, matched);
    const Branch order[3] = {Branch::minus, Branch::zero, Branch::plus};
    for (int i = 0; i < 3; ++i) {
        ModeRoot r;
        r.branch = order[i];
        r.x = matched[i];
        r.omega = p.k * matched[i];
        r.phase_speed = r.omega.real() / p.k + 0.0;
        r.attenuation_rate = -r.omega.imag() + 0.0;
        set.roots[i] = r;
    }
    return set;
}

} // namespace

RootSet label_branches(const std::array<cdouble, 3>& roots,
                       const FluidState& fluid,
                       const DerivedCoefficients& coeffs, double k) {
    const CubicDispersion p = build_cubic(fluid, coeffs, k);

    // Reference points from the factorized limits. The zero-branch reference
    // switches to the damped thermal mode -i s_t when Pr < 1; s_t equals
    // 3 gamma k a1 / (2 Pr) and stays finite for mu = 0.
    const double c2 = fluid.c * fluid.c;
    const cdouble ck = std::sqrt(cdouble(c2 - p.s_v * p.s_v, 0.0));
    const cdouble visc(0.0, -p.s_v);
    const cdouble x0_ref =
        coeffs.Pr >= 1.0 ? cdouble(0.0, 0.0) : cdouble(0.0, -p.s_t);
    const std::array<cdouble, 3> ref = {visc - ck, x0_ref, visc + ck};

    // Minimum-total-distance assignment over the six permutations.
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int best = 0;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) {
        double cost = 0.0;
        for (int j = 0; j < 3; ++j)
            cost += std::abs(roots[perms[i][j]] - ref[j]);
        if (cost < best_cost) {
            best_cost = cost;
            best = i;
        }
    }
    const std::array<cdouble, 3> matched = {
        roots[perms[best][0]], roots[perms[best][1]], roots[perms[best][2]]};
    return assemble(matched, p);
}

RootSet stokes_roots(const FluidState& fluid, const DerivedCoefficients& coeffs,
                     double k) {
    validate(fluid, "stokes_roots");
    if (fluid.lambda != 0.0)
        throw validation_error(
            "stokes_roots: regime mismatch, requires lambda = 0");

    const CubicDispersion p = build_cubic(fluid, coeffs, k);
    const cdouble ck = std::sqrt(cdouble(fluid.c * fluid.c - p.s_v * p.s_v, 0.0));
    const cdouble visc(0.0, -p.s_v);
    return assemble({visc - ck, cdouble(0.0, 0.0), visc + ck}, p);
}

RootSet mode_roots(const FluidState& fluid, const DerivedCoefficients& coeffs,
                   double k) {
    const CubicDispersion p = build_cubic(fluid, coeffs, k);
    return label_branches(solve_cubic(p), fluid, coeffs, k);
}

} // namespace nsdisp
