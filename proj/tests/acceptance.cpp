// Acceptance suite: one line per criterion, non-zero exit on any failure.
// Tolerances are fixed here and nowhere else.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "nsdisp/asymptotics.hpp"
#include "nsdisp/fluids.hpp"
#include "nsdisp/oracle.hpp"
#include "nsdisp/rng.hpp"
#include "nsdisp/roots.hpp"
#include "nsdisp/thermo.hpp"
#include "oracles.hpp"

using namespace nsdisp;

namespace {

int g_failures = 0;

void report(int index, bool ok, const std::string& text) {
    std::printf("%s %2d %s\n", ok ? "PASS" : "FAIL", index, text.c_str());
    if (!ok)
        ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), pattern, a, b);
    return buf;
}

double multiset_gap(const std::array<cdouble, 3>& a,
                    const std::array<cdouble, 3>& b) {
    double worst = 0.0;
    std::vector<cdouble> rest(b.begin(), b.end());
    for (const cdouble& x : a) {
        std::size_t jbest = 0;
        for (std::size_t j = 1; j < rest.size(); ++j)
            if (std::abs(x - rest[j]) < std::abs(x - rest[jbest]))
                jbest = j;
        worst = std::max(worst, std::abs(x - rest[jbest]));
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(jbest));
    }
    return worst;
}

// Worst Im(omega)/(k c) seen anywhere; criterion 6 reads it at the end.
double g_worst_im = -1e300;

void track_dissipativity(const FluidState& f, double k,
                         const std::array<cdouble, 3>& xs) {
    for (const cdouble& x : xs)
        g_worst_im = std::max(g_worst_im, x.imag() / f.c);
    (void)k;
}

FluidState slope_fluid(double pr) {
    // unit sound speed, k a1 = 0.2 at k = 1
    FluidState f{1.0, 300.0, 0.3, 0.0, 717.0, 1.4, 1.0};
    f.lambda = f.mu * f.gamma * f.Cv / pr;
    return f;
}

double loglog_slope_of(const std::vector<double>& xs,
                       const std::vector<double>& ys) {
    return testing_oracles::loglog_slope(xs, ys);
}

void criterion_1_euler(SplitMix64& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        RandomCase rc = random_case(rng);
        rc.fluid.mu = 0.0;
        rc.fluid.lambda = 0.0;
        const DerivedCoefficients d = derive_coefficients(rc.fluid);
        const auto xs = solve_cubic(build_cubic(rc.fluid, d, rc.k));
        track_dissipativity(rc.fluid, rc.k, xs);
        const double gap = multiset_gap(
            xs, {cdouble(0.0), cdouble(rc.fluid.c), cdouble(-rc.fluid.c)});
        worst = std::max(worst, gap / rc.fluid.c);
    }
    report(1, worst < 1e-12,
           fmt("euler limit: 100 inviscid cases, max |roots - {0,+-c}| = "
               "%.3e c (tol 1e-12 c)",
               worst));
}

void criterion_2_stokes(SplitMix64& rng) {
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        RandomCaseOptions opt;
        opt.kn_min = 1e-4;
        opt.kn_max = 0.499;
        RandomCase rc = random_case(rng, opt);
        rc.fluid.lambda = 0.0;
        const DerivedCoefficients d = derive_coefficients(rc.fluid);
        const CubicDispersion p = build_cubic(rc.fluid, d, rc.k);
        const auto xs = solve_cubic(p);
        track_dissipativity(rc.fluid, rc.k, xs);

        const RootSet closed = stokes_roots(rc.fluid, d, rc.k);
        std::array<cdouble, 3> want;
        for (std::size_t j = 0; j < 3; ++j)
            want[j] = closed.roots[j].x;
        worst = std::max(worst, multiset_gap(xs, want) / rc.fluid.c);
    }
    report(2, worst < 1e-11,
           fmt("stokes closed form: 100 non-conducting cases (Kn < 0.5), max "
               "gap = %.3e c (tol 1e-11)",
               worst));
}

void criterion_3_vieta(SplitMix64& rng) {
    double worst_res = 0.0, worst_prod = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const RandomCase rc = random_case(rng);
        const DerivedCoefficients d = derive_coefficients(rc.fluid);
        const CubicDispersion p = build_cubic(rc.fluid, d, rc.k);
        const auto xs = solve_cubic(p);
        track_dissipativity(rc.fluid, rc.k, xs);

        const auto res = vieta_check(p, xs);
        worst_res = std::max({worst_res, res[0], res[1], res[2]});

        // product must equal -b0 = +i 3 k a1 c^2 / (2 Pr)
        const cdouble prod = xs[0] * xs[1] * xs[2];
        const cdouble want(0.0, p.s_t * rc.fluid.c * rc.fluid.c / rc.fluid.gamma);
        worst_prod = std::max(worst_prod,
                              std::abs(prod - want) / std::abs(want));
    }
    report(3, worst_res < 1e-10 && worst_prod < 1e-10,
           fmt("vieta suite: 1000 cases, max residual = %.3e, max product "
               "gap vs +i 3 k a1 c^2/(2Pr) = %.3e (tol 1e-10)",
               worst_res, worst_prod));
}

void criterion_4_oracle(SplitMix64& rng) {
    double worst = 0.0;
    for (int i = 0; i < 500; ++i) {
        const RandomCase rc = random_case(rng);
        const DerivedCoefficients d = derive_coefficients(rc.fluid);
        const auto xs = solve_cubic(build_cubic(rc.fluid, d, rc.k));
        track_dissipativity(rc.fluid, rc.k, xs);
        std::array<cdouble, 3> omega_cubic;
        for (std::size_t j = 0; j < 3; ++j)
            omega_cubic[j] = rc.k * xs[j];

        const auto eig =
            eigen3(mode_matrix(build_system_matrices(rc.fluid, d), rc.k));
        std::array<cdouble, 3> omega_eig;
        for (std::size_t j = 0; j < 3; ++j)
            omega_eig[j] = cdouble(0.0, 1.0) * eig[j];

        double scale = 0.0;
        for (const auto& w : omega_eig)
            scale = std::max(scale, std::abs(w));
        worst = std::max(worst, multiset_gap(omega_cubic, omega_eig) / scale);
    }
    report(4, worst < 1e-10,
           fmt("oracle equivalence: 500 cases, cubic vs eigenvalue route, max "
               "relative gap = %.3e (tol 1e-10)",
               worst));
}

void criterion_5_time_domain(SplitMix64& rng) {
    double worst = 0.0;
    RandomCaseOptions opt;
    opt.kn_min = 1e-4;
    opt.kn_max = 1e-2;
    opt.pr_min = 0.1;
    opt.pr_max = 10.0;
    for (int i = 0; i < 50; ++i) {
        const RandomCase rc = random_case(rng, opt);
        const DerivedCoefficients d = derive_coefficients(rc.fluid);
        const SystemMatrices mats = build_system_matrices(rc.fluid, d);
        const RootSet exact = mode_roots(rc.fluid, d, rc.k);
        {
            std::array<cdouble, 3> xs;
            for (std::size_t j = 0; j < 3; ++j)
                xs[j] = exact.roots[j].x;
            track_dissipativity(rc.fluid, rc.k, xs);
        }

        const CMat3 m = mode_matrix(mats, rc.k);
        double norm = 0.0;
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = 0; b < 3; ++b)
                norm += std::norm(m[a][b]);
        norm = std::sqrt(norm);

        const double wr = std::abs(exact.branch(Branch::plus).omega.real());
        const double t_end = 2.0 * 2.0 * std::numbers::pi / wr;
        const int steps =
            std::max(64, static_cast<int>(std::ceil(t_end * norm / 0.06)));

        CVec3 w0;
        for (auto& compv : w0)
            compv = cdouble(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
        w0[0] *= rc.fluid.rho / rc.fluid.c;

        const ModeTrace trace = evolve_mode(mats, rc.k, w0, t_end, steps);
        const DispersionFit fit = measure_dispersion(trace);

        for (const auto& r : exact.roots) {
            double best = 1e300;
            for (const cdouble& w : fit.omegas)
                best = std::min(best, std::abs(w - r.omega) / std::abs(r.omega));
            worst = std::max(worst, best);
        }
    }
    report(5, worst < 1e-6,
           fmt("time-domain oracle: 50 cases, exponential fit vs cubic roots, "
               "max relative gap = %.3e (tol 1e-6)",
               worst));
}

void criterion_6_dissipativity() {
    report(6, g_worst_im <= 1e-10,
           fmt("dissipativity: max Im(omega)/(k c) over all randomized cases "
               "= %.3e (tol 1e-10)",
               g_worst_im));
}

void criterion_7_large_pr() {
    std::vector<double> prs;
    std::vector<double> gaps[3];
    for (int i = 0; i < 8; ++i) {
        const double pr = 1e2 * std::pow(10.0, 3.0 * i / 7.0);
        const FluidState f = slope_fluid(pr);
        const DerivedCoefficients d = derive_coefficients(f);
        const RootSet exact = mode_roots(f, d, 1.0);
        const Expansion e = large_pr_expansion(f, d, 1.0, 1);
        prs.push_back(pr);
        for (std::size_t b = 0; b < 3; ++b)
            gaps[b].push_back(std::abs(exact.roots[b].x - e.roots[b].x));
    }
    const double s0 = loglog_slope_of(prs, gaps[0]);
    const double s1 = loglog_slope_of(prs, gaps[1]);
    const double s2 = loglog_slope_of(prs, gaps[2]);
    const bool ok = std::abs(s0 + 2.0) <= 0.3 && std::abs(s1 + 2.0) <= 0.3 &&
                    std::abs(s2 + 2.0) <= 0.3;
    report(7, ok,
           fmt("large-Pr order-1 convergence over Pr in [1e2,1e5]: slopes "
               "%.3f / %.3f vs -2 +- 0.3 (minus/zero; plus alike)",
               s0, s1) +
               fmt(", plus = %.3f", s2));
}

void criterion_8_small_pr() {
    std::vector<double> prs, gap_minus, gap_plus;
    for (int i = 0; i < 8; ++i) {
        const double pr = 1e-5 * std::pow(10.0, 3.0 * i / 7.0);
        const FluidState f = slope_fluid(pr);
        const DerivedCoefficients d = derive_coefficients(f);
        const RootSet exact = mode_roots(f, d, 1.0);
        const Expansion e = small_pr_expansion(f, d, 1.0, 1);
        prs.push_back(pr);
        gap_minus.push_back(std::abs(exact.branch(Branch::minus).x -
                                     e.roots[0].x));
        gap_plus.push_back(std::abs(exact.branch(Branch::plus).x -
                                    e.roots[2].x));
    }
    const double sm = loglog_slope_of(prs, gap_minus);
    const double sp = loglog_slope_of(prs, gap_plus);
    const bool ok = std::abs(sm - 2.0) <= 0.3 && std::abs(sp - 2.0) <= 0.3;
    report(8, ok,
           fmt("small-Pr order-1 convergence over Pr in [1e-5,1e-2]: slopes "
               "%.3f / %.3f vs +2 +- 0.3 (acoustic branches)",
               sm, sp));
}

void criterion_9_nonviscous(SplitMix64& rng) {
    double worst_rel = 0.0, worst_forms = 0.0;
    bool bounded = true;
    for (int i = 0; i < 100; ++i) {
        RandomCase rc = random_case(rng);
        rc.fluid.mu = 0.0;
        const DerivedCoefficients d0 = derive_coefficients(rc.fluid);
        // retarget lambda to a thermal Knudsen number in [1e-6, 1e-3]
        const double knth = rng.log_uniform(1e-6, 1e-3);
        rc.fluid.lambda =
            knth * rc.fluid.rho * d0.Cp * rc.fluid.c / rc.k;
        const DerivedCoefficients d = derive_coefficients(rc.fluid);

        const RootSet exact = mode_roots(rc.fluid, d, rc.k);
        {
            std::array<cdouble, 3> xs;
            for (std::size_t j = 0; j < 3; ++j)
                xs[j] = exact.roots[j].x;
            track_dissipativity(rc.fluid, rc.k, xs);
        }
        const auto forms = kirchhoff_attenuation_forms(rc.fluid, d, rc.k);
        for (double v : forms)
            worst_forms = std::max(worst_forms,
                                   std::abs(v - forms[0]) / std::abs(forms[0]));

        for (Branch b : {Branch::minus, Branch::plus}) {
            const double att = exact.branch(b).attenuation_rate / rc.k;
            const double rel = std::abs(att - forms[0]) / forms[0];
            worst_rel = std::max(worst_rel, rel / knth);
            if (rel > 10.0 * knth)
                bounded = false;
        }
    }
    report(9, bounded && worst_forms < 1e-12,
           fmt("non-viscous attenuation: 100 cases, max rel err / Kn_th = "
               "%.3f (bound 10), Kirchhoff forms agree to %.3e (tol 1e-12)",
               worst_rel, worst_forms));
}

void criterion_10_limits() {
    // k a1 / c fixed at 1e-3
    FluidState f{1.0, 300.0, 1.5e-3, 0.0, 717.0, 1.4, 1.0};
    double gap_iso = 0.0, gap_adia = 0.0;
    {
        FluidState g = f;
        g.lambda = g.mu * g.gamma * g.Cv / 1e-6;
        const DerivedCoefficients d = derive_coefficients(g);
        const RootSet set = mode_roots(g, d, 1.0);
        const double cTk = std::sqrt(1.0 / 1.4 - 1e-6);
        gap_iso = std::abs(set.branch(Branch::plus).x.real() - cTk) / cTk;
    }
    {
        FluidState g = f;
        g.lambda = g.mu * g.gamma * g.Cv / 1e6;
        const DerivedCoefficients d = derive_coefficients(g);
        const RootSet set = mode_roots(g, d, 1.0);
        const double ck = std::sqrt(1.0 - 1e-6);
        gap_adia = std::abs(set.branch(Branch::plus).x.real() - ck) / ck;
    }
    report(10, gap_iso < 1e-3 && gap_adia < 1e-3,
           fmt("speed limits at k a1/c = 1e-3: |w_R+/k - c_T(k)|/c_T(k) = "
               "%.3e at Pr=1e-6, |w_R+/k - c(k)|/c(k) = %.3e at Pr=1e6 "
               "(tol 1e-3)",
               gap_iso, gap_adia));
}

void criterion_11_table2() {
    const auto db = seed_database();
    const auto checks = table2_checks(db);
    bool ok = checks.size() == 5;
    for (const auto& chk : checks) {
        const bool documented = chk.fluid == "air" || chk.fluid == "honey";
        if (documented)
            ok = ok && !chk.within_5pct; // stays flagged, not silently fixed
        else
            ok = ok && chk.within_5pct;
    }

    const auto& air = find_fluid(db, "air");
    const auto& water = find_fluid(db, "water");
    const double knth_air = air.lambda / (air.rho * air.gamma * air.Cv * air.c);
    const double knth_water =
        water.lambda / (water.rho * water.gamma * water.Cv * water.c);
    const double gap_air = std::abs(knth_air - 6.6e-8) / 6.6e-8;
    const double gap_water = std::abs(knth_water - 9.6e-11) / 9.6e-11;
    ok = ok && gap_air <= 0.10 && gap_water <= 0.10;

    report(11, ok,
           fmt("reference table: freon/water/mercury within 5%%, air/honey "
               "flagged; thermal Knudsen gaps air %.3f, water %.3f (tol 0.10)",
               gap_air, gap_water));
}

void criterion_12_identities(SplitMix64& rng) {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const RandomCase rc = random_case(rng);
        const DerivedCoefficients d = derive_coefficients(rc.fluid);
        for (const auto& item : validate_identities(rc.fluid, d).items)
            worst = std::max(worst, item.relative);
    }
    double worst_gas = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double m = rng.log_uniform(1e-27, 1e-24);
        const double gamma = rng.uniform(1.05, 2.2);
        const FluidState f = ideal_gas_state(m, rng.uniform(50.0, 2000.0),
                                             gamma, rng.log_uniform(0.01, 50.0),
                                             1e-5, 0.02);
        const DerivedCoefficients d = derive_coefficients(f);
        worst_gas =
            std::max(worst_gas, std::abs(d.Gamma - (gamma - 1.0)) / (gamma - 1.0));
    }
    report(12, worst < 1e-12 && worst_gas < 1e-12,
           fmt("thermodynamic identities: 1000 states max residual %.3e, "
               "ideal-gas Gamma gap %.3e (tol 1e-12)",
               worst, worst_gas));
}

void criterion_13_determinism() {
    const std::string cmd =
        std::string(NSDISP_CLI_PATH) + " verify --seed 42 2>/dev/null";
    const auto [code0, out0] = testing_oracles::run_command(cmd);
    const auto [code1, out1] = testing_oracles::run_command(cmd);
    const bool ok = code0 == 0 && code1 == 0 && !out0.empty() && out0 == out1;
    report(13, ok,
           "determinism: verify --seed 42 run twice is byte-identical with "
           "exit 0");
}

} // namespace

int main() {
    SplitMix64 rng(20240901);

    criterion_1_euler(rng);
    criterion_2_stokes(rng);
    criterion_3_vieta(rng);
    criterion_4_oracle(rng);
    criterion_5_time_domain(rng);
    criterion_6_dissipativity();
    criterion_7_large_pr();
    criterion_8_small_pr();
    criterion_9_nonviscous(rng);
    criterion_10_limits();
    criterion_11_table2();
    criterion_12_identities(rng);
    criterion_13_determinism();

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 13 criteria passed\n");
    return 0;
}
