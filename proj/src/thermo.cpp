#include "nsdisp/thermo.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace nsdisp {

namespace {

void require(bool ok, const std::string& context, const std::string& what) {
    if (!ok)
        throw validation_error(context + ": " + what);
}

} // namespace

void validate(const FluidState& f, const std::string& context) {
    require(std::isfinite(f.rho) && f.rho > 0.0, context, "rho must be positive");
    require(std::isfinite(f.T) && f.T > 0.0, context, "T must be positive");
    require(std::isfinite(f.Cv) && f.Cv > 0.0, context, "Cv must be positive");
    require(std::isfinite(f.c) && f.c > 0.0, context, "c must be positive");
    require(std::isfinite(f.gamma) && f.gamma >= 1.0, context, "gamma must be >= 1");
    require(std::isfinite(f.mu) && f.mu >= 0.0, context, "mu must be non-negative");
    require(std::isfinite(f.lambda) && f.lambda >= 0.0, context,
            "lambda must be non-negative");
}

DerivedCoefficients derive_coefficients(const FluidState& f) {
    validate(f, "derive_coefficients");

    DerivedCoefficients d;
    d.Cp = f.gamma * f.Cv;
    d.cT = f.c / std::sqrt(f.gamma);
    d.Gamma = std::sqrt((f.gamma - 1.0) * f.c * f.c / (f.gamma * f.Cv * f.T));
    d.epsilon = d.Gamma * f.rho * f.Cv;

    if (f.gamma > 1.0) {
        d.alpha = -(f.gamma - 1.0) / (d.Gamma * f.rho);
        d.beta = -(f.gamma - 1.0) * f.c * f.c / (f.gamma * d.Gamma * f.rho);
    }

    if (f.lambda > 0.0)
        d.Pr = f.mu * d.Cp / f.lambda;
    else
        d.Pr = std::numeric_limits<double>::infinity();

    return d;
}

namespace {

IdentityResidual residual(const std::string& name, double lhs, double rhs,
                          double tol) {
    const double abs_res = std::abs(lhs - rhs);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    const double rel_res = scale > 0.0 ? abs_res / scale : 0.0;
    return {name, abs_res, rel_res, rel_res > tol};
}

} // namespace

IdentityReport validate_identities(const FluidState& f,
                                   const DerivedCoefficients& d) {
    constexpr double tol = 1e-10;
    const double c2 = f.c * f.c;

    IdentityReport report;
    report.tolerance = tol;

    auto& items = report.items;
    items.push_back(residual("epsilon = Gamma rho Cv", d.epsilon,
                             d.Gamma * f.rho * f.Cv, tol));
    items.push_back(residual("cT^2 = c^2/gamma", d.cT * d.cT, c2 / f.gamma, tol));
    items.push_back(residual("Gamma^2 Cv T = (gamma-1) c^2/gamma",
                             d.Gamma * d.Gamma * f.Cv * f.T,
                             (f.gamma - 1.0) * c2 / f.gamma, tol));
    if (d.alpha)
        items.push_back(residual("alpha = -(gamma-1)/(Gamma rho)", *d.alpha,
                                 -(f.gamma - 1.0) / (d.Gamma * f.rho), tol));
    if (d.beta)
        items.push_back(residual("beta = -(gamma-1) c^2/(gamma Gamma rho)", *d.beta,
                                 -(f.gamma - 1.0) * c2 / (f.gamma * d.Gamma * f.rho),
                                 tol));
    // Coefficient consistency of dp = c^2 drho + rho Gamma T ds with the
    // (rho, T) form: eliminating dT must reproduce both dp coefficients.
    items.push_back(residual("c^2 = cT^2 + Gamma^2 Cv T", c2,
                             d.cT * d.cT + d.Gamma * d.Gamma * f.Cv * f.T, tol));
    items.push_back(residual("rho Gamma T = epsilon T/Cv", f.rho * d.Gamma * f.T,
                             d.epsilon * f.T / f.Cv, tol));

    report.all_ok = true;
    for (const auto& item : items)
        report.all_ok = report.all_ok && !item.flagged;
    return report;
}

FluidState ideal_gas_state(double m, double T, double gamma, double rho,
                           double mu, double lambda) {
    const std::string ctx = "ideal_gas_state";
    require(std::isfinite(m) && m > 0.0, ctx, "m must be positive");
    require(std::isfinite(T) && T > 0.0, ctx, "T must be positive");
    require(std::isfinite(rho) && rho > 0.0, ctx, "rho must be positive");
    require(std::isfinite(gamma) && gamma > 1.0, ctx, "gamma must be > 1");
    require(std::isfinite(mu) && mu >= 0.0, ctx, "mu must be non-negative");
    require(std::isfinite(lambda) && lambda >= 0.0, ctx,
            "lambda must be non-negative");

    FluidState f;
    f.rho = rho;
    f.T = T;
    f.mu = mu;
    f.lambda = lambda;
    f.gamma = gamma;
    f.Cv = k_boltzmann / ((gamma - 1.0) * m);
    f.c = std::sqrt(gamma * k_boltzmann * T / m);
    return f;
}

MeanFreePathResult mean_free_path(const FluidState& f, double m) {
    validate(f, "mean_free_path");
    if (!(f.mu > 0.0))
        throw validation_error("mean_free_path: mu must be positive (degenerate input)");
    if (!(std::isfinite(m) && m > 0.0))
        throw validation_error("mean_free_path: m must be positive");

    MeanFreePathResult r;
    r.path = f.mu / (f.rho * std::sqrt(k_boltzmann * f.T / (2.0 * std::numbers::pi * m)));
    r.kn_per_k = f.mu / (f.rho * f.c);
    r.ratio = r.path / r.kn_per_k;
    return r;
}

} // namespace nsdisp
