#pragma once

#include <vector>

#include "nsdisp/types.hpp"

namespace nsdisp {

// Complete the coefficient set of a divariant fluid.
// Gamma is the non-negative root of Gamma^2 Cv T = (gamma-1) c^2 / gamma.
DerivedCoefficients derive_coefficients(const FluidState& fluid);

struct IdentityResidual {
    std::string name;
    double absolute;
    double relative;
    bool flagged; // relative residual above the report tolerance
};

struct IdentityReport {
    std::vector<IdentityResidual> items;
    double tolerance; // flag threshold on relative residuals
    bool all_ok;      // no item flagged
};

// Residuals of the five coefficient identities plus the two coefficient
// equalities implied by dp = c^2 drho + rho Gamma T ds,
// dT = (Gamma T / rho) drho + (T / Cv) ds. Reporting only, never throws.
IdentityReport validate_identities(const FluidState& fluid,
                                   const DerivedCoefficients& coeffs);

// Ideal gas at particle mass m [kg]: c = sqrt(gamma k_b T / m),
// Cv = k_b / ((gamma-1) m). Requires gamma > 1.
FluidState ideal_gas_state(double m, double T, double gamma, double rho,
                           double mu, double lambda);

struct MeanFreePathResult {
    double path;      // Lambda = mu / (rho sqrt(k_b T / (2 pi m))) [m]
    double kn_per_k;  // mu / (rho c) [m], the Knudsen number per unit wavenumber
    double ratio;     // path / kn_per_k; equals sqrt(2 pi gamma) when c = sqrt(gamma k_b T / m)
};

// Maxwell-Boltzmann mean free path and its relation to the Knudsen scale.
MeanFreePathResult mean_free_path(const FluidState& fluid, double m);

} // namespace nsdisp
