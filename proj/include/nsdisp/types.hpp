#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>

namespace nsdisp {

using cdouble = std::complex<double>;

// Error categories; the CLI maps them to exit codes (1/2/3).
struct validation_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Boltzmann constant [J/K], exact by SI definition.
inline constexpr double k_boltzmann = 1.380649e-23;

// Thermodynamic/transport state point of a divariant fluid. All SI.
// mu or lambda may be zero; that selects a degenerate regime, not an error.
struct FluidState {
    double rho;     // density [kg/m^3]
    double T;       // temperature [K]
    double mu;      // dynamic viscosity [Pa s]
    double lambda;  // thermal conductivity [W/(m K)]
    double Cv;      // isochoric heat capacity [J/(kg K)]
    double gamma;   // heat-capacity ratio Cp/Cv [-]
    double c;       // adiabatic speed of sound [m/s]
};

// Throws validation_error naming the offending field.
void validate(const FluidState& fluid, const std::string& context);

// Coefficients completed from a FluidState via the divariant-fluid identities.
// alpha/beta divide by Gamma and are absent when gamma == 1 (Gamma == 0).
struct DerivedCoefficients {
    double Gamma;                // Grueneisen parameter [-], non-negative branch
    double Cp;                   // isobaric heat capacity [J/(kg K)]
    double cT;                   // isothermal speed of sound [m/s]
    double Pr;                   // Prandtl number mu*Cp/lambda; +inf when lambda == 0
    std::optional<double> alpha; // dh/dp coefficient offset [m^3/kg]
    std::optional<double> beta;  // de/drho coefficient offset [J m^3/kg^2]
    double epsilon;              // dp/dT at constant rho [Pa/K]
};

} // namespace nsdisp
