#pragma once

#include <array>
#include <optional>
#include <vector>

#include "nsdisp/types.hpp"

namespace nsdisp {

using Mat3 = std::array<std::array<double, 3>, 3>;
using CMat3 = std::array<std::array<cdouble, 3>, 3>;
using CVec3 = std::array<cdouble, 3>;

// Matrices of the linearized system dW/dt + A dW/dx = B d2W/dx2 with the
// state ordered (rho, u, s) and the pressure closure folded into A.
struct SystemMatrices {
    Mat3 A;
    Mat3 B;
    FluidState fluid;
    DerivedCoefficients coeffs;
};

SystemMatrices build_system_matrices(const FluidState& fluid,
                                     const DerivedCoefficients& coeffs);

// Per-mode evolution operator M = -i k A - k^2 B; the dispersion-relation
// frequencies are omega = i * eig(M).
CMat3 mode_matrix(const SystemMatrices& mats, double k);

// Eigenvalues by iterative triangularization. Independent of the cubic
// solver by construction; each eigenvalue is residual-checked against a
// computed eigenvector (|Mv - lambda v| <= 1e-10 |M|).
std::array<cdouble, 3> eigen3(const CMat3& m);

struct DispersionFit {
    std::vector<cdouble> omegas; // sorted by |Im| ascending
    double residual;             // RMS reconstruction residual, relative
    double condition;            // conditioning of the prediction problem
    bool degenerate;             // near-degenerate frequencies detected
};

struct ModeTrace {
    double k;
    std::vector<double> times;
    std::vector<CVec3> amplitudes;
    std::optional<DispersionFit> fit;
};

// Integrates dW/dt = M W with the classical 4th-order Runge-Kutta scheme.
// Requires dt |M| <= 0.5; throws with a suggested step count otherwise.
ModeTrace evolve_mode(const SystemMatrices& mats, double k, const CVec3& w0,
                      double t_end, int steps);

// Fits the trajectory to a sum of complex exponentials by linear prediction;
// the model order adapts to the numerical rank of the prediction matrix.
DispersionFit measure_dispersion(const ModeTrace& trace);

// Positive-definite symmetrizer used by the energy-dissipation checks:
// S = [[c^2/rho, 0, Gamma T], [0, rho, 0], [Gamma T, 0, rho T / Cv]].
// With this S, d/dt <S W, W> <= 0 for mu, lambda >= 0.
Mat3 symmetrizer(const FluidState& fluid, const DerivedCoefficients& coeffs);

// <S w, w> for the quadratic energy above.
double symmetrizer_energy(const Mat3& s, const CVec3& w);

} // namespace nsdisp
