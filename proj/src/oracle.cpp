#include "nsdisp/oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

#include "nsdisp/thermo.hpp"

namespace nsdisp {

namespace {

Eigen::Matrix3cd to_eigen(const CMat3& m) {
    Eigen::Matrix3cd out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return out;
}

} // namespace

SystemMatrices build_system_matrices(const FluidState& f,
                                     const DerivedCoefficients& d) {
    validate(f, "build_system_matrices");

    SystemMatrices m;
    m.fluid = f;
    m.coeffs = d;
    m.A = {{{0.0, f.rho, 0.0},
            {f.c * f.c / f.rho, 0.0, d.Gamma * f.T},
            {0.0, 0.0, 0.0}}};
    m.B = {{{0.0, 0.0, 0.0},
            {0.0, 4.0 * f.mu / (3.0 * f.rho), 0.0},
            {f.lambda * d.Gamma / (f.rho * f.rho), 0.0,
             f.lambda / (f.rho * f.Cv)}}};
    return m;
}

CMat3 mode_matrix(const SystemMatrices& m, double k) {
    if (!(std::isfinite(k) && k > 0.0))
        throw validation_error("mode_matrix: k must be positive");

    CMat3 out;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            out[i][j] = cdouble(-k * k * m.B[i][j], -k * m.A[i][j]);
    return out;
}

std::array<cdouble, 3> eigen3(const CMat3& m) {
    const Eigen::Matrix3cd mat = to_eigen(m);

    Eigen::ComplexEigenSolver<Eigen::Matrix3cd> solver(mat, true);
    if (solver.info() != Eigen::Success)
        throw numerical_error("eigen3: triangularization did not converge");

    const double norm = mat.norm();
    std::array<cdouble, 3> vals;
    for (int i = 0; i < 3; ++i) {
        const cdouble lambda = solver.eigenvalues()(i);
        const Eigen::Vector3cd v = solver.eigenvectors().col(i);
        const double res = (mat * v - lambda * v).norm() / std::max(norm, 1e-300);
        if (res > 1e-10)
            throw numerical_error(
                "eigen3: eigenpair residual " + std::to_string(res) +
                " exceeds tolerance for eigenvalue index " + std::to_string(i));
        vals[static_cast<std::size_t>(i)] = lambda;
    }
    return vals;
}

ModeTrace evolve_mode(const SystemMatrices& mats, double k, const CVec3& w0,
                      double t_end, int steps) {
    if (!(std::isfinite(t_end) && t_end > 0.0))
        throw validation_error("evolve_mode: t_end must be positive");
    if (steps < 1)
        throw validation_error("evolve_mode: steps must be >= 1");

    const Eigen::Matrix3cd m = to_eigen(mode_matrix(mats, k));
    const double norm = m.norm();
    const double dt = t_end / steps;
    if (dt * norm > 0.5) {
        const int needed = static_cast<int>(std::ceil(t_end * norm / 0.5));
        throw validation_error(
            "evolve_mode: stability bound dt*|M| <= 0.5 violated; use at least " +
            std::to_string(needed) + " steps");
    }

    ModeTrace trace;
    trace.k = k;
    trace.times.reserve(static_cast<std::size_t>(steps) + 1);
    trace.amplitudes.reserve(static_cast<std::size_t>(steps) + 1);

    Eigen::Vector3cd w(w0[0], w0[1], w0[2]);
    trace.times.push_back(0.0);
    trace.amplitudes.push_back(w0);
    for (int n = 1; n <= steps; ++n) {
        const Eigen::Vector3cd k1 = m * w;
        const Eigen::Vector3cd k2 = m * (w + 0.5 * dt * k1);
        const Eigen::Vector3cd k3 = m * (w + 0.5 * dt * k2);
        const Eigen::Vector3cd k4 = m * (w + dt * k3);
        w += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        trace.times.push_back(dt * n);
        trace.amplitudes.push_back({w(0), w(1), w(2)});
    }
    return trace;
}

DispersionFit measure_dispersion(const ModeTrace& raw) {
    if (raw.amplitudes.size() < 64)
        throw validation_error("measure_dispersion: need at least 64 samples");
    {
        const double dt0 = raw.times[1] - raw.times[0];
        for (std::size_t i = 1; i + 1 < raw.amplitudes.size(); ++i)
            if (std::abs(raw.times[i + 1] - raw.times[i] - dt0) > 1e-9 * dt0)
                throw validation_error(
                    "measure_dispersion: samples must be uniform");
    }

    // Decimate long traces; finely stepped integrations otherwise put all
    // prediction ratios too close to 1 for a stable fit.
    ModeTrace trace;
    trace.k = raw.k;
    const std::size_t stride = (raw.amplitudes.size() + 1023) / 1024;
    for (std::size_t i = 0; i < raw.amplitudes.size(); i += stride) {
        trace.times.push_back(raw.times[i]);
        trace.amplitudes.push_back(raw.amplitudes[i]);
    }

    const std::size_t n = trace.amplitudes.size();
    const double dt = trace.times[1] - trace.times[0];

    // Linear prediction y[i+p] = sum_j a_j y[i+j], stacked over components.
    // Components carry different units; scale each series to unit maximum
    // so none of them dominates the least squares.
    std::array<double, 3> scale{};
    for (const auto& w : trace.amplitudes)
        for (std::size_t comp = 0; comp < 3; ++comp)
            scale[comp] = std::max(scale[comp], std::abs(w[comp]));
    for (auto& s : scale)
        s = s > 0.0 ? 1.0 / s : 0.0;

    const auto build = [&](int p, Eigen::MatrixXcd& lp, Eigen::VectorXcd& rhs) {
        const std::size_t up = static_cast<std::size_t>(p);
        lp.resize(static_cast<Eigen::Index>(3 * (n - up)), p);
        rhs.resize(lp.rows());
        Eigen::Index r = 0;
        for (std::size_t comp = 0; comp < 3; ++comp) {
            for (std::size_t i = 0; i + up < n; ++i, ++r) {
                for (int j = 0; j < p; ++j)
                    lp(r, j) = scale[comp] *
                               trace.amplitudes[i + static_cast<std::size_t>(j)][comp];
                rhs(r) = scale[comp] * trace.amplitudes[i + up][comp];
            }
        }
    };

    // Rank-revealing QR; drop prediction order when the trajectory spans
    // fewer than three independent exponentials.
    constexpr int max_order = 3;
    Eigen::MatrixXcd lp;
    Eigen::VectorXcd rhs;
    build(max_order, lp, rhs);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(lp);
    qr.setThreshold(1e-10);
    const int order = std::max<int>(1, static_cast<int>(qr.rank()));

    if (order != max_order)
        build(order, lp, rhs);
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr_final(lp);
    const Eigen::VectorXcd coef = qr_final.solve(rhs);
    const auto& rdiag = qr_final.matrixR();
    const double condition =
        std::abs(rdiag(0, 0)) /
        std::max(std::abs(rdiag(order - 1, order - 1)), 1e-300);

    // Companion matrix of z^order - a_{order-1} z^{order-1} - ... - a_0.
    Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(order, order);
    for (int j = 0; j < order; ++j)
        comp(0, j) = coef(order - 1 - j);
    for (int i = 1; i < order; ++i)
        comp(i, i - 1) = 1.0;

    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
    if (es.info() != Eigen::Success)
        throw numerical_error("measure_dispersion: companion eigensolve failed");

    DispersionFit fit;
    for (int i = 0; i < order; ++i) {
        const cdouble z = es.eigenvalues()(i);
        // W ~ exp(-i omega t): z = exp(-i omega dt).
        fit.omegas.push_back(cdouble(0.0, 1.0) * std::log(z) / dt);
    }
    std::sort(fit.omegas.begin(), fit.omegas.end(),
              [](cdouble a, cdouble b) {
                  const double ia = std::abs(a.imag()), ib = std::abs(b.imag());
                  return ia != ib ? ia < ib : a.real() < b.real();
              });

    // Reconstruction residual: refit amplitudes on the exponential basis.
    Eigen::MatrixXcd basis(n, order);
    for (std::size_t i = 0; i < n; ++i)
        for (int j = 0; j < order; ++j)
            basis(i, j) =
                std::exp(cdouble(0.0, -1.0) * fit.omegas[static_cast<std::size_t>(j)] *
                         trace.times[i]);
    double num = 0.0, den = 0.0;
    for (std::size_t comp_i = 0; comp_i < 3; ++comp_i) {
        Eigen::VectorXcd y(n);
        for (std::size_t i = 0; i < n; ++i)
            y(i) = scale[comp_i] * trace.amplitudes[i][comp_i];
        const Eigen::VectorXcd amp = basis.colPivHouseholderQr().solve(y);
        num += (basis * amp - y).squaredNorm();
        den += y.squaredNorm();
    }
    fit.residual = den > 0.0 ? std::sqrt(num / den) : 0.0;
    fit.condition = condition;
    fit.degenerate = condition > 1e12;
    return fit;
}

Mat3 symmetrizer(const FluidState& f, const DerivedCoefficients& d) {
    return {{{f.c * f.c / f.rho, 0.0, d.Gamma * f.T},
             {0.0, f.rho, 0.0},
             {d.Gamma * f.T, 0.0, f.rho * f.T / f.Cv}}};
}

double symmetrizer_energy(const Mat3& s, const CVec3& w) {
    double e = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            e += s[i][j] * (std::conj(w[i]) * w[j]).real();
    return e;
}

} // namespace nsdisp
