#include "nsdisp/sweep.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "nsdisp/asymptotics.hpp"
#include "nsdisp/thermo.hpp"

namespace nsdisp {

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{})
        throw numerical_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

std::vector<double> sweep_grid(const SweepSpec& spec) {
    if (!(std::isfinite(spec.k_min) && spec.k_min > 0.0))
        throw validation_error("sweep: k_min must be positive");
    if (!(std::isfinite(spec.k_max) && spec.k_max > spec.k_min))
        throw validation_error("sweep: k_max must exceed k_min");
    if (spec.points < 2)
        throw validation_error("sweep: points must be >= 2");

    std::vector<double> ks(static_cast<std::size_t>(spec.points));
    const int n = spec.points;
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        if (spec.spacing == Spacing::log)
            ks[static_cast<std::size_t>(i)] =
                std::exp(std::log(spec.k_min) +
                         t * (std::log(spec.k_max) - std::log(spec.k_min)));
        else
            ks[static_cast<std::size_t>(i)] =
                spec.k_min + t * (spec.k_max - spec.k_min);
    }
    // Endpoints exact regardless of spacing arithmetic.
    ks.front() = spec.k_min;
    ks.back() = spec.k_max;
    return ks;
}

namespace {

bool wants(const SweepSpec& spec, SweepQuantity q) {
    if (spec.quantities.empty())
        return q != SweepQuantity::asymptotic_errors;
    return std::find(spec.quantities.begin(), spec.quantities.end(), q) !=
           spec.quantities.end();
}

std::array<double, 3> expansion_errors(const FluidState& f,
                                       const DerivedCoefficients& d, double k,
                                       const RootSet& exact) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    std::array<double, 3> err = {nan, nan, nan};
    try {
        Expansion e;
        if (f.mu == 0.0 && f.lambda == 0.0)
            return err;
        if (f.mu == 0.0)
            e = nonviscous_expansion(f, d, k);
        else if (f.lambda == 0.0 || d.Pr >= 1.0)
            e = large_pr_expansion(f, d, k, 1);
        else
            e = small_pr_expansion(f, d, k, 1);
        for (std::size_t i = 0; i < 3; ++i)
            err[i] = std::abs(e.roots[i].x - exact.roots[i].x);
    } catch (const validation_error&) {
        // overdamped or otherwise outside every expansion's domain
    }
    return err;
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    const DerivedCoefficients coeffs = derive_coefficients(spec.fluid);
    const std::vector<double> ks = sweep_grid(spec);
    const bool want_asym = wants(spec, SweepQuantity::asymptotic_errors);

    std::vector<SweepRow> rows;
    rows.reserve(ks.size());
    for (double k : ks) {
        SweepRow row;
        row.k = k;
        row.roots = mode_roots(spec.fluid, coeffs, k);
        const AcousticScales s = acoustic_scales(spec.fluid, coeffs, k);
        row.Kn = s.Kn;
        row.Kn_th = s.Kn_th;
        row.continuum_ok = row.roots.regime.continuum_ok;
        row.overdamped = row.roots.regime.overdamped_acoustic;
        row.asym_abs_err = {std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::quiet_NaN()};
        if (want_asym)
            row.asym_abs_err = expansion_errors(spec.fluid, coeffs, k, row.roots);

        for (const auto& r : row.roots.roots)
            if (r.attenuation_rate < -1e-10 * k * spec.fluid.c)
                throw numerical_error("sweep: amplified mode at k = " +
                                      format_double(k));
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::vector<std::string> column_names(const SweepSpec& spec) {
    std::vector<std::string> cols = {"k", "branch", "omega_re", "omega_im"};
    if (wants(spec, SweepQuantity::phase_speed))
        cols.push_back("phase_speed");
    if (wants(spec, SweepQuantity::attenuation))
        cols.push_back("attenuation_rate");
    if (wants(spec, SweepQuantity::knudsen))
        cols.push_back("Kn");
    if (wants(spec, SweepQuantity::knudsen_thermal))
        cols.push_back("Kn_th");
    if (wants(spec, SweepQuantity::regime_flags)) {
        cols.push_back("continuum_ok");
        cols.push_back("overdamped");
    }
    if (wants(spec, SweepQuantity::asymptotic_errors))
        cols.push_back("asym_abs_err");
    return cols;
}

} // namespace

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    const auto cols = column_names(spec);
    for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << cols[i];
    out << "\n";

    for (const auto& row : rows) {
        for (std::size_t b = 0; b < 3; ++b) {
            const ModeRoot& r = row.roots.roots[b];
            out << format_double(row.k) << "," << branch_name(r.branch);
            out << "," << format_double(r.omega.real());
            out << "," << format_double(r.omega.imag());
            if (wants(spec, SweepQuantity::phase_speed))
                out << "," << format_double(r.phase_speed + spec.u0);
            if (wants(spec, SweepQuantity::attenuation))
                out << "," << format_double(r.attenuation_rate);
            if (wants(spec, SweepQuantity::knudsen))
                out << "," << format_double(row.Kn);
            if (wants(spec, SweepQuantity::knudsen_thermal))
                out << "," << format_double(row.Kn_th);
            if (wants(spec, SweepQuantity::regime_flags))
                out << "," << (row.continuum_ok ? "true" : "false") << ","
                    << (row.overdamped ? "true" : "false");
            if (wants(spec, SweepQuantity::asymptotic_errors))
                out << "," << format_double(row.asym_abs_err[b]);
            out << "\n";
        }
    }
    return out.str();
}

std::string sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    nlohmann::json doc;
    doc["columns"] = column_names(spec);
    doc["u0"] = spec.u0;
    auto& list = doc["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json jrow;
        jrow["k"] = row.k;
        if (wants(spec, SweepQuantity::knudsen))
            jrow["Kn"] = row.Kn;
        if (wants(spec, SweepQuantity::knudsen_thermal))
            jrow["Kn_th"] = row.Kn_th;
        if (wants(spec, SweepQuantity::regime_flags)) {
            jrow["continuum_ok"] = row.continuum_ok;
            jrow["overdamped"] = row.overdamped;
        }
        auto& branches = jrow["branches"] = nlohmann::json::array();
        for (std::size_t b = 0; b < 3; ++b) {
            const ModeRoot& r = row.roots.roots[b];
            nlohmann::json jb;
            jb["branch"] = branch_name(r.branch);
            jb["omega_re"] = r.omega.real();
            jb["omega_im"] = r.omega.imag();
            if (wants(spec, SweepQuantity::phase_speed))
                jb["phase_speed"] = r.phase_speed + spec.u0;
            if (wants(spec, SweepQuantity::attenuation))
                jb["attenuation_rate"] = r.attenuation_rate;
            if (wants(spec, SweepQuantity::asymptotic_errors) &&
                std::isfinite(row.asym_abs_err[b]))
                jb["asym_abs_err"] = row.asym_abs_err[b];
            branches.push_back(jb);
        }
        list.push_back(jrow);
    }
    return doc.dump(2) + "\n";
}

} // namespace nsdisp
