#pragma once

#include <string>
#include <vector>

#include "nsdisp/roots.hpp"

namespace nsdisp {

enum class Spacing { linear, log };

// Optional column selection for sweep output; k and branch are always
// emitted. Default is the full documented column set.
enum class SweepQuantity {
    phase_speed,
    attenuation,
    knudsen,
    knudsen_thermal,
    regime_flags,
    asymptotic_errors,
};

struct SweepSpec {
    FluidState fluid;
    double k_min = 0.0;
    double k_max = 0.0;
    int points = 0;
    Spacing spacing = Spacing::log;
    double u0 = 0.0; // background-speed reporting offset, phase speeds only
    std::vector<SweepQuantity> quantities; // empty means all except asym errors
};

struct SweepRow {
    double k;
    RootSet roots; // phase speeds without the u0 offset
    double Kn;
    double Kn_th;
    bool continuum_ok;
    bool overdamped;
    // |exact - order-1 expansion| per branch for the regime-matched
    // expansion; NaN when no expansion applies. Filled only when requested.
    std::array<double, 3> asym_abs_err;
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double v);

std::string sweep_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);
std::string sweep_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

// Wavenumbers of the sweep grid.
std::vector<double> sweep_grid(const SweepSpec& spec);

} // namespace nsdisp
