#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsdisp/fluids.hpp"

namespace nsdisp {

struct VerifyResult {
    std::string report; // deterministic function of inputs and seed
    int passed = 0;
    int warnings = 0;
    int failures = 0;
};

// Randomized invariant battery (thermodynamic identities, Vieta, oracle
// equivalence, dissipativity) plus the database and reference-table checks.
// Identical inputs and seed produce a byte-identical report. The two known
// discrepant reference-table entries (air, honey) report WARN, not FAIL.
VerifyResult run_verification(const std::vector<FluidRecord>& db,
                              std::uint64_t seed,
                              const std::optional<std::string>& only_fluid = {});

} // namespace nsdisp
