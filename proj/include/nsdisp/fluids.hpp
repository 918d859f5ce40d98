#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsdisp/types.hpp"

namespace nsdisp {

enum class Provenance { paper_table, user_supplied, standard_reference };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

struct FluidRecord {
    std::string name;
    double rho, mu, c, lambda, T, Cv, gamma;
    std::map<std::string, Provenance> provenance; // per-field tags

    FluidState to_state() const;
};

// Parses and validates a fluid database document. Strict mode rejects
// unknown fields; lenient mode ignores them. Throws io_error on malformed
// JSON (with byte locus) and validation_error naming field and constraint.
std::vector<FluidRecord> load_database(const std::string& json_text,
                                       bool lenient = false);
std::vector<FluidRecord> load_database_file(const std::string& path,
                                            bool lenient = false);

std::string serialize_database(const std::vector<FluidRecord>& records);

// Built-in seed: the five reference fluids (air, freon, water, honey,
// mercury) with standard-reference values for the fields the source table
// does not supply.
const std::string& seed_database_json();
std::vector<FluidRecord> seed_database();

const FluidRecord& find_fluid(const std::vector<FluidRecord>& records,
                              const std::string& name);

struct Table2Check {
    std::string fluid;
    double computed;     // mu / (rho c) [m]
    double printed;      // reference value for the seed fluids
    double relative_gap; // |computed - printed| / printed
    bool within_5pct;
};

// Recomputes mu/(rho c) for the seed fluids and compares against the
// reference column. Records without a reference value are skipped.
std::vector<Table2Check> table2_checks(const std::vector<FluidRecord>& records);

} // namespace nsdisp
