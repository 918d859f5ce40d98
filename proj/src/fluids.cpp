#include "nsdisp/fluids.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "nsdisp/thermo.hpp"

namespace nsdisp {

using json = nlohmann::json;

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::paper_table: return "paper-table";
    case Provenance::user_supplied: return "user-supplied";
    case Provenance::standard_reference: return "standard-reference";
    }
    return "?";
}

Provenance provenance_from_name(const std::string& name) {
    if (name == "paper-table")
        return Provenance::paper_table;
    if (name == "user-supplied")
        return Provenance::user_supplied;
    if (name == "standard-reference")
        return Provenance::standard_reference;
    throw validation_error("provenance: unknown tag '" + name + "'");
}

FluidState FluidRecord::to_state() const {
    return {rho, T, mu, lambda, Cv, gamma, c};
}

namespace {

constexpr const char* numeric_fields[] = {"rho", "mu",  "c",     "lambda",
                                          "T",   "Cv", "gamma"};

double require_number(const json& rec, const std::string& field,
                      const std::string& locus) {
    if (!rec.contains(field))
        throw validation_error(locus + ": " + field + ": required");
    if (!rec[field].is_number())
        throw validation_error(locus + ": " + field + ": must be a number");
    return rec[field].get<double>();
}

FluidRecord parse_record(const json& rec, std::size_t index, bool lenient) {
    std::ostringstream locus_stream;
    locus_stream << "fluids[" << index << "]";
    std::string locus = locus_stream.str();

    if (!rec.is_object())
        throw validation_error(locus + ": record must be an object");
    if (!rec.contains("name") || !rec["name"].is_string() ||
        rec["name"].get<std::string>().empty())
        throw validation_error(locus + ": name: required non-empty string");

    FluidRecord out;
    out.name = rec["name"].get<std::string>();
    locus += " ('" + out.name + "')";

    if (!lenient) {
        static const std::set<std::string> known = {
            "name", "rho", "mu", "c", "lambda", "T", "Cv", "gamma", "provenance"};
        for (const auto& [key, value] : rec.items())
            if (!known.count(key))
                throw validation_error(locus + ": unknown field '" + key +
                                       "' (strict mode)");
    }

    out.rho = require_number(rec, "rho", locus);
    out.mu = require_number(rec, "mu", locus);
    out.c = require_number(rec, "c", locus);
    out.lambda = require_number(rec, "lambda", locus);
    out.T = require_number(rec, "T", locus);
    out.Cv = require_number(rec, "Cv", locus);
    out.gamma = require_number(rec, "gamma", locus);

    if (rec.contains("provenance")) {
        if (!rec["provenance"].is_object())
            throw validation_error(locus + ": provenance: must be an object");
        for (const auto& [key, value] : rec["provenance"].items()) {
            const bool known_field =
                std::find_if(std::begin(numeric_fields), std::end(numeric_fields),
                             [&](const char* f) { return key == f; }) !=
                std::end(numeric_fields);
            if (!known_field) {
                if (lenient)
                    continue;
                throw validation_error(locus + ": provenance: unknown field '" +
                                       key + "'");
            }
            if (!value.is_string())
                throw validation_error(locus + ": provenance." + key +
                                       ": must be a string tag");
            out.provenance[key] = provenance_from_name(value.get<std::string>());
        }
    }
    for (const char* f : numeric_fields)
        if (!out.provenance.count(f))
            out.provenance[f] = Provenance::user_supplied;

    // Must convert into a valid state with a complete coefficient set.
    try {
        derive_coefficients(out.to_state());
    } catch (const validation_error& e) {
        throw validation_error(locus + ": " + e.what());
    }
    return out;
}

} // namespace

std::vector<FluidRecord> load_database(const std::string& json_text,
                                       bool lenient) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw validation_error(std::string("fluid database: parse error: ") +
                               e.what());
    }

    if (!doc.is_object())
        throw validation_error("fluid database: top level must be an object");
    if (!doc.contains("schema_version") || !doc["schema_version"].is_number_integer() ||
        doc["schema_version"].get<int>() != 1)
        throw validation_error("fluid database: schema_version: must be 1");
    if (!doc.contains("fluids") || !doc["fluids"].is_array())
        throw validation_error("fluid database: fluids: required array");
    if (!lenient)
        for (const auto& [key, value] : doc.items())
            if (key != "schema_version" && key != "fluids")
                throw validation_error("fluid database: unknown field '" + key +
                                       "' (strict mode)");

    std::vector<FluidRecord> records;
    std::set<std::string> names;
    std::size_t index = 0;
    for (const auto& rec : doc["fluids"]) {
        FluidRecord r = parse_record(rec, index++, lenient);
        if (!names.insert(r.name).second)
            throw validation_error("fluid database: duplicate name '" + r.name +
                                   "'");
        records.push_back(std::move(r));
    }
    return records;
}

std::vector<FluidRecord> load_database_file(const std::string& path,
                                            bool lenient) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open fluid database '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    if (in.bad())
        throw io_error("error reading fluid database '" + path + "'");
    return load_database(text.str(), lenient);
}

std::string serialize_database(const std::vector<FluidRecord>& records) {
    json doc;
    doc["schema_version"] = 1;
    doc["fluids"] = json::array();
    for (const auto& r : records) {
        json rec;
        rec["name"] = r.name;
        rec["rho"] = r.rho;
        rec["mu"] = r.mu;
        rec["c"] = r.c;
        rec["lambda"] = r.lambda;
        rec["T"] = r.T;
        rec["Cv"] = r.Cv;
        rec["gamma"] = r.gamma;
        json prov;
        for (const auto& [field, tag] : r.provenance)
            prov[field] = provenance_name(tag);
        rec["provenance"] = prov;
        doc["fluids"].push_back(rec);
    }
    return doc.dump(2) + "\n";
}

namespace {

// Reference fluids. Transport rows come from the source table; T, Cv and
// gamma are standard-reference completions the table does not carry.
const char* seed_json_text = R"({
  "schema_version": 1,
  "fluids": [
    {"name": "air", "rho": 1.225, "mu": 1.81e-5, "c": 340.0, "lambda": 2.6e-2,
     "T": 298.0, "Cv": 717.0, "gamma": 1.4,
     "provenance": {"rho": "paper-table", "mu": "paper-table", "c": "paper-table",
                    "lambda": "paper-table", "T": "standard-reference",
                    "Cv": "standard-reference", "gamma": "standard-reference"}},
    {"name": "freon", "rho": 1570.0, "mu": 2.6e-4, "c": 716.0, "lambda": 10.0,
     "T": 298.0, "Cv": 800.0, "gamma": 1.1,
     "provenance": {"rho": "paper-table", "mu": "paper-table", "c": "paper-table",
                    "lambda": "paper-table", "T": "standard-reference",
                    "Cv": "standard-reference", "gamma": "standard-reference"}},
    {"name": "water", "rho": 997.0, "mu": 8.9e-4, "c": 1480.0, "lambda": 0.6,
     "T": 298.0, "Cv": 4138.6, "gamma": 1.01,
     "provenance": {"rho": "paper-table", "mu": "paper-table", "c": "paper-table",
                    "lambda": "paper-table", "T": "standard-reference",
                    "Cv": "standard-reference", "gamma": "standard-reference"}},
    {"name": "honey", "rho": 1400.0, "mu": 10.0, "c": 2030.0, "lambda": 0.5,
     "T": 298.0, "Cv": 2450.0, "gamma": 1.02,
     "provenance": {"rho": "paper-table", "mu": "paper-table", "c": "paper-table",
                    "lambda": "paper-table", "T": "standard-reference",
                    "Cv": "standard-reference", "gamma": "standard-reference"}},
    {"name": "mercury", "rho": 13500.0, "mu": 1.5e-3, "c": 1450.0, "lambda": 8.3,
     "T": 298.0, "Cv": 122.4, "gamma": 1.14,
     "provenance": {"rho": "paper-table", "mu": "paper-table", "c": "paper-table",
                    "lambda": "paper-table", "T": "standard-reference",
                    "Cv": "standard-reference", "gamma": "standard-reference"}}
  ]
}
)";

} // namespace

const std::string& seed_database_json() {
    static const std::string text = seed_json_text;
    return text;
}

std::vector<FluidRecord> seed_database() {
    return load_database(seed_database_json());
}

const FluidRecord& find_fluid(const std::vector<FluidRecord>& records,
                              const std::string& name) {
    for (const auto& r : records)
        if (r.name == name)
            return r;
    throw validation_error("unknown fluid '" + name + "'");
}

std::vector<Table2Check> table2_checks(const std::vector<FluidRecord>& records) {
    static const std::map<std::string, double> printed = {
        {"air", 4.3e-7},   {"freon", 2.3e-10}, {"water", 6e-10},
        {"honey", 4.7e-6}, {"mercury", 7.6e-11}};

    std::vector<Table2Check> checks;
    for (const auto& r : records) {
        const auto it = printed.find(r.name);
        if (it == printed.end())
            continue;
        Table2Check chk;
        chk.fluid = r.name;
        chk.computed = r.mu / (r.rho * r.c);
        chk.printed = it->second;
        chk.relative_gap = std::abs(chk.computed - chk.printed) / chk.printed;
        chk.within_5pct = chk.relative_gap <= 0.05;
        checks.push_back(chk);
    }
    return checks;
}

} // namespace nsdisp
