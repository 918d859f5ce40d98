// nsdisp command-line tool: root queries, wavenumber sweeps, asymptotic
// comparisons and the verification battery for the acoustic dispersion
// relation of a viscous heat-conducting fluid.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include "nsdisp/asymptotics.hpp"
#include "nsdisp/fluids.hpp"
#include "nsdisp/oracle.hpp"
#include "nsdisp/roots.hpp"
#include "nsdisp/sweep.hpp"
#include "nsdisp/thermo.hpp"
#include "nsdisp/verify.hpp"

namespace {

using namespace nsdisp;

constexpr int exit_ok = 0;
constexpr int exit_validation = 1;
constexpr int exit_numerical = 2;
constexpr int exit_io = 3;

struct CommonArgs {
    std::string db_path;
    bool lenient = false;
    std::string fluid_name;
    std::string inline_state;
    double k = 0.0;
    double freq = 0.0;
    double u0 = 0.0;
};

std::vector<FluidRecord> open_database(const CommonArgs& args) {
    if (!args.db_path.empty())
        return load_database_file(args.db_path, args.lenient);
    if (const char* env = std::getenv("NSDISP_DB"))
        return load_database_file(env, args.lenient);
    return seed_database();
}

// --state rho=..,T=..,mu=..,lambda=..,Cv=..,gamma=..,c=..
FluidState parse_inline_state(const std::string& text) {
    FluidState f{};
    bool seen[7] = {};
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw validation_error("--state: expected key=value, got '" + item +
                                   "'");
        const std::string key = item.substr(0, eq);
        double value = 0.0;
        try {
            value = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw validation_error("--state: bad number for '" + key + "'");
        }
        if (key == "rho") { f.rho = value; seen[0] = true; }
        else if (key == "T") { f.T = value; seen[1] = true; }
        else if (key == "mu") { f.mu = value; seen[2] = true; }
        else if (key == "lambda") { f.lambda = value; seen[3] = true; }
        else if (key == "Cv") { f.Cv = value; seen[4] = true; }
        else if (key == "gamma") { f.gamma = value; seen[5] = true; }
        else if (key == "c") { f.c = value; seen[6] = true; }
        else throw validation_error("--state: unknown key '" + key + "'");
    }
    static const char* names[7] = {"rho", "T", "mu", "lambda", "Cv", "gamma", "c"};
    for (int i = 0; i < 7; ++i)
        if (!seen[i])
            throw validation_error(std::string("--state: missing '") + names[i] +
                                   "'");
    validate(f, "--state");
    return f;
}

FluidState resolve_fluid(const CommonArgs& args) {
    const bool has_name = !args.fluid_name.empty();
    const bool has_state = !args.inline_state.empty();
    if (has_name == has_state)
        throw validation_error("specify exactly one of --fluid and --state");
    if (has_state)
        return parse_inline_state(args.inline_state);
    return find_fluid(open_database(args), args.fluid_name).to_state();
}

double resolve_wavenumber(const CommonArgs& args, const FluidState& fluid) {
    const bool has_k = args.k > 0.0;
    const bool has_f = args.freq > 0.0;
    if (has_k == has_f)
        throw validation_error("specify exactly one of --k and --freq");
    if (has_k)
        return args.k;
    // Approximate conversion through the adiabatic speed; the dispersion
    // relation itself is wavenumber-in.
    const double k = 2.0 * std::numbers::pi * args.freq / fluid.c;
    std::cerr << "note: converted f = " << format_double(args.freq)
              << " Hz to k = " << format_double(k)
              << " 1/m via k = 2 pi f / c with adiabatic c = "
              << format_double(fluid.c) << " m/s\n";
    return k;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw io_error("cannot open output file '" + out_path + "'");
    out << text;
    if (!out)
        throw io_error("error writing '" + out_path + "'");
}

std::string root_set_text(const RootSet& set, double k, double u0) {
    std::ostringstream out;
    out << "k = " << format_double(k) << " 1/m\n";
    for (const auto& r : set.roots) {
        out << "  " << branch_name(r.branch) << ": omega = ("
            << format_double(r.omega.real()) << ", "
            << format_double(r.omega.imag()) << ") 1/s"
            << "  phase_speed = " << format_double(r.phase_speed + u0)
            << " m/s  attenuation_rate = " << format_double(r.attenuation_rate)
            << " 1/s\n";
    }
    out << "  regime: ";
    switch (set.regime.regime) {
    case Regime::euler: out << "euler"; break;
    case Regime::stokes: out << "stokes"; break;
    case Regime::nonviscous: out << "nonviscous"; break;
    case Regime::general: out << "general"; break;
    }
    out << "  continuum_ok = " << (set.regime.continuum_ok ? "true" : "false")
        << "  overdamped_acoustic = "
        << (set.regime.overdamped_acoustic ? "true" : "false")
        << "  overdamped_isothermal = "
        << (set.regime.overdamped_isothermal ? "true" : "false") << "\n";
    out << "  vieta residuals: " << format_double(set.vieta_residuals[0]) << " "
        << format_double(set.vieta_residuals[1]) << " "
        << format_double(set.vieta_residuals[2]) << "\n";
    return out.str();
}

nlohmann::json root_set_json(const RootSet& set, double k, double u0) {
    nlohmann::json doc;
    doc["k"] = k;
    doc["u0"] = u0;
    auto& branches = doc["branches"] = nlohmann::json::array();
    for (const auto& r : set.roots) {
        nlohmann::json jb;
        jb["branch"] = branch_name(r.branch);
        jb["omega_re"] = r.omega.real();
        jb["omega_im"] = r.omega.imag();
        jb["phase_speed"] = r.phase_speed + u0;
        jb["attenuation_rate"] = r.attenuation_rate;
        branches.push_back(jb);
    }
    doc["continuum_ok"] = set.regime.continuum_ok;
    doc["overdamped_acoustic"] = set.regime.overdamped_acoustic;
    doc["overdamped_isothermal"] = set.regime.overdamped_isothermal;
    doc["vieta_residuals"] = set.vieta_residuals;
    return doc;
}

int cmd_fluids(const CommonArgs& args, const std::string& action,
               const std::string& name) {
    const auto db = open_database(args);
    if (action == "list") {
        for (const auto& rec : db)
            std::cout << rec.name << "  rho=" << format_double(rec.rho)
                      << " mu=" << format_double(rec.mu)
                      << " c=" << format_double(rec.c)
                      << " lambda=" << format_double(rec.lambda) << "\n";
        return exit_ok;
    }
    const FluidRecord& rec = find_fluid(db, name);
    const FluidState f = rec.to_state();
    const DerivedCoefficients d = derive_coefficients(f);
    std::cout << "name: " << rec.name << "\n";
    const struct { const char* key; double value; } fields[] = {
        {"rho", rec.rho}, {"mu", rec.mu},   {"c", rec.c},      {"lambda", rec.lambda},
        {"T", rec.T},     {"Cv", rec.Cv},   {"gamma", rec.gamma}};
    for (const auto& field : fields) {
        std::cout << field.key << ": " << format_double(field.value) << " ["
                  << provenance_name(rec.provenance.at(field.key)) << "]\n";
    }
    std::cout << "derived: Gamma=" << format_double(d.Gamma)
              << " Cp=" << format_double(d.Cp) << " cT=" << format_double(d.cT)
              << " Pr=" << format_double(d.Pr)
              << " epsilon=" << format_double(d.epsilon) << "\n";
    const IdentityReport rep = validate_identities(f, d);
    std::cout << "identities: " << (rep.all_ok ? "ok" : "FLAGGED") << "\n";
    return exit_ok;
}

int cmd_roots(const CommonArgs& args, const std::string& format) {
    const FluidState f = resolve_fluid(args);
    const double k = resolve_wavenumber(args, f);
    const DerivedCoefficients d = derive_coefficients(f);
    const RootSet set = mode_roots(f, d, k);
    if (format == "json")
        std::cout << root_set_json(set, k, args.u0).dump(2) << "\n";
    else
        std::cout << root_set_text(set, k, args.u0);
    return exit_ok;
}

int cmd_sweep(const CommonArgs& args, double k_min, double k_max, int points,
              bool log_spacing, const std::string& format,
              const std::string& out_path) {
    SweepSpec spec;
    spec.fluid = resolve_fluid(args);
    spec.k_min = k_min;
    spec.k_max = k_max;
    spec.points = points;
    spec.spacing = log_spacing ? Spacing::log : Spacing::linear;
    spec.u0 = args.u0;

    const auto rows = run_sweep(spec);
    write_output(format == "json" ? sweep_json(spec, rows)
                                  : sweep_csv(spec, rows),
                 out_path);
    return exit_ok;
}

int cmd_asym(const CommonArgs& args, const std::string& regime_name,
             int order) {
    const FluidState f = resolve_fluid(args);
    const double k = resolve_wavenumber(args, f);
    const DerivedCoefficients d = derive_coefficients(f);

    Expansion e;
    if (regime_name == "large-pr")
        e = large_pr_expansion(f, d, k, order);
    else if (regime_name == "small-pr")
        e = small_pr_expansion(f, d, k, order);
    else if (regime_name == "nonviscous")
        e = nonviscous_expansion(f, d, k);
    else if (regime_name == "stokes") {
        // Closed Stokes form evaluated for any fluid; exact when lambda = 0.
        const CubicDispersion p = build_cubic(f, d, k);
        e = large_pr_expansion(f, d, k, 0);
        e.regime = AsymRegime::stokes;
        e.validity.inside_window =
            f.lambda == 0.0 && p.scales.Kn <= knudsen_critical;
    } else {
        throw validation_error("asym: unknown regime '" + regime_name + "'");
    }

    const RootSet exact = mode_roots(f, d, k);
    std::cout << "regime: " << asym_regime_name(e.regime)
              << "  order: " << e.order << "  inside_validity_window: "
              << (e.validity.inside_window ? "true" : "false") << "\n";
    std::cout << "Kn = " << format_double(e.validity.kn)
              << "  Kn_th = " << format_double(e.validity.kn_th)
              << "  Pr = " << format_double(e.validity.pr) << "\n";
    for (std::size_t i = 0; i < 3; ++i) {
        const ModeRoot& ex = exact.roots[i];
        const ModeRoot& ap = e.roots[i];
        const double abs_err = std::abs(ex.x - ap.x);
        const double rel =
            abs_err / std::max({std::abs(ex.x), std::abs(ap.x), 1e-300});
        std::cout << branch_name(ex.branch) << ": exact omega/k = ("
                  << format_double(ex.x.real()) << ", "
                  << format_double(ex.x.imag()) << ")  expansion = ("
                  << format_double(ap.x.real()) << ", "
                  << format_double(ap.x.imag()) << ")  abs_err = "
                  << format_double(abs_err) << "  rel_err = "
                  << format_double(rel) << "\n";
    }
    return exit_ok;
}

int cmd_verify(const CommonArgs& args, std::uint64_t seed,
               const std::string& out_path) {
    const auto db = open_database(args);
    std::optional<std::string> only;
    if (!args.fluid_name.empty())
        only = args.fluid_name;
    const VerifyResult result = run_verification(db, seed, only);
    write_output(result.report, out_path);
    return result.failures == 0 ? exit_ok : exit_validation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"acoustic dispersion relations for compressible Navier-Stokes"};
    app.require_subcommand(1);

    CommonArgs common;
    app.add_option("--db", common.db_path, "fluid database path")
        ->envname("NSDISP_DB");
    app.add_flag("--lenient", common.lenient, "ignore unknown database fields");

    auto add_fluid_opts = [&](CLI::App* cmd) {
        cmd->add_option("--fluid", common.fluid_name, "fluid name from database");
        cmd->add_option("--state", common.inline_state,
                        "inline state rho=..,T=..,mu=..,lambda=..,Cv=..,gamma=..,c=..");
    };
    auto add_wave_opts = [&](CLI::App* cmd) {
        cmd->add_option("--k", common.k, "wavenumber [1/m]");
        cmd->add_option("--freq", common.freq,
                        "frequency [Hz], converted via adiabatic c");
    };

    auto* fluids_cmd = app.add_subcommand("fluids", "list or show fluids");
    std::string fluids_action = "list";
    std::string fluids_name;
    fluids_cmd->add_option("action", fluids_action, "list | show")
        ->check(CLI::IsMember({"list", "show"}));
    fluids_cmd->add_option("name", fluids_name, "fluid name for 'show'");

    auto* roots_cmd = app.add_subcommand("roots", "solve the dispersion cubic");
    add_fluid_opts(roots_cmd);
    add_wave_opts(roots_cmd);
    std::string roots_format = "text";
    roots_cmd->add_option("--format", roots_format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    roots_cmd->add_option("--u0", common.u0, "background speed offset [m/s]");

    auto* sweep_cmd = app.add_subcommand("sweep", "sweep over wavenumbers");
    add_fluid_opts(sweep_cmd);
    double k_min = 0.0, k_max = 0.0;
    int points = 0;
    bool log_spacing = false;
    std::string sweep_format = "csv", sweep_out;
    sweep_cmd->add_option("--k-min", k_min, "lowest wavenumber [1/m]")->required();
    sweep_cmd->add_option("--k-max", k_max, "highest wavenumber [1/m]")->required();
    sweep_cmd->add_option("--points", points, "grid size")->required();
    sweep_cmd->add_flag("--log", log_spacing, "logarithmic spacing");
    sweep_cmd->add_option("--format", sweep_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_out, "output path (default stdout)");
    sweep_cmd->add_option("--u0", common.u0, "background speed offset [m/s]");

    auto* asym_cmd = app.add_subcommand("asym", "exact roots vs expansion");
    add_fluid_opts(asym_cmd);
    add_wave_opts(asym_cmd);
    std::string regime = "large-pr";
    int order = 1;
    asym_cmd->add_option("--regime", regime,
                         "large-pr | small-pr | nonviscous | stokes")
        ->check(CLI::IsMember({"large-pr", "small-pr", "nonviscous", "stokes"}));
    asym_cmd->add_option("--order", order, "expansion order 0 | 1")
        ->check(CLI::IsMember({0, 1}));

    auto* verify_cmd = app.add_subcommand("verify", "run the invariant battery");
    verify_cmd->add_option("--fluid", common.fluid_name,
                           "restrict database checks to one fluid");
    std::uint64_t seed = 42;
    std::string verify_out;
    verify_cmd->add_option("--seed", seed, "seed for the randomized battery");
    verify_cmd->add_option("--out", verify_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_validation;
    }

    try {
        if (fluids_cmd->parsed()) {
            if (fluids_action == "show" && fluids_name.empty())
                throw validation_error("fluids show: missing fluid name");
            return cmd_fluids(common, fluids_action, fluids_name);
        }
        if (roots_cmd->parsed())
            return cmd_roots(common, roots_format);
        if (sweep_cmd->parsed())
            return cmd_sweep(common, k_min, k_max, points, log_spacing,
                             sweep_format, sweep_out);
        if (asym_cmd->parsed())
            return cmd_asym(common, regime, order);
        if (verify_cmd->parsed())
            return cmd_verify(common, seed, verify_out);
        throw validation_error("no subcommand");
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return exit_numerical;
    } catch (const io_error& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_numerical;
    }
}
