#include "fluxring/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "fluxring/csv.hpp"
#include "fluxring/dynamics.hpp"
#include "fluxring/ensemble.hpp"
#include "fluxring/errors.hpp"
#include "fluxring/feasibility.hpp"
#include "fluxring/ring_model.hpp"

#ifndef FLUXRING_VERSION
#define FLUXRING_VERSION "0.0.0"
#endif

namespace fluxring::cli {

namespace {

constexpr std::array<std::string_view, 8> command_names{
    "sweep-current", "sweep-resistance", "sweep-icrit", "rectify",
    "decay",         "feasibility",      "meissner",    "report",
};

// Command-line flags that set a config key directly.
struct FlagKey {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr std::array<FlagKey, 22> flag_keys{{
    {"--omega-sw", "omega_sw", "switching (closing) rate [Hz]"},
    {"--R-B", "R_B", "normal-state resistance of the switched segment [ohm]"},
    {"--duty", "duty", "normal fraction of each switching period"},
    {"--mode", "mode", "deterministic | poisson | thermal"},
    {"--theta", "theta", "observation time [s]"},
    {"--dt", "dt", "trajectory sampling step [s]"},
    {"--phi", "phi", "single flux point for trajectory, decay and meissner"},
    {"--trajectory", "trajectory", "rectify: also write I(t), V_B(t) at --phi to this file"},
    {"--n-max", "n_max", "initial ensemble truncation half-width"},
    {"--threads", "threads", "worker threads (0 = all cores)"},
    {"--c-R", "c_R", "Little-Parks resistance scale [ohm]"},
    {"--Ic0", "I_c0", "flux-independent critical current [A]"},
    {"--shift", "shift", "critical-current anisotropy shift in phi"},
    {"--L", "L", "decay: loop inductance [H]"},
    {"--R", "R", "decay: loop resistance [ohm]"},
    {"--I-p0", "I_p0", "decay: initial current [A]"},
    {"--size", "size", "feasibility: particle size [m]"},
    {"--sizes", "sizes", "feasibility: size sweep a0:a1:n (geometric)"},
    {"--density", "density", "feasibility: mass density [kg/m3]"},
    {"--mass", "mass", "feasibility: particle mass [kg]"},
    {"--B", "field", "meissner: applied field [T]"},
    {"--radius", "sample_radius", "meissner: sample radius [m]"},
}};

struct Parsed {
    std::string command;
    std::string preset = "aluminum-ring";
    std::string config_path;
    std::string flux;
    std::string T;
    std::string seed;
    std::string output;
    std::vector<std::string> sets;
    std::array<std::string, flag_keys.size()> flag_values;
};

std::unique_ptr<CLI::App> make_app(Parsed& p) {
    auto app = std::make_unique<CLI::App>("Superconducting ring flux-quantization toolkit", "fluxring");
    app->add_option("command", p.command, "command")->required()->check(CLI::IsMember(
        std::vector<std::string>(command_names.begin(), command_names.end())));
    app->add_option("--preset", p.preset, "aluminum-ring | fullerene-C70 | virus-60nm");
    app->add_option("--config", p.config_path, "key = value file");
    app->add_option("--flux", p.flux, "flux sweep start:stop:steps in units of Phi_0");
    app->add_option("--T", p.T, "temperature [K]");
    app->add_option("--seed", p.seed, "random seed");
    app->add_option("-o,--output", p.output, "output file (CSV or report)");
    app->add_option("--set", p.sets, "override any config key: key=value")->allow_extra_args(false);
    for (std::size_t i = 0; i < flag_keys.size(); ++i) {
        app->add_option(flag_keys[i].flag, p.flag_values[i], flag_keys[i].help);
    }
    return app;
}

std::string join(std::span<const std::string> args) {
    std::string out;
    for (const auto& a : args) {
        if (!out.empty()) out += ' ';
        out += a;
    }
    return out;
}

bool from_command_line(const config::Entry& e) { return e.origin.rfind("--", 0) == 0; }

std::string what(std::string_view key, const config::Entry& e) {
    return from_command_line(e) ? e.origin : "'" + std::string(key) + "' (" + e.origin + ")";
}

RunConfig build(const Parsed& p, std::span<const std::string> args) {
    RunConfig cfg;
    cfg.command = p.command;
    cfg.preset = p.preset;
    cfg.command_line = join(args);
    if (!p.output.empty()) cfg.output = p.output;

    config::ValueMap preset_values;
    try {
        preset_values = config::preset(p.preset);
    } catch (const ConfigError& e) {
        throw UsageError(std::string("--preset: ") + e.what());
    }
    config::ValueMap file_values;
    if (!p.config_path.empty()) {
        cfg.config_path = p.config_path;
        file_values = config::load_file(p.config_path);
    }
    config::ValueMap cli_values;
    auto put = [&](const std::string& key, const std::string& value, const std::string& origin) {
        config::lookup_key(key, origin);
        cli_values.insert_or_assign(key, config::Entry{value, origin});
    };
    if (!p.flux.empty()) put("flux", p.flux, "--flux");
    if (!p.T.empty()) put("T", p.T, "--T");
    if (!p.seed.empty()) put("seed", p.seed, "--seed");
    for (std::size_t i = 0; i < flag_keys.size(); ++i) {
        if (p.flag_values[i].empty()) continue;
        std::string key = flag_keys[i].key;
        if (key == "sample_radius" && p.command != "meissner") key = "radius";
        put(key, p.flag_values[i], flag_keys[i].flag);
    }
    for (const auto& s : p.sets) {
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw UsageError("--set: expected key=value, got '" + s + "'");
        }
        auto trim = [](std::string v) {
            v.erase(0, v.find_first_not_of(" \t"));
            v.erase(v.find_last_not_of(" \t") + 1);
            return v;
        };
        put(trim(s.substr(0, eq)), trim(s.substr(eq + 1)), "--set " + trim(s.substr(0, eq)));
    }
    cfg.values = config::merge({&preset_values, &file_values, &cli_values});

    // Validate every value up front so errors name the first bad token.
    for (const auto& [key, entry] : cfg.values) {
        const auto dim = config::lookup_key(key).dimension;
        if (dim == config::Dimension::text || dim == config::Dimension::flux_range) continue;
        if (dim == config::Dimension::integer) {
            config::integer(cfg.values, key);
        } else {
            config::parse_quantity(entry.value, dim, what(key, entry));
        }
    }
    if (config::has(cfg.values, "mode")) {
        const auto& e = cfg.values.find("mode")->second;
        try {
            parse_switching_mode(e.value);
        } catch (const ConfigError& err) {
            throw UsageError(what("mode", e) + ": " + err.what());
        }
    }

    const auto& flux = cfg.values.find("flux")->second;
    const double phi0 = flux_quantum(config::quantity_or(cfg.values, "carrier_charge", pair_charge));
    cfg.flux = config::parse_range(flux.value, what("flux", flux), from_command_line(flux) ? 0.0 : phi0);
    cfg.T = config::quantity(cfg.values, "T");
    const auto seed = config::integer(cfg.values, "seed");
    if (seed < 0) {
        throw UsageError(what("seed", cfg.values.find("seed")->second) + ": seed must be non-negative");
    }
    cfg.seed = static_cast<std::uint64_t>(seed);
    return cfg;
}

// --- run helpers ---------------------------------------------------------------

using config::has;
using config::quantity;
using config::quantity_or;

Ring build_ring(const config::ValueMap& v) {
    Material mat;
    mat.T_c = quantity(v, "T_c");
    mat.lambda_L0 = quantity(v, "lambda_L0");
    mat.rho_n = quantity(v, "rho_n");
    mat.mass = quantity_or(v, "carrier_mass", pair_mass);
    mat.charge = quantity_or(v, "carrier_charge", pair_charge);
    mat.n_s0 = has(v, "n_s0") ? quantity(v, "n_s0") : london_pair_density(mat.lambda_L0, mat.mass, mat.charge);
    mat.validate();

    const double r = quantity(v, "radius");
    const double w = quantity(v, "wall_width");
    const double L = quantity(v, "inductance");
    double h = 0.0;
    if (has(v, "wall_height")) {
        h = quantity(v, "wall_height");
        if (has(v, "cross_section") &&
            std::abs(quantity(v, "cross_section") - w * h) > 1e-9 * w * h) {
            throw ConfigError("cross_section differs from wall_width * wall_height");
        }
    } else if (has(v, "cross_section")) {
        h = quantity(v, "cross_section") / w;
    } else {
        h = cross_section_for_current(quantity(v, "target_current"), 0.25, r, mat) / w;
    }
    return {make_geometry(r, w, h, L), mat};
}

EnsembleOptions ensemble_options(const config::ValueMap& v) {
    EnsembleOptions o;
    const auto n = config::integer(v, "n_max");
    if (n < 1 || n > o.n_max_limit) {
        throw ConfigError("n_max must lie in [1, " + std::to_string(o.n_max_limit) + "]");
    }
    o.n_max = static_cast<int>(n);
    return o;
}

unsigned thread_count(const config::ValueMap& v) {
    const auto n = config::integer(v, "threads");
    if (n < 0 || n > 4096) {
        throw ConfigError("threads must lie in [0, 4096]");
    }
    return static_cast<unsigned>(n);
}

SwitchingConfig switching_config(const RunConfig& cfg) {
    const auto& v = cfg.values;
    SwitchingConfig s;
    s.omega_sw = quantity(v, "omega_sw");
    s.R_B = quantity(v, "R_B");
    s.duty = quantity(v, "duty");
    s.mode = parse_switching_mode(config::text(v, "mode"));
    s.seed = cfg.seed;
    s.theta = quantity(v, "theta");
    s.dt = quantity(v, "dt");
    s.barrier_energy = quantity_or(v, "barrier_energy", 0.0);
    s.attempt_rate = quantity_or(v, "attempt_rate", 0.0);
    return s;
}

std::string metadata(const RunConfig& cfg) {
    return std::string("fluxring ") + FLUXRING_VERSION + " command=\"" + cfg.command_line +
           "\" seed=" + std::to_string(cfg.seed);
}

std::string num(double x) { return format_sci(x, 4); }

// Writes the artifact to the output file (atomically) or to `out`; returns
// the destination name for the summary line.
std::string emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.output) {
        write_file_atomic(*cfg.output, content);
        return *cfg.output;
    }
    out << content;
    return "stdout";
}

// Human-readable report: `key = value` lines after a metadata comment.
class Report {
public:
    explicit Report(const RunConfig& cfg) { text_ << "# " << metadata(cfg) << '\n'; }
    Report& add(std::string_view key, double value) { return add(key, num(value)); }
    Report& add(std::string_view key, std::string_view value) {
        text_ << key << " = " << value << '\n';
        return *this;
    }
    std::string str() const { return text_.str(); }

private:
    std::ostringstream text_;
};

template <class Values>
std::size_t argmax_abs(const Values& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[best])) best = i;
    }
    return best;
}

// Summary goes to stdout when the artifact is a file, else to stderr.
std::ostream& summary_stream(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    return cfg.output ? out : err;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Ring ring = build_ring(cfg.values);
    const auto options = ensemble_options(cfg.values);
    const auto grid = cfg.flux.linear();
    const double c_R = quantity_or(cfg.values, "c_R", 0.0) > 0.0
                           ? quantity(cfg.values, "c_R")
                           : default_resistance_scale(ring.geometry, ring.material, options);
    const auto curve = little_parks_sweep(cfg.T, grid, ring.geometry, ring.material, c_R, options,
                                          thread_count(cfg.values));
    std::ostringstream csv;
    write_csv(csv, curve, metadata(cfg));
    const auto dest = emit(cfg, csv.str(), out);

    auto& s = summary_stream(cfg, out, err);
    if (cfg.command == "sweep-current") {
        const auto i = argmax_abs(curve.mean_current);
        s << "sweep-current: " << curve.size() << " points -> " << dest << "; max|I| = "
          << num(std::abs(curve.mean_current[i])) << " A at phi = " << num(curve.phi[i]);
    } else {
        const auto i = argmax_abs(curve.delta_R);
        s << "sweep-resistance: " << curve.size() << " points -> " << dest << "; max delta_R = "
          << num(curve.delta_R[i]) << " ohm at phi = " << num(curve.phi[i]);
    }
    if (!curve.truncation_ok) s << " (ensemble truncation limit reached)";
    s << '\n';
    return exit_ok;
}

int run_icrit(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Ring ring = build_ring(cfg.values);
    const auto& g = ring.geometry;
    const auto& m = ring.material;
    const double I_c0 = quantity_or(cfg.values, "I_c0", 3.0 * max_persistent_current(g, m, cfg.T));
    const auto model = CriticalCurrentModel::shifted(quantity(cfg.values, "shift"));
    const auto grid = cfg.flux.linear();
    std::vector<double> plus(grid.size());
    std::vector<double> minus(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        plus[i] = critical_current(m.flux(grid[i]), I_c0, CurrentDirection::plus, model, g, m, cfg.T);
        minus[i] = critical_current(m.flux(grid[i]), I_c0, CurrentDirection::minus, model, g, m, cfg.T);
    }
    std::ostringstream csv;
    const std::string header[] = {"phi_norm", "Ic_plus_A", "Ic_minus_A"};
    const std::vector<double> columns[] = {grid, plus, minus};
    write_table(csv, metadata(cfg), header, columns);
    const auto dest = emit(cfg, csv.str(), out);
    const auto i = static_cast<std::size_t>(std::min_element(plus.begin(), plus.end()) - plus.begin());
    summary_stream(cfg, out, err) << "sweep-icrit: " << grid.size() << " points -> " << dest
                                  << "; min I_c,plus = " << num(plus[i]) << " A at phi = " << num(grid[i])
                                  << '\n';
    return exit_ok;
}

int run_rectify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Ring ring = build_ring(cfg.values);
    const auto options = ensemble_options(cfg.values);
    const auto sw = switching_config(cfg);
    if (sw.mode != SwitchingMode::thermal && sw.too_few_cycles()) {
        err << "warning: omega_sw * theta < 10, averages rest on few cycles\n";
    }
    const auto grid = cfg.flux.linear();
    const auto curve = vdc_sweep(sw, grid, cfg.T, ring.geometry, ring.material, options,
                                 thread_count(cfg.values));
    std::ostringstream csv;
    write_csv(csv, curve, metadata(cfg));
    const auto dest = emit(cfg, csv.str(), out);

    std::string traj_note;
    if (has(cfg.values, "trajectory")) {
        const auto path = config::text(cfg.values, "trajectory");
        const double phi = quantity(cfg.values, "phi");
        const auto run = simulate_switching(sw, ring.material.flux(phi), cfg.T, ring.geometry, ring.material,
                                            options, grid.size());
        std::ostringstream t;
        write_trajectory_csv(t, run, metadata(cfg));
        write_file_atomic(path, t.str());
        traj_note = "; trajectory at phi = " + num(phi) + " -> " + path;
    }
    const auto i = argmax_abs(curve.V_dc);
    summary_stream(cfg, out, err) << "rectify: " << grid.size() << " points -> " << dest << "; max|V_dc| = "
                                  << num(std::abs(curve.V_dc[i])) << " V at phi = " << num(curve.phi[i])
                                  << traj_note << '\n';
    return exit_ok;
}

int run_decay(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& v = cfg.values;
    const bool ring_needed = !has(v, "L") || !has(v, "I_p0");
    double L = 0.0;
    double I0 = 0.0;
    if (ring_needed) {
        const Ring ring = build_ring(v);
        const auto phi = ring.material.flux(quantity(v, "phi"));
        L = has(v, "L") ? quantity(v, "L") : total_inductance(ring.geometry, ring.material, cfg.T);
        I0 = has(v, "I_p0") ? quantity(v, "I_p0")
                            : persistent_current_state(ground_state_number(phi).n, phi, ring.geometry,
                                                       ring.material, cfg.T);
    } else {
        L = quantity(v, "L");
        I0 = quantity(v, "I_p0");
    }
    const double R = has(v, "R") ? quantity(v, "R") : quantity(v, "R_B");
    const double tau = relaxation_time(L, R);
    Report rep(cfg);
    rep.add("command", "decay")
        .add("L_H", L)
        .add("R_ohm", R)
        .add("tau_s", tau)
        .add("I_p0_A", I0)
        .add("V_B0_V", R * I0)
        .add("integral_V_dt_Vs", L * I0)
        .add("dissipated_J", 0.5 * L * I0 * I0);
    const auto dest = emit(cfg, rep.str(), out);
    summary_stream(cfg, out, err) << "decay: tau = " << num(tau) << " s -> " << dest << '\n';
    return exit_ok;
}

int run_feasibility(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& v = cfg.values;
    ParticleSpec p;
    p.size = quantity(v, "size");
    p.density = quantity(v, "density");
    p.velocity = quantity(v, "velocity");
    if (has(v, "mass")) p.explicit_mass = quantity(v, "mass");
    p.validate();

    if (has(v, "sizes")) {
        const auto& e = v.find("sizes")->second;
        const auto sizes = config::parse_range(e.value, what("sizes", e)).geometric();
        const auto sweep = feasibility_sweep(sizes, p.density);
        std::ostringstream csv;
        write_csv(csv, sweep, metadata(cfg));
        const auto dest = emit(cfg, csv.str(), out);
        summary_stream(cfg, out, err) << "feasibility: " << sizes.size() << " sizes -> " << dest << '\n';
        return exit_ok;
    }

    const double t_bound = interference_time_bound(p);
    const double T_bound = bohr_temperature_bound(p);
    const auto gap = orbit_gap(p.mass(), p.size, 0);
    const auto electron = orbit_gap(codata.m_e, quantity(v, "gap_radius"), 0);
    const double z = quantity(v, "distance");
    const auto unc = uncertainty_product(z, z / p.velocity, quantity(v, "position_inaccuracy"),
                                         quantity(v, "time_inaccuracy"), p.mass());
    Report rep(cfg);
    rep.add("command", "feasibility")
        .add("a_m", p.size)
        .add("g_kg_per_m3", p.density)
        .add("m_kg", p.mass())
        .add("t_bound_s", t_bound)
        .add("t_bound_yr", t_bound / seconds_per_year)
        .add("T_bound_K", T_bound)
        .add("orbit_gap_J", gap.energy)
        .add("orbit_gap_K", gap.temperature)
        .add("electron_orbit_gap_J", electron.energy)
        .add("electron_orbit_gap_K", electron.temperature)
        .add("uncertainty_product_m2_per_s", unc.product)
        .add("uncertainty_threshold_m2_per_s", unc.threshold)
        .add("uncertainty_violated", unc.violated ? "true" : "false");
    const auto dest = emit(cfg, rep.str(), out);
    summary_stream(cfg, out, err) << "feasibility: a = " << num(p.size) << " m, t_bound = " << num(t_bound)
                                  << " s, T_bound = " << num(T_bound) << " K -> " << dest << '\n';
    return exit_ok;
}

int run_meissner(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& v = cfg.values;
    const Ring ring = build_ring(v);
    const auto& g = ring.geometry;
    const auto& m = ring.material;
    const double B = quantity(v, "field");
    const double r = quantity(v, "sample_radius");
    const auto bulk = normalize_flux(B * std::numbers::pi * r * r, m.charge);
    const double bulk_transfer = std::abs(angular_momentum_transfer(0, bulk)) / codata.hbar;

    const auto phi = m.flux(quantity(v, "phi"));
    const auto ground = ground_state_number(phi);
    const auto regime = classify_wall(g, m, cfg.T);
    Report rep(cfg);
    rep.add("command", "meissner")
        .add("field_T", B)
        .add("sample_radius_m", r)
        .add("sample_flux_phi0", bulk.phi_norm)
        .add("per_pair_transfer_hbar", bulk_transfer)
        .add("ring_phi", phi.phi_norm)
        .add("ring_ground_n", static_cast<double>(ground.n))
        .add("ring_regime", regime ? to_string(*regime) : "crossover")
        .add("ring_per_pair_transfer_hbar", angular_momentum_transfer(ground.n, phi) / codata.hbar);
    if (regime) {
        rep.add("ring_enclosed_flux_Wb", fluxoid_balance(phi, ground.n, g, m, cfg.T, *regime));
    }
    const auto dest = emit(cfg, rep.str(), out);
    summary_stream(cfg, out, err) << "meissner: per-pair transfer = " << num(bulk_transfer) << " hbar -> "
                                  << dest << '\n';
    return exit_ok;
}

int run_report(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const auto& v = cfg.values;
    const Ring ring = build_ring(v);
    const auto& g = ring.geometry;
    const auto& m = ring.material;
    const double T = cfg.T;
    const auto phi = m.flux(quantity(v, "phi"));
    const auto ground = ground_state_number(phi);
    const double L_tot = total_inductance(g, m, T);
    const double R_B = quantity(v, "R_B");
    const double I_p = persistent_current_state(ground.n, phi, g, m, T);
    const auto regime = classify_wall(g, m, T);
    const double level = condensate_energy(1, 0.0, pair_count(g, m, T), m.mass, g.radius) / codata.k_B;

    Report rep(cfg);
    rep.add("command", "report")
        .add("flux_quantum_Wb", m.flux_quantum())
        .add("T_K", T)
        .add("radius_m", g.radius)
        .add("cross_section_m2", g.cross_section)
        .add("regime", regime ? to_string(*regime) : "crossover")
        .add("lambda_L_m", london_depth(m, T))
        .add("n_s_m3", pair_density(m, T))
        .add("N_s", pair_count(g, m, T))
        .add("L_k_H", kinetic_inductance(g, m, T))
        .add("L_tot_H", L_tot)
        .add("tau_s", relaxation_time(L_tot, R_B))
        .add("level_scale_K", level)
        .add("phi", phi.phi_norm)
        .add("I_p_A", I_p)
        .add("max_I_p_A", max_persistent_current(g, m, T));
    if (I_p != 0.0) {
        const auto moments = moment_difference(quantity(v, "loop_area"), std::abs(I_p));
        rep.add("delta_M_m_muB", moments.magnetic_bohr).add("delta_M_p_hbar", moments.angular_hbar);
    }
    const auto dest = emit(cfg, rep.str(), out);
    summary_stream(cfg, out, err) << "report: I_p = " << num(I_p) << " A, tau = "
                                  << num(relaxation_time(L_tot, R_B)) << " s -> " << dest << '\n';
    return exit_ok;
}

}  // namespace

std::span<const std::string_view> commands() { return command_names; }

RunConfig parse_config(std::span<const std::string> args) {
    Parsed p;
    auto app = make_app(p);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app->parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    try {
        return build(p, args);
    } catch (const UsageError&) {
        throw;
    } catch (const ConfigError& e) {
        throw UsageError(e.what());
    }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "sweep-current" || cfg.command == "sweep-resistance") return run_sweep(cfg, out, err);
        if (cfg.command == "sweep-icrit") return run_icrit(cfg, out, err);
        if (cfg.command == "rectify") return run_rectify(cfg, out, err);
        if (cfg.command == "decay") return run_decay(cfg, out, err);
        if (cfg.command == "feasibility") return run_feasibility(cfg, out, err);
        if (cfg.command == "meissner") return run_meissner(cfg, out, err);
        if (cfg.command == "report") return run_report(cfg, out, err);
        err << "error: unknown command '" << cfg.command << "'\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    if (std::any_of(args.begin(), args.end(), [](const std::string& a) { return a == "-h" || a == "--help"; })) {
        Parsed p;
        out << make_app(p)->help();
        return exit_ok;
    }
    if (std::any_of(args.begin(), args.end(), [](const std::string& a) { return a == "--version"; })) {
        out << "fluxring " << FLUXRING_VERSION << '\n';
        return exit_ok;
    }
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    }
    return run(cfg, out, err);
}

}  // namespace fluxring::cli
