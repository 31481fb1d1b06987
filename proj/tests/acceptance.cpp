// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "fluxring/cli.hpp"
#include "fluxring/dynamics.hpp"
#include "fluxring/ensemble.hpp"
#include "fluxring/feasibility.hpp"
#include "fluxring/ring_model.hpp"
#include "oracle.hpp"

using namespace fluxring;

namespace {

constexpr double paper_tol = 0.30;

double rel_dev(double value, double target) { return std::abs(value - target) / std::abs(target); }

// Collects sub-checks of one criterion.
class Criterion {
public:
    void check(bool ok, const std::string& what) {
        if (!ok) {
            ok_ = false;
            failed_.push_back(what);
        }
    }
    void anchor(double value, double target, double tol, const std::string& name) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s = %.4g vs %.4g (dev %.3g%%)", name.c_str(), value, target,
                      100.0 * rel_dev(value, target));
        check(rel_dev(value, target) <= tol, buf);
        notes_.push_back(buf);
    }
    void note(const std::string& s) { notes_.push_back(s); }
    bool ok() const { return ok_; }
    std::string detail() const {
        const auto& list = ok_ ? notes_ : failed_;
        std::string out;
        for (const auto& s : list) out += (out.empty() ? "" : "; ") + s;
        return out;
    }

private:
    bool ok_ = true;
    std::vector<std::string> failed_;
    std::vector<std::string> notes_;
};

const Ring ring = aluminum_ring();
const RingGeometry& geom = ring.geometry;
const Material& mat = ring.material;

FluxPoint at(double phi) { return mat.flux(phi); }

ParticleSpec particle(double a) { return {a, default_mass_density, 1.0, std::nullopt}; }

double current_unit(double T) {
    return geom.cross_section * mat.charge * pair_density(mat, T) * velocity_quantum(geom, mat);
}

EnsembleAverages averages(double phi, double T) {
    return ensemble_averages(build_ensemble(at(phi), T, geom, mat), geom, mat);
}

Criterion flux_quantum_anchor() {
    Criterion c;
    const double phi0 = flux_quantum(pair_charge);
    c.anchor(phi0, 2.07e-15, paper_tol, "Phi_0");
    return c;
}

Criterion feasibility_anchors() {
    Criterion c;
    const std::pair<double, double> times[] = {
        {3e-9, 3.6e-7}, {60e-9, 1.0}, {1.84e-6, 3.15e7}, {10e-6, 4767 * seconds_per_year},
        {100e-6, 4.767e8 * seconds_per_year}};
    for (const auto& [a, t] : times) {
        char name[48];
        std::snprintf(name, sizeof name, "t(a=%g m)", a);
        c.anchor(interference_time_bound(particle(a)), t, paper_tol, name);
    }
    c.anchor(bohr_temperature_bound(particle(1e-9)), 3e-4, paper_tol, "T(a=1 nm)");
    c.anchor(bohr_temperature_bound(particle(60e-9)), 3.8e-13, paper_tol, "T(a=60 nm)");
    return c;
}

Criterion orbit_gap_anchors() {
    Criterion c;
    const auto bohr = orbit_gap(codata.m_e, 5e-11, 0);
    c.anchor(bohr.energy, 2e-18, paper_tol, "gap(r_B) J");
    c.anchor(bohr.temperature, 160000.0, paper_tol, "gap(r_B) K");
    const auto wide = orbit_gap(codata.m_e, 500e-9, 0);
    c.anchor(wide.energy, 2e-26, paper_tol, "gap(500 nm) J");
    c.anchor(wide.temperature, 0.0016, paper_tol, "gap(500 nm) K");
    return c;
}

Criterion moment_anchors() {
    Criterion c;
    const auto m = moment_difference(1e-12, 0.5e-6);
    auto factor2 = [&](double v, double target, const char* name) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s = %.4g (target %.4g, factor 2)", name, v, target);
        c.check(v >= target / 2.0 && v <= target * 2.0, buf);
        c.note(buf);
    };
    factor2(m.magnetic_bohr, 1e5, "dM_m/mu_B");
    factor2(m.angular_hbar, 1e5, "dM_p/hbar");
    const auto bulk = normalize_flux(0.1 * std::numbers::pi * 1.0 * 1.0, pair_charge);
    factor2(std::abs(angular_momentum_transfer(0, bulk)) / codata.hbar, 1e15, "Meissner transfer/hbar");
    return c;
}

Criterion relaxation_and_uncertainty() {
    Criterion c;
    const double tau = relaxation_time(1e-11, 0.01);
    char buf[96];
    std::snprintf(buf, sizeof buf, "tau = %.17g s", tau);
    c.check(rel_dev(tau, 1e-9) <= 2.3e-16, buf);
    c.note(buf);
    const double m = 840.0 * codata.amu;
    const auto u = uncertainty_product(3.0, 3.0 / 100.0, 1e-6, 1e-8, m);
    c.anchor(u.threshold, 0.3e-10, paper_tol, "hbar/2m");
    std::snprintf(buf, sizeof buf, "z = 3 m: product %.4g vs threshold %.4g, violated = %s", u.product, u.threshold,
                  u.violated ? "true" : "false");
    c.check(u.violated, buf);
    c.note(buf);
    return c;
}

Criterion ensemble_properties() {
    Criterion c;
    const double temps[] = {0.05, 0.3, 0.6, 0.9, 1.1, 1.188, 1.199};
    double worst_period = 0.0, worst_anti = 0.0;
    bool zero_ok = true;
    const double c_R = default_resistance_scale(geom, mat);
    for (double T : temps) {
        const double unit = current_unit(T);
        for (int i = 0; i < 100; ++i) {
            const double phi = i / 100.0 + 0.00037;
            const auto a = averages(phi, T);
            for (int k : {-2, 1, 3}) {
                const auto b = averages(phi + k, T);
                worst_period = std::max({worst_period, std::abs(a.mean_current - b.mean_current) / unit,
                                         c_R * std::abs(a.mean_v2 - b.mean_v2) /
                                             std::max(1.0, c_R * a.mean_v2)});
            }
            for (int k : {0, 1, -2}) {
                const double plus = averages(k + phi, T).mean_current;
                const double minus = averages(k - phi, T).mean_current;
                worst_anti = std::max(worst_anti, std::abs(plus + minus) / unit);
            }
        }
        for (int k = -3; k <= 3; ++k) {
            zero_ok = zero_ok && averages(k + 0.5, T).mean_current == 0.0;
        }
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "periodicity max dev %.2g", worst_period);
    c.check(worst_period <= 1e-10, buf);
    c.note(buf);
    std::snprintf(buf, sizeof buf, "antisymmetry max dev %.2g", worst_anti);
    c.check(worst_anti <= 1e-10, buf);
    c.note(buf);
    c.check(zero_ok, "half-integer mean current not exactly zero");

    std::vector<double> grid(1001);
    for (int i = 0; i <= 1000; ++i) grid[i] = i / 1000.0;
    for (double T : {0.3, 0.9, 1.188}) {
        const auto curve = little_parks_sweep(T, grid, geom, mat, c_R);
        std::size_t best = 0;
        for (std::size_t i = 1; i < grid.size(); ++i) {
            if (curve.delta_R[i] > curve.delta_R[best]) best = i;
        }
        std::snprintf(buf, sizeof buf, "delta_R argmax at phi = %.3f (T = %g K)", grid[best], T);
        c.check(best == 500, buf);
    }
    c.note("delta_R argmax at 0.5");

    const auto o = to_oracle(ring);
    double worst_oracle = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double phi = -1.3 + 0.29 * i;
        for (int j = 0; j < 10; ++j) {
            const double T = mat.T_c * (0.04 + 0.105 * j);
            const auto got = averages(phi, T);
            const auto ref = oracle::ensemble(o, phi, T, 1000);
            const double d_dev = std::abs(got.mean_current / current_unit(T) - static_cast<double>(ref.dev));
            const double d_v2 = std::abs(got.mean_v2 - static_cast<double>(ref.v2)) /
                                std::max(static_cast<double>(ref.v2), 1e-300);
            worst_oracle = std::max({worst_oracle, d_dev, got.mean_v2 == 0.0 && ref.v2 == 0 ? 0.0 : d_v2});
        }
    }
    std::snprintf(buf, sizeof buf, "oracle (N_max = 1000) max dev %.2g", worst_oracle);
    c.check(worst_oracle <= 1e-10, buf);
    c.note(buf);
    return c;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Criterion dynamics_asymptotes() {
    Criterion c;
    const double T = 0.6;
    const double L = total_inductance(geom, mat, T);
    char buf[160];

    auto config_for = [&](double x, double duty, SwitchingMode mode) {
        SwitchingConfig cfg;
        cfg.R_B = 0.01;
        cfg.duty = duty;
        cfg.mode = mode;
        cfg.omega_sw = x / (L / cfg.R_B);
        cfg.theta = 1000.0 / cfg.omega_sw;
        return cfg;
    };

    const auto slow_cfg = config_for(0.01, 0.5, SwitchingMode::deterministic);
    const auto slow = simulate_switching(slow_cfg, at(0.25), T, geom, mat);
    const double slow_ref = L * slow_cfg.omega_sw * slow.I_closed;
    std::snprintf(buf, sizeof buf, "slow V_dc dev %.2g%%", 100 * rel_dev(slow.V_dc, slow_ref));
    c.check(rel_dev(slow.V_dc, slow_ref) <= 0.01, buf);
    c.note(buf);

    const auto fast_cfg = config_for(100.0, 0.99, SwitchingMode::deterministic);
    const auto fast = simulate_switching(fast_cfg, at(0.25), T, geom, mat);
    const double fast_ref = 0.99 * fast_cfg.R_B * fast.I_closed;
    std::snprintf(buf, sizeof buf, "fast V_dc dev %.2g%%", 100 * rel_dev(fast.V_dc, fast_ref));
    c.check(rel_dev(fast.V_dc, fast_ref) <= 0.01, buf);
    c.note(buf);

    const double tau = slow.tau;
    const double I0 = slow.I_closed;
    const auto area = oracle::simpson([&](oracle::real t) {
        return static_cast<oracle::real>(segment_voltage(static_cast<double>(t), I0, 0.0, tau, slow_cfg.R_B));
    }, 0.0L, 60.0L * tau, 200000);
    const double area_dev = rel_dev(static_cast<double>(area), L * I0);
    std::snprintf(buf, sizeof buf, "int V_B dt dev %.2g", area_dev);
    c.check(area_dev <= 1e-9, buf);
    c.note(buf);

    const double per_cycle = slow.dissipated_energy / static_cast<double>(slow.cycles);
    const double heat_dev = rel_dev(per_cycle, 0.5 * L * I0 * I0);
    std::snprintf(buf, sizeof buf, "dissipation/cycle dev %.2g", heat_dev);
    c.check(heat_dev <= 1e-6, buf);
    c.note(buf);

    auto mc_cfg = config_for(1.0, 0.5, SwitchingMode::poisson);
    mc_cfg.seed = 2024;
    std::vector<double> grid(64);
    for (int i = 0; i < 64; ++i) grid[i] = i / 64.0;
    const auto curve = vdc_sweep(mc_cfg, grid, T, geom, mat);
    double mean = 0.0, var = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        mean += curve.V_dc[i] / 64.0;
        var += curve.V_dc_stderr[i] * curve.V_dc_stderr[i] / (64.0 * 64.0);
    }
    std::snprintf(buf, sizeof buf, "flux-average V_dc = %.3g (%.2f SE)", mean, std::abs(mean) / std::sqrt(var));
    c.check(std::abs(mean) <= 3.0 * std::sqrt(var), buf);
    c.note(buf);

    const auto dir = std::filesystem::temp_directory_path() / "fluxring_acceptance";
    std::filesystem::create_directories(dir);
    const std::string file = (dir / "vdc.csv").string();
    const std::vector<std::string> args{"rectify", "--mode", "poisson", "--seed", "7", "--flux", "0:1:101",
                                        "--theta", "2e-4", "-o", file};
    std::ostringstream sink;
    const int first = cli::main_entry(args, sink, sink);
    const auto a = slurp(file);
    const int second = cli::main_entry(args, sink, sink);
    const auto b = slurp(file);
    c.check(first == 0 && second == 0 && !a.empty() && a == b, "CSV not byte-identical across identical runs");
    c.note("identical seeds give byte-identical CSV");
    return c;
}

Criterion critical_current_structure() {
    Criterion c;
    const double T = 0.6;
    const double I_c0 = 3.0 * max_persistent_current(geom, mat, T);
    const auto sym = CriticalCurrentModel::symmetric();
    std::vector<double> grid(401);
    for (int i = 0; i <= 400; ++i) grid[i] = -1.0 + i / 200.0;
    bool same = true;
    std::size_t best = 0, worst = 0;
    std::vector<double> plus(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        plus[i] = critical_current(at(grid[i]), I_c0, CurrentDirection::plus, sym, geom, mat, T);
        same = same && plus[i] == critical_current(at(grid[i]), I_c0, CurrentDirection::minus, sym, geom, mat, T);
        if (plus[i] > plus[best]) best = i;
        if (plus[i] < plus[worst]) worst = i;
    }
    c.check(same, "symmetric I_c,plus != I_c,minus");
    const double frac_max = grid[best] - std::round(grid[best]);
    const double frac_min = grid[worst] - std::floor(grid[worst]);
    c.check(std::abs(frac_max) < 1e-12, "symmetric maximum not at integer flux");
    c.check(std::abs(frac_min - 0.5) < 1e-12, "symmetric minimum not at half-integer flux");
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::abs(grid[i] - std::round(grid[i])) < 1e-12) c.check(plus[i] == plus[best], "integer flux not maximal");
        if (std::abs(grid[i] - std::floor(grid[i]) - 0.5) < 1e-12)
            c.check(std::abs(plus[i] - plus[worst]) <= 1e-12 * I_c0, "half-integer flux not minimal");
    }

    const auto shifted = CriticalCurrentModel::shifted(0.5);
    double worst_dev = 0.0;
    for (double phi : grid) {
        const double p = critical_current(at(phi), I_c0, CurrentDirection::plus, shifted, geom, mat, T);
        const double m = critical_current(at(phi + 0.5), I_c0, CurrentDirection::minus, shifted, geom, mat, T);
        worst_dev = std::max(worst_dev, std::abs(p - m) / I_c0);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "shift 0.5: max |I+(phi) - I-(phi+0.5)|/I_c0 = %.2g", worst_dev);
    c.check(worst_dev <= 1e-12, buf);
    c.note(buf);
    return c;
}

Criterion two_slit() {
    Criterion c;
    TwoSlitSetup s{1.3, 0.6, 0.4, -0.9, {}};
    double lo = INFINITY, hi = -INFINITY;
    for (int k = 0; k <= 10; ++k) {
        s.phi = FluxPoint::normalized(-2.0 + 0.37 * k, codata.e);
        const auto integral = oracle::simpson([&](oracle::real d) {
            return static_cast<oracle::real>(two_slit_pattern(s, static_cast<double>(d)).probability);
        }, 0.0L, 2 * oracle::pi, 4000) / (2 * oracle::pi);
        lo = std::min(lo, static_cast<double>(integral));
        hi = std::max(hi, static_cast<double>(integral));
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "transmission spread over 11 fluxes %.2g", (hi - lo) / hi);
    c.check((hi - lo) / hi <= 1e-10, buf);
    c.note(buf);
    const double floor = (s.A1 - s.A2) * (s.A1 - s.A2);
    double min_p = INFINITY;
    for (int k = 0; k <= 100000; ++k) {
        s.phi = FluxPoint::normalized(k * 1e-5, codata.e);
        min_p = std::min(min_p, two_slit_pattern(s, 0.0).probability);
    }
    std::snprintf(buf, sizeof buf, "min P - (A1-A2)^2 = %.2g", min_p - floor);
    c.check(min_p >= floor - 1e-12, buf);
    c.note(buf);
    return c;
}

Criterion closed_form_identities() {
    Criterion c;
    double worst_spacing = 0.0;
    for (double T : {0.0, 0.4, 1.1}) {
        const double unit = pair_count(geom, mat, T) * codata.hbar * codata.hbar /
                            (2.0 * mat.mass * geom.radius * geom.radius);
        for (int n = -1000; n <= 1000; ++n) {
            const double spacing = state_energy(n + 1, at(0.0), geom, mat, T) - state_energy(n, at(0.0), geom, mat, T);
            worst_spacing = std::max(worst_spacing, rel_dev(spacing, unit * (2.0 * n + 1.0)));
        }
    }
    double worst_product = 0.0;
    for (int i = 0; i <= 70; ++i) {
        const auto p = particle(1e-10 * std::pow(10.0, i / 10.0));
        const double x = interference_time_bound(p) * bohr_temperature_bound(p) * 4.0 * std::numbers::pi *
                         codata.k_B / codata.hbar;
        worst_product = std::max(worst_product, std::abs(x - 1.0));
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "level spacing max dev %.2g; bound product max dev %.2g", worst_spacing,
                  worst_product);
    c.check(worst_spacing <= 1e-12 && worst_product <= 1e-12, buf);
    c.note(buf);
    return c;
}

}  // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const std::pair<const char*, std::function<Criterion()>> criteria[] = {
        {"flux quantum", flux_quantum_anchor},
        {"feasibility anchors", feasibility_anchors},
        {"orbit gaps", orbit_gap_anchors},
        {"moment anchors", moment_anchors},
        {"relaxation and uncertainty", relaxation_and_uncertainty},
        {"ensemble properties", ensemble_properties},
        {"dynamics asymptotes", dynamics_asymptotes},
        {"critical current", critical_current_structure},
        {"two-slit", two_slit},
        {"level spacing and bound product", closed_form_identities},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        const auto c = fn();
        failed += c.ok() ? 0 : 1;
        std::printf("%s %2d %s: %s\n", c.ok() ? "PASS" : "FAIL", index, name, c.detail().c_str());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%d/%d criteria passed in %.1f s\n", index - failed, index, seconds);
    return failed;
}
