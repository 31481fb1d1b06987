#include "fluxring/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "fluxring/csv.hpp"
#include "fluxring/errors.hpp"
#include "fluxring/rng.hpp"
#include "parallel.hpp"

namespace fluxring {

double relaxation_time(double L_tot, double R_B) {
    if (!(L_tot > 0.0) || !(R_B > 0.0)) {
        throw DomainError("relaxation_time: inductance and resistance must be positive");
    }
    return L_tot / R_B;
}

double decay_current(double t, double I_p0, double t_on, double tau) {
    if (t < t_on) {
        throw DomainError("decay_current: t precedes the switch-on time");
    }
    if (!(tau > 0.0)) {
        throw DomainError("decay_current: tau must be positive");
    }
    return I_p0 * std::exp(-(t - t_on) / tau);
}

double segment_voltage(double t, double I_p0, double t_on, double tau, double R_B) {
    return R_B * decay_current(t, I_p0, t_on, tau);
}

QuantumForce quantum_force_emf(double n_bar, FluxPoint phi, double omega_sw, double charge) {
    if (omega_sw < 0.0) {
        throw DomainError("quantum_force_emf: negative switching rate");
    }
    QuantumForce f;
    f.momentum_rate = two_pi * codata.hbar * (n_bar - phi.phi_norm) * omega_sw;
    f.emf = f.momentum_rate / charge;
    return f;
}

double dc_voltage_periodic(double omega_sw, double tau, double I_closed, double L_tot, double duty) {
    return omega_sw * L_tot * I_closed * -std::expm1(-duty / (omega_sw * tau));
}

double dc_voltage_asymptotic(double omega_sw, double tau, double I_closed, double L_tot, double R_B,
                             double duty) {
    if (!(omega_sw > 0.0) || !(tau > 0.0) || !(L_tot > 0.0) || !(R_B > 0.0) || !(duty > 0.0) ||
        !(duty < 1.0)) {
        throw DomainError("dc_voltage_asymptotic: rates, tau, L, R_B must be positive and 0 < duty < 1");
    }
    const double x = omega_sw * tau;
    if (x < 0.1) {
        return L_tot * omega_sw * I_closed;
    }
    if (x > 10.0) {
        return duty * R_B * I_closed;
    }
    return dc_voltage_periodic(omega_sw, tau, I_closed, L_tot, duty);
}

std::string_view to_string(SwitchingMode mode) {
    switch (mode) {
        case SwitchingMode::deterministic: return "deterministic";
        case SwitchingMode::poisson: return "poisson";
        case SwitchingMode::thermal: return "thermal";
    }
    return "unknown";
}

SwitchingMode parse_switching_mode(std::string_view name) {
    if (name == "deterministic") return SwitchingMode::deterministic;
    if (name == "poisson") return SwitchingMode::poisson;
    if (name == "thermal") return SwitchingMode::thermal;
    throw ConfigError("unknown switching mode '" + std::string(name) + "'");
}

void SwitchingConfig::validate() const {
    if (!(duty > 0.0 && duty < 1.0)) {
        throw ConfigError("switching: duty must lie strictly between 0 and 1");
    }
    if (!(theta > 0.0)) {
        throw ConfigError("switching: theta must be positive");
    }
    if (!(R_B > 0.0)) {
        throw ConfigError("switching: R_B must be positive");
    }
    if (mode == SwitchingMode::thermal) {
        if (!(attempt_rate > 0.0) || barrier_energy < 0.0) {
            throw ConfigError("switching: thermal mode needs attempt_rate > 0 and barrier_energy >= 0");
        }
    } else if (!(omega_sw > 0.0)) {
        throw ConfigError("switching: omega_sw must be positive");
    }
    if (dt < 0.0) {
        throw ConfigError("switching: dt must be non-negative");
    }
    if (dt > 0.0 && theta / dt + 1.0 > static_cast<double>(max_samples)) {
        throw ConfigError("switching: theta/dt exceeds the sample limit");
    }
}

namespace {

// Emits the not-yet-emitted samples of the fixed grid k*dt that precede `end`.
class Sampler {
public:
    Sampler(SwitchingRun& run, double dt, double theta) : run_(run), dt_(dt), theta_(theta) {
        if (dt_ > 0.0) {
            const auto count = static_cast<std::size_t>(std::floor(theta_ / dt_ * (1.0 + 1e-12))) + 1;
            run_.times.reserve(count);
            run_.current.reserve(count);
            run_.segment_voltage.reserve(count);
        }
    }

    template <class CurrentAt>
    void emit(double end, bool normal, double R_B, CurrentAt current_at) {
        if (dt_ <= 0.0) return;
        for (;;) {
            const double t = static_cast<double>(next_) * dt_;
            if (t >= end || t > theta_ * (1.0 + 1e-12)) break;
            const double I = current_at(t);
            run_.times.push_back(t);
            run_.current.push_back(I);
            run_.segment_voltage.push_back(normal ? R_B * I : 0.0);
            ++next_;
        }
    }

private:
    SwitchingRun& run_;
    double dt_;
    double theta_;
    std::size_t next_ = 0;
};

}  // namespace

SwitchingRun simulate_switching(const SwitchingConfig& cfg, FluxPoint phi, double T,
                                const RingGeometry& geom, const Material& mat,
                                const EnsembleOptions& options, std::uint64_t stream) {
    cfg.validate();
    const auto ens = build_ensemble(phi, T, geom, mat, options);
    const auto avg = ensemble_averages(ens, geom, mat);
    const double L = total_inductance(geom, mat, T);
    const double tau = relaxation_time(L, cfg.R_B);
    const double R = cfg.R_B;
    const double I0 = avg.mean_current;
    const double theta = cfg.theta;

    SwitchingRun run;
    run.I_closed = I0;
    run.n_bar_used = avg.n_bar;
    run.tau = tau;

    RandomStream rng(cfg.seed, stream);
    double open_rate = 0.0;
    if (cfg.mode == SwitchingMode::thermal) {
        open_rate = cfg.attempt_rate * std::min(1.0, std::exp(-cfg.barrier_energy / (codata.k_B * T)));
    }

    // Absolute (opening, re-closing) instants of cycle k that starts at t_start.
    auto next_cycle = [&](std::size_t k, double t_start) -> std::pair<double, double> {
        switch (cfg.mode) {
            case SwitchingMode::deterministic: {
                const double period = 1.0 / cfg.omega_sw;
                const double kk = static_cast<double>(k);
                return {(kk + 1.0 - cfg.duty) * period, (kk + 1.0) * period};
            }
            case SwitchingMode::poisson: {
                const double t_open = t_start + rng.exponential((1.0 - cfg.duty) / cfg.omega_sw);
                return {t_open, t_open + rng.exponential(cfg.duty / cfg.omega_sw)};
            }
            case SwitchingMode::thermal: {
                const double t_open = open_rate > 0.0 ? t_start + rng.exponential(1.0 / open_rate)
                                                      : std::numeric_limits<double>::infinity();
                return {t_open, t_open + rng.exponential(1.0 / cfg.attempt_rate)};
            }
        }
        return {theta, theta};
    };

    Sampler sampler(run, cfg.dt, theta);
    std::vector<double> cycle_v;  // \int V_B over each cycle
    std::vector<double> cycle_len;
    double int_V = 0.0;
    double int_I = 0.0;
    double t_start = 0.0;
    const double theta_hi = theta * (1.0 + 1e-12);

    const double theta_lo = theta * (1.0 - 1e-12);
    for (std::size_t k = 0; t_start < theta_lo; ++k) {
        const auto [t_open_raw, t_close_raw] = next_cycle(k, t_start);
        const double t_open = std::min(t_open_raw, theta);
        const double t_close = std::min(t_close_raw, theta);

        int_I += I0 * (t_open - t_start);
        sampler.emit(t_open, false, R, [&](double) { return I0; });

        const double span = t_close - t_open;
        const double decayed = -std::expm1(-span / tau);  // 1 - exp(-span/tau)
        const double v_area = R * I0 * tau * decayed;
        int_V += v_area;
        int_I += I0 * tau * decayed;
        run.dissipated_energy += 0.5 * R * I0 * I0 * tau * -std::expm1(-2.0 * span / tau);
        sampler.emit(t_close, true, R, [&](double t) { return I0 * std::exp(-(t - t_open) / tau); });

        cycle_v.push_back(v_area);
        cycle_len.push_back(t_close - t_start);
        if (t_close_raw <= theta_hi) {
            ++run.closings;
        }
        if (t_close_raw > theta_hi || t_open_raw >= theta) {
            // Run ends inside this cycle: sample the end point from its state.
            const bool normal = t_open_raw < theta;
            sampler.emit(std::numeric_limits<double>::infinity(), normal, R, [&](double t) {
                return normal ? I0 * std::exp(-(t - t_open) / tau) : I0;
            });
            break;
        }
        t_start = t_close_raw;
    }
    sampler.emit(std::numeric_limits<double>::infinity(), false, R, [&](double) { return I0; });

    run.cycles = cycle_v.size();
    run.V_dc = int_V / theta;
    run.I_bar = int_I / theta;
    run.omega_effective = static_cast<double>(run.closings) / theta;

    if (run.cycles > 1) {
        const double n = static_cast<double>(run.cycles);
        const double mean_len = theta / n;
        double ss = 0.0;
        for (std::size_t i = 0; i < run.cycles; ++i) {
            const double r = cycle_v[i] - run.V_dc * cycle_len[i];
            ss += r * r;
        }
        run.V_dc_stderr = std::sqrt(ss / (n * (n - 1.0))) / mean_len;
    }

    run.force_emf = quantum_force_emf(avg.n_bar, phi, run.omega_effective, mat.charge).emf;
    run.balance_residual = std::abs(run.V_dc - run.force_emf) /
                           std::max(std::abs(run.V_dc), std::numeric_limits<double>::min());
    return run;
}

VdcCurve vdc_sweep(const SwitchingConfig& cfg, std::span<const double> grid, double T,
                   const RingGeometry& geom, const Material& mat, const EnsembleOptions& options,
                   unsigned threads) {
    if (grid.empty()) {
        throw ConfigError("flux grid is empty");
    }
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw ConfigError("flux grid must be non-decreasing");
    }
    SwitchingConfig point_cfg = cfg;
    point_cfg.dt = 0.0;
    point_cfg.validate();

    const std::size_t n = grid.size();
    VdcCurve curve;
    curve.phi.assign(grid.begin(), grid.end());
    curve.V_dc.resize(n);
    curve.V_dc_stderr.resize(n);
    curve.I_bar.resize(n);
    curve.balance_residual.resize(n);
    detail::parallel_for(n, threads, [&](std::size_t i) {
        const auto run = simulate_switching(point_cfg, mat.flux(grid[i]), T, geom, mat, options, i);
        curve.V_dc[i] = run.V_dc;
        curve.V_dc_stderr[i] = run.V_dc_stderr;
        curve.I_bar[i] = run.I_bar;
        curve.balance_residual[i] = run.balance_residual;
    });
    return curve;
}

void write_trajectory_csv(std::ostream& out, const SwitchingRun& run, const std::string& metadata) {
    const std::string header[] = {"t_s", "I_A", "V_B_V"};
    const std::vector<double> columns[] = {run.times, run.current, run.segment_voltage};
    write_table(out, metadata, header, columns);
}

void write_csv(std::ostream& out, const VdcCurve& curve, const std::string& metadata) {
    const std::string header[] = {"phi_norm", "V_dc_V", "I_bar_A", "balance_residual"};
    const std::vector<double> columns[] = {curve.phi, curve.V_dc, curve.I_bar, curve.balance_residual};
    write_table(out, metadata, header, columns);
}

}  // namespace fluxring
