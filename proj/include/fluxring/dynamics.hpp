#pragma once

// Connectivity switching of a ring segment B between the superconducting
// (closed wave function) and normal (open) states.
//
// While closed, the current is pinned at the ensemble value I_p(n_bar, phi).
// While open, it decays through the segment resistance R_B with
// tau = L_tot / R_B and drives the segment voltage V_B = R_B I(t). Each
// re-closing resets the current instantaneously to I_p(n_bar, phi); the
// momentum restored per closing, times the closing rate, is the quantum force.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fluxring/ensemble.hpp"

namespace fluxring {

/// L_tot / R_B. DomainError for non-positive inputs.
double relaxation_time(double L_tot, double R_B);

/// I_p0 exp(-(t - t_on) / tau), for t >= t_on.
double decay_current(double t, double I_p0, double t_on, double tau);

/// R_B * decay_current(...).
double segment_voltage(double t, double I_p0, double t_on, double tau, double R_B);

struct QuantumForce {
    double momentum_rate = 0.0;  // \oint dl F_q per pair, N m
    double emf = 0.0;            // momentum_rate / q = Phi_0 (n_bar - phi) omega_sw, V
};

QuantumForce quantum_force_emf(double n_bar, FluxPoint phi, double omega_sw, double charge = pair_charge);

/// Exact dc voltage of a strictly periodic switching train with normal
/// fraction `duty`: omega L I (1 - exp(-duty / (omega tau))).
double dc_voltage_periodic(double omega_sw, double tau, double I_closed, double L_tot, double duty);

/// L omega I for omega tau < 0.1, duty R_B I for omega tau > 10, the exact
/// periodic formula in between.
double dc_voltage_asymptotic(double omega_sw, double tau, double I_closed, double L_tot, double R_B,
                             double duty);

enum class SwitchingMode {
    deterministic,  // period 1/omega_sw, normal for duty/omega_sw of it
    poisson,        // exponential closed/open intervals, means (1-duty)/omega_sw and duty/omega_sw
    thermal,        // openings at attempt_rate * min(1, exp(-dF/k_B T)), closings at attempt_rate
};

std::string_view to_string(SwitchingMode mode);
SwitchingMode parse_switching_mode(std::string_view name);

struct SwitchingConfig {
    double omega_sw = 1e6;  // closings per second
    double R_B = 0.01;      // Ohm
    double duty = 0.5;
    SwitchingMode mode = SwitchingMode::deterministic;
    std::uint64_t seed = 1;
    double theta = 1e-3;  // s
    double dt = 0.0;      // trajectory sampling step; 0 records no samples
    double barrier_energy = 0.0;  // dF_GL, J (thermal mode)
    double attempt_rate = 0.0;    // 1/s (thermal mode)
    std::size_t max_samples = 10'000'000;

    /// ConfigError for a duty outside (0, 1), non-positive theta, rate or
    /// R_B, negative dt, or too many samples.
    void validate() const;
    /// omega_sw * theta < 10: averages are dominated by a handful of cycles.
    bool too_few_cycles() const { return omega_sw * theta < 10.0; }
};

struct SwitchingRun {
    std::vector<double> times;            // s
    std::vector<double> current;          // A
    std::vector<double> segment_voltage;  // V

    double V_dc = 0.0;         // (1/theta) \int V_B dt
    double V_dc_stderr = 0.0;  // ratio-estimator standard error over cycles
    double I_bar = 0.0;        // (1/theta) \int I dt
    double I_closed = 0.0;     // I_p(n_bar, phi)
    double n_bar_used = 0.0;
    double tau = 0.0;
    double omega_effective = 0.0;  // closings / theta
    double force_emf = 0.0;        // Phi_0 (n_bar - phi) omega_effective
    double balance_residual = 0.0; // |V_dc - force_emf| / max(|V_dc|, tiny)
    double dissipated_energy = 0.0;  // \int I^2 R_B dt, J
    std::size_t closings = 0;
    std::size_t cycles = 0;
};

/// Time-domain run at flux phi and temperature T (< T_c). `stream` selects
/// the random substream; identical (cfg, stream) give bit-identical runs.
SwitchingRun simulate_switching(const SwitchingConfig& cfg, FluxPoint phi, double T,
                                const RingGeometry& geom, const Material& mat,
                                const EnsembleOptions& options = {}, std::uint64_t stream = 0);

struct VdcCurve {
    std::vector<double> phi;
    std::vector<double> V_dc;
    std::vector<double> V_dc_stderr;
    std::vector<double> I_bar;
    std::vector<double> balance_residual;

    std::size_t size() const { return phi.size(); }
};

/// simulate_switching on every grid point, stream = point index, no samples.
VdcCurve vdc_sweep(const SwitchingConfig& cfg, std::span<const double> grid, double T,
                   const RingGeometry& geom, const Material& mat, const EnsembleOptions& options = {},
                   unsigned threads = 0);

/// Columns t_s, I_A, V_B_V.
void write_trajectory_csv(std::ostream& out, const SwitchingRun& run, const std::string& metadata = {});
/// Columns phi_norm, V_dc_V, I_bar_A, balance_residual.
void write_csv(std::ostream& out, const VdcCurve& curve, const std::string& metadata = {});

}  // namespace fluxring
