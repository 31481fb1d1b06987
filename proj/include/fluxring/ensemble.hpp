#pragma once

// Boltzmann statistics over the permitted states of a ring and the
// Little-Parks observables derived from them.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "fluxring/ring_model.hpp"

namespace fluxring {

struct EnsembleOptions {
    int n_max = 20;              // truncation half-width around the ground state
    bool escalate = true;        // double n_max until the boundary test passes
    int n_max_limit = 1 << 20;
    double boundary_ratio = 1e-15;  // boundary weight / peak weight must be below this
};

struct ThermalEnsemble {
    double temperature = 0.0;
    FluxPoint phi;
    int n_max = 0;
    int first_n = 0;                   // quantum number of probabilities[0]
    std::vector<double> probabilities; // consecutive n starting at first_n
    bool truncation_ok = false;

    int last_n() const { return first_n + static_cast<int>(probabilities.size()) - 1; }
    /// Zero outside the support.
    double probability(int n) const;
};

/// Weights P_n ~ exp(-E_n / k_B T) over n in [c - n_max, c + n_max], c the
/// ground state; at half-integer flux the support also includes c + n_max + 1
/// so that it is symmetric about phi. Requires 0 < T < T_c.
ThermalEnsemble build_ensemble(FluxPoint phi, double T, const RingGeometry& geom, const Material& mat,
                               const EnsembleOptions& options = {});

struct EnsembleAverages {
    double n_bar = 0.0;
    double mean_current = 0.0;  // A
    double mean_v2 = 0.0;       // <(n - phi)^2>, dimensionless
};

EnsembleAverages ensemble_averages(const ThermalEnsemble& ens, const RingGeometry& geom,
                                   const Material& mat);

struct LittleParksCurve {
    std::vector<double> phi;
    std::vector<double> mean_current;
    std::vector<double> mean_v2;
    std::vector<double> delta_R;
    bool truncation_ok = true;

    std::size_t size() const { return phi.size(); }
};

/// Default c_R: makes max delta_R equal 1 Ohm at T = 0.99 T_c.
double default_resistance_scale(const RingGeometry& geom, const Material& mat,
                                const EnsembleOptions& options = {});

/// Ensemble averages on every grid point; delta_R = c_R * mean_v2. The grid
/// must be non-empty and non-decreasing. `threads` == 0 picks the hardware
/// concurrency; the result does not depend on it.
LittleParksCurve little_parks_sweep(double T, std::span<const double> grid, const RingGeometry& geom,
                                    const Material& mat, double c_R,
                                    const EnsembleOptions& options = {}, unsigned threads = 0);

/// Header row, then phi_norm, mean_current_A, mean_v2, delta_R_ohm with 9
/// significant digits. `metadata` (without the leading '#') is written first
/// when non-empty.
void write_csv(std::ostream& out, const LittleParksCurve& curve, const std::string& metadata = {});

}  // namespace fluxring
