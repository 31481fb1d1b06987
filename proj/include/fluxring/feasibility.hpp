#pragma once

// Closed-form observability bounds for quantum behaviour of massive particles,
// plus the two-slit Aharonov-Bohm pattern and a time-of-flight uncertainty
// estimator.

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fluxring/quantities.hpp"

namespace fluxring {

inline constexpr double default_mass_density = 1e3;  // kg/m^3
inline constexpr double seconds_per_year = 365.0 * 24.0 * 3600.0;

struct ParticleSpec {
    double size = 0.0;                      // a, m
    double density = default_mass_density;  // g, kg/m^3
    double velocity = 1.0;                  // m/s
    std::optional<double> explicit_mass;    // kg; defaults to g a^3

    double mass() const { return explicit_mass ? *explicit_mass : density * size * size * size; }
    /// ConfigError unless a, g, v (and an explicit mass) are positive.
    void validate() const;
};

/// Minimum duration of a two-slit experiment with particles of size a,
/// t > (g / 2 pi hbar) a^5. Slit width and spacing are taken equal to a.
/// The velocity cancels: L = a^2 / lambda_dB and t = L / v.
double interference_time_bound(const ParticleSpec& p);

/// Highest temperature at which the ring spectrum of a particle of size a is
/// resolvable: hbar^2 / (2 g k_B a^5), taking the ring radius equal to a.
double bohr_temperature_bound(const ParticleSpec& p);

struct OrbitGap {
    double energy = 0.0;       // J
    double temperature = 0.0;  // K
};

/// hbar^2 / (2 m r^2) (2n + 1) between states n and n+1 of a particle on a ring.
OrbitGap orbit_gap(double mass, double radius, int n);

struct MomentDifference {
    double magnetic_bohr = 0.0;   // Delta M_m / mu_B
    double angular_hbar = 0.0;    // Delta M_p / hbar
};

/// Two states of a loop of area S carrying +/-I_p: Delta M_m = 2 S I_p and
/// Delta M_p = (2 m_e / e) Delta M_m.
MomentDifference moment_difference(double area, double I_p);

struct TwoSlitSetup {
    double A1 = 1.0;
    double A2 = 1.0;
    double path_phase_1 = 0.0;  // rad
    double path_phase_2 = 0.0;  // rad
    FluxPoint phi;              // enclosed flux, normalized for charge e
};

struct TwoSlitResult {
    double probability = 0.0;   // P at the given geometric phase
    double transmission = 0.0;  // P averaged over one fringe period
};

/// P = A1^2 + A2^2 + 2 A1 A2 cos(delta_geo + path_phase_1 - path_phase_2 + 2 pi phi).
TwoSlitResult two_slit_pattern(const TwoSlitSetup& setup, double delta_geo);

struct UncertaintyEstimate {
    double product = 0.0;    // dz * dv_z, m^2/s
    double threshold = 0.0;  // hbar / 2m, m^2/s
    bool violated = false;   // product < threshold
};

/// Time-of-flight velocity measurement over distance z in time t with
/// inaccuracies dz, dt: dv_z = v_z (dz/z + dt/t). Requires z/dz > 10 and
/// t/dt > 10 (DomainError otherwise).
UncertaintyEstimate uncertainty_product(double z, double t, double dz, double dt, double mass);

struct SizeSweep {
    std::vector<double> size;
    std::vector<double> time_bound;
    std::vector<double> temperature_bound;
};

/// Both bounds on a list of particle sizes with common density.
SizeSweep feasibility_sweep(std::span<const double> sizes, double density = default_mass_density);

/// Columns a_m, t_bound_s, T_bound_K.
void write_csv(std::ostream& out, const SizeSweep& sweep, const std::string& metadata = {});

}  // namespace fluxring
