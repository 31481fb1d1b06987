#pragma once

// Static model of a superconducting loop: temperature dependence of the
// condensate, the permitted (quantized) states with their velocities, energies
// and currents, fluxoid quantization in the three wall regimes, screening and
// angular-momentum bookkeeping, and the critical-current oscillation.

#include <optional>
#include <string_view>

#include "fluxring/quantities.hpp"

namespace fluxring {

struct RingGeometry {
    double radius = 0.0;         // m
    double cross_section = 0.0;  // wall cross-section s, m^2
    double wall_width = 0.0;     // m
    double wall_height = 0.0;    // m
    double inductance = 0.0;     // geometric inductance L_geo, H

    double circumference() const { return two_pi * radius; }
    double volume() const { return cross_section * circumference(); }

    /// Throws ConfigError unless all fields are positive and s == w*h within 1e-9.
    void validate() const;
};

/// Geometry with s = w*h.
RingGeometry make_geometry(double radius, double wall_width, double wall_height, double inductance);

struct Material {
    double T_c = 0.0;        // K
    double n_s0 = 0.0;       // pair density at T = 0, m^-3
    double lambda_L0 = 0.0;  // London depth at T = 0, m
    double rho_n = 0.0;      // normal-state resistivity, Ohm m
    double mass = pair_mass;
    double charge = pair_charge;

    void validate() const;
    double flux_quantum() const { return fluxring::flux_quantum(charge); }
    FluxPoint flux(double phi_norm) const { return FluxPoint::normalized(phi_norm, charge); }
};

struct Ring {
    RingGeometry geometry;
    Material material;
};

/// Pair density that makes the London relation lambda^2 = m / (mu_0 q^2 n_s) hold.
double london_pair_density(double lambda_L, double mass, double charge);

/// Wall cross-section for which the ground-state current at zero temperature
/// and flux `phi` has magnitude `target_current`.
double cross_section_for_current(double target_current, double phi, double radius, const Material& mat);

/// Aluminium loop preset: T_c = 1.2 K,
/// lambda_L(0) = 50 nm, r = 1 um, L_geo = 1e-11 H, |I_p(phi = 1/4)| = 0.5 uA.
/// n_s0 follows from the London relation and the wall height from the
/// current target (wall width 10 nm, narrow-wall regime).
Ring aluminum_ring();

// --- condensate --------------------------------------------------------------

/// n_s0 (1 - T/T_c) below T_c, zero above. Negative T is a DomainError.
double pair_density(const Material& mat, double T);

/// lambda_L0 (1 - T/T_c)^(-1/2). Throws DomainError at T >= T_c.
double london_depth(const Material& mat, double T);

/// Number of pairs N_s = V n_s(T). Throws NoCondensateError at T >= T_c.
double pair_count(const RingGeometry& geom, const Material& mat, double T);

/// mu_0 lambda_L^2 l / s.
double kinetic_inductance(const RingGeometry& geom, const Material& mat, double T);
double total_inductance(const RingGeometry& geom, const Material& mat, double T);

/// rho_n * length / s.
double normal_resistance(const RingGeometry& geom, const Material& mat, double length);

// --- permitted states --------------------------------------------------------

struct PermittedState {
    int n = 0;
    double velocity = 0.0;  // m/s
    double energy = 0.0;    // J
    double current = 0.0;   // A
};

/// 2 pi hbar / (l m): velocity step between neighbouring permitted states.
double velocity_quantum(const RingGeometry& geom, const Material& mat);

/// (2 pi hbar / (l m)) (n - phi).
double permitted_velocity(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat);

/// Kinetic energy of `pairs` particles of mass m on a ring of radius r that
/// share quantum number n: pairs * hbar^2/(2 m r^2) * (n - phi)^2.
double condensate_energy(int n, double phi_norm, double pairs, double mass, double radius);

/// condensate_energy with N_s = V n_s(T). Zero at n == phi.
double state_energy(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat, double T);

/// s q n_s(T) v_n.
double persistent_current_state(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat,
                                double T);

PermittedState permitted_state(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat,
                               double T);

struct GroundState {
    int n = 0;
    bool degenerate = false;  // phi is a half-integer; n and n+1 tie
};

/// Nearest integer to phi. At half-integers returns the lower of the two and
/// flags the degeneracy.
GroundState ground_state_number(FluxPoint phi);

// --- fluxoid quantization ----------------------------------------------------

enum class FluxoidRegime { narrow_wall, wide_wall_with_hole, wide_wall_no_hole };

std::string_view to_string(FluxoidRegime regime);

/// Wall-width thresholds in units of lambda_L(T): narrow below `narrow`,
/// wide above `wide`, unclassified in between.
struct RegimeThresholds {
    double narrow = 1.0 / 3.0;
    double wide = 3.0;
};

/// Regime implied by the wall width at temperature T, or nullopt in the
/// crossover zone. A wide wall is reported as wide_wall_with_hole.
std::optional<FluxoidRegime> classify_wall(const RingGeometry& geom, const Material& mat, double T,
                                           RegimeThresholds thresholds = {});

/// Enclosed flux (Wb) satisfying mu_0 \oint lambda^2 j_s + Phi = n Phi_0:
///   wide_wall_with_hole: n Phi_0 (j_s = 0 on the deep contour)
///   wide_wall_no_hole:   0 (n is forced to 0; Meissner expulsion)
///   narrow_wall:         n Phi_0 - L_k I_n(phi)
/// Throws ConfigError if the wall width contradicts the regime.
double fluxoid_balance(FluxPoint phi, int n, const RingGeometry& geom, const Material& mat, double T,
                       FluxoidRegime regime, RegimeThresholds thresholds = {});

struct SelfConsistentFlux {
    FluxPoint total;       // applied + L_geo I
    double current = 0.0;  // A
    int iterations = 0;
};

/// Fixed-point solution of Phi = Phi_applied + L_geo I_n(Phi) for a narrow
/// wall. Converged when successive iterates differ by less than tol * Phi_0.
/// Throws DomainError if max_iterations is exhausted.
SelfConsistentFlux solve_self_consistent_flux(FluxPoint applied, int n, const RingGeometry& geom,
                                              const Material& mat, double T, double tol = 1e-12,
                                              int max_iterations = 100);

/// j0 exp(-depth / lambda_L).
double screening_current_density(double depth, double j0, double lambda_L);

// --- angular momentum ----------------------------------------------------------

/// 2 pi hbar (n - phi): angular momentum given to each pair when the wave
/// function closes in state n at flux phi.
double angular_momentum_transfer(int n, FluxPoint phi);

/// Per-pair transfer times N_s.
double angular_momentum_transfer_total(int n, FluxPoint phi, const RingGeometry& geom,
                                       const Material& mat, double T);

// --- critical current ----------------------------------------------------------

enum class CurrentDirection { plus, minus };

/// Symmetric model when shift == 0; otherwise the measured curves are the
/// symmetric curve with arguments displaced by -/+ shift/2.
struct CriticalCurrentModel {
    double shift = 0.0;  // delta phi

    static CriticalCurrentModel symmetric() { return {}; }
    static CriticalCurrentModel shifted(double delta_phi) { return {delta_phi}; }
};

/// I_c0 - 2 |I_p(phi -/+ shift/2)| with I_p the ground-state persistent current.
/// Requires I_c0 > 2 max|I_p| and |shift/2| <= 0.25 (DomainError otherwise).
double critical_current(FluxPoint phi, double I_c0, CurrentDirection direction,
                        CriticalCurrentModel model, const RingGeometry& geom, const Material& mat,
                        double T);

/// max over phi of |I_p|, attained at half-integer flux.
double max_persistent_current(const RingGeometry& geom, const Material& mat, double T);

}  // namespace fluxring
