#pragma once

// Physical constants and normalized-flux arithmetic.
//
// Everything is SI. The canonical sweep coordinate is the dimensionless flux
// phi = Phi / Phi_0 with Phi_0 = 2*pi*hbar / q for the carrier charge q.

#include <numbers>

namespace fluxring {

struct Constants {
    double hbar;  // J s
    double k_B;   // J/K
    double e;     // C
    double m_e;   // kg
    double mu_0;  // T m / A
    double mu_B;  // J/T
    double amu;   // kg
};

// CODATA 2018.
inline constexpr Constants codata{
    .hbar = 1.054571817e-34,
    .k_B = 1.380649e-23,
    .e = 1.602176634e-19,
    .m_e = 9.1093837015e-31,
    .mu_0 = 1.25663706212e-6,
    .mu_B = 9.2740100783e-24,
    .amu = 1.66053906660e-27,
};

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Cooper-pair carrier.
inline constexpr double pair_charge = 2.0 * codata.e;
inline constexpr double pair_mass = 2.0 * codata.m_e;

/// Flux quantum 2*pi*hbar/q in Wb. Throws DomainError for q <= 0.
double flux_quantum(double q);

/// A magnetic flux in both absolute and normalized form.
/// Invariant: phi_norm == phi_abs / flux_quantum(q) for the charge used to build it.
struct FluxPoint {
    double phi_abs = 0.0;   // Wb
    double phi_norm = 0.0;  // Phi / Phi_0

    /// Build from a normalized value, e.g. FluxPoint::normalized(0.25, pair_charge).
    static FluxPoint normalized(double phi_norm, double q);
};

FluxPoint normalize_flux(double phi_abs, double q);
double denormalize_flux(double phi_norm, double q);

}  // namespace fluxring
