#include "fluxring/feasibility.hpp"

#include <cmath>
#include <ostream>

#include "fluxring/csv.hpp"
#include "fluxring/errors.hpp"

namespace fluxring {

void ParticleSpec::validate() const {
    if (!(size > 0.0) || !(density > 0.0) || !(velocity > 0.0)) {
        throw ConfigError("particle: size, density and velocity must be positive");
    }
    if (explicit_mass && !(*explicit_mass > 0.0)) {
        throw ConfigError("particle: mass must be positive");
    }
}

double interference_time_bound(const ParticleSpec& p) {
    p.validate();
    return p.density / (two_pi * codata.hbar) * std::pow(p.size, 5);
}

double bohr_temperature_bound(const ParticleSpec& p) {
    p.validate();
    return codata.hbar * codata.hbar / (2.0 * p.density * codata.k_B * std::pow(p.size, 5));
}

OrbitGap orbit_gap(double mass, double radius, int n) {
    if (!(mass > 0.0) || !(radius > 0.0) || n < 0) {
        throw DomainError("orbit_gap: need m > 0, r > 0, n >= 0");
    }
    const double e = codata.hbar * codata.hbar / (2.0 * mass * radius * radius) * (2.0 * n + 1.0);
    return {e, e / codata.k_B};
}

MomentDifference moment_difference(double area, double I_p) {
    if (!(area > 0.0) || !(I_p > 0.0)) {
        throw DomainError("moment_difference: area and current must be positive");
    }
    const double dm = 2.0 * area * I_p;
    const double dp = 2.0 * codata.m_e / codata.e * dm;
    return {dm / codata.mu_B, dp / codata.hbar};
}

TwoSlitResult two_slit_pattern(const TwoSlitSetup& setup, double delta_geo) {
    if (setup.A1 < 0.0 || setup.A2 < 0.0) {
        throw DomainError("two_slit_pattern: amplitudes must be non-negative");
    }
    const double phase =
        delta_geo + setup.path_phase_1 - setup.path_phase_2 + two_pi * setup.phi.phi_norm;
    const double base = setup.A1 * setup.A1 + setup.A2 * setup.A2;
    return {base + 2.0 * setup.A1 * setup.A2 * std::cos(phase), base};
}

UncertaintyEstimate uncertainty_product(double z, double t, double dz, double dt, double mass) {
    if (!(dz > 0.0) || !(dt > 0.0) || !(mass > 0.0)) {
        throw DomainError("uncertainty_product: inaccuracies and mass must be positive");
    }
    if (!(z / dz > 10.0) || !(t / dt > 10.0)) {
        throw DomainError("uncertainty_product: need z > 10 dz and t > 10 dt");
    }
    const double v = z / t;
    UncertaintyEstimate u;
    u.product = dz * v * (dz / z + dt / t);
    u.threshold = codata.hbar / (2.0 * mass);
    u.violated = u.product < u.threshold;
    return u;
}

SizeSweep feasibility_sweep(std::span<const double> sizes, double density) {
    SizeSweep out;
    for (double a : sizes) {
        const ParticleSpec p{a, density, 1.0, std::nullopt};
        out.size.push_back(a);
        out.time_bound.push_back(interference_time_bound(p));
        out.temperature_bound.push_back(bohr_temperature_bound(p));
    }
    return out;
}

void write_csv(std::ostream& out, const SizeSweep& sweep, const std::string& metadata) {
    const std::string header[] = {"a_m", "t_bound_s", "T_bound_K"};
    const std::vector<double> columns[] = {sweep.size, sweep.time_bound, sweep.temperature_bound};
    write_table(out, metadata, header, columns);
}

}  // namespace fluxring
