#include "fluxring/ring_model.hpp"

#include <cmath>
#include <string>

#include "fluxring/errors.hpp"

namespace fluxring {

namespace {

void require_condensate(const Material& mat, double T) {
    if (T < 0.0) {
        throw DomainError("temperature must be non-negative");
    }
    if (T >= mat.T_c) {
        throw NoCondensateError("no condensate at T >= T_c (T = " + std::to_string(T) + " K)");
    }
}

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

}  // namespace

void RingGeometry::validate() const {
    if (!positive(radius) || !positive(cross_section) || !positive(wall_width) ||
        !positive(wall_height) || !positive(inductance)) {
        throw ConfigError("ring geometry: radius, cross-section, wall width/height and "
                          "inductance must all be positive");
    }
    const double wh = wall_width * wall_height;
    if (std::abs(wh - cross_section) > 1e-9 * cross_section) {
        throw ConfigError("ring geometry: cross_section differs from wall_width * wall_height");
    }
}

RingGeometry make_geometry(double radius, double wall_width, double wall_height, double inductance) {
    RingGeometry g{radius, wall_width * wall_height, wall_width, wall_height, inductance};
    g.validate();
    return g;
}

void Material::validate() const {
    if (!positive(T_c) || !positive(n_s0) || !positive(lambda_L0) || !positive(rho_n) ||
        !positive(mass) || !positive(charge)) {
        throw ConfigError("material: all parameters must be positive");
    }
}

double london_pair_density(double lambda_L, double mass, double charge) {
    if (!positive(lambda_L) || !positive(mass) || !positive(charge)) {
        throw DomainError("london_pair_density: arguments must be positive");
    }
    return mass / (codata.mu_0 * charge * charge * lambda_L * lambda_L);
}

double cross_section_for_current(double target_current, double phi, double radius,
                                 const Material& mat) {
    const double offset = std::abs(ground_state_number(FluxPoint{0.0, phi}).n - phi);
    if (!positive(target_current) || !positive(offset) || !positive(radius)) {
        throw DomainError("cross_section_for_current: need a positive current target at non-integer flux");
    }
    const double v = codata.hbar / (radius * mat.mass) * offset;
    return target_current / (mat.charge * mat.n_s0 * v);
}

Ring aluminum_ring() {
    Material mat;
    mat.T_c = 1.2;
    mat.lambda_L0 = 50e-9;
    mat.rho_n = 1.0e-8;
    mat.n_s0 = london_pair_density(mat.lambda_L0, mat.mass, mat.charge);

    const double radius = 1e-6;
    const double width = 10e-9;
    const double s = cross_section_for_current(0.5e-6, 0.25, radius, mat);
    Ring ring{make_geometry(radius, width, s / width, 1e-11), mat};
    ring.material.validate();
    return ring;
}

double pair_density(const Material& mat, double T) {
    if (T < 0.0) {
        throw DomainError("temperature must be non-negative");
    }
    if (T >= mat.T_c) {
        return 0.0;
    }
    return mat.n_s0 * (1.0 - T / mat.T_c);
}

double london_depth(const Material& mat, double T) {
    if (T < 0.0) {
        throw DomainError("temperature must be non-negative");
    }
    if (T >= mat.T_c) {
        throw DomainError("London depth diverges at T >= T_c");
    }
    return mat.lambda_L0 / std::sqrt(1.0 - T / mat.T_c);
}

double pair_count(const RingGeometry& geom, const Material& mat, double T) {
    require_condensate(mat, T);
    return geom.volume() * pair_density(mat, T);
}

double kinetic_inductance(const RingGeometry& geom, const Material& mat, double T) {
    const double lambda = london_depth(mat, T);
    return codata.mu_0 * lambda * lambda * geom.circumference() / geom.cross_section;
}

double total_inductance(const RingGeometry& geom, const Material& mat, double T) {
    return geom.inductance + kinetic_inductance(geom, mat, T);
}

double normal_resistance(const RingGeometry& geom, const Material& mat, double length) {
    return mat.rho_n * length / geom.cross_section;
}

double velocity_quantum(const RingGeometry& geom, const Material& mat) {
    return two_pi * codata.hbar / (geom.circumference() * mat.mass);
}

double permitted_velocity(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat) {
    return velocity_quantum(geom, mat) * (n - phi.phi_norm);
}

double condensate_energy(int n, double phi_norm, double pairs, double mass, double radius) {
    const double d = n - phi_norm;
    return pairs * codata.hbar * codata.hbar / (2.0 * mass * radius * radius) * d * d;
}

double state_energy(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat, double T) {
    return condensate_energy(n, phi.phi_norm, pair_count(geom, mat, T), mat.mass, geom.radius);
}

double persistent_current_state(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat,
                                double T) {
    require_condensate(mat, T);
    return geom.cross_section * mat.charge * pair_density(mat, T) *
           permitted_velocity(n, phi, geom, mat);
}

PermittedState permitted_state(int n, FluxPoint phi, const RingGeometry& geom, const Material& mat,
                               double T) {
    return {n, permitted_velocity(n, phi, geom, mat), state_energy(n, phi, geom, mat, T),
            persistent_current_state(n, phi, geom, mat, T)};
}

GroundState ground_state_number(FluxPoint phi) {
    const double lower = std::floor(phi.phi_norm);
    const double frac = phi.phi_norm - lower;
    if (frac < 0.5) {
        return {static_cast<int>(lower), false};
    }
    if (frac > 0.5) {
        return {static_cast<int>(lower) + 1, false};
    }
    return {static_cast<int>(lower), true};
}

std::string_view to_string(FluxoidRegime regime) {
    switch (regime) {
        case FluxoidRegime::narrow_wall: return "narrow_wall";
        case FluxoidRegime::wide_wall_with_hole: return "wide_wall_with_hole";
        case FluxoidRegime::wide_wall_no_hole: return "wide_wall_no_hole";
    }
    return "unknown";
}

std::optional<FluxoidRegime> classify_wall(const RingGeometry& geom, const Material& mat, double T,
                                           RegimeThresholds thresholds) {
    const double lambda = london_depth(mat, T);
    if (geom.wall_width < thresholds.narrow * lambda) {
        return FluxoidRegime::narrow_wall;
    }
    if (geom.wall_width > thresholds.wide * lambda) {
        return FluxoidRegime::wide_wall_with_hole;
    }
    return std::nullopt;
}

double fluxoid_balance(FluxPoint phi, int n, const RingGeometry& geom, const Material& mat, double T,
                       FluxoidRegime regime, RegimeThresholds thresholds) {
    const auto actual = classify_wall(geom, mat, T, thresholds);
    const bool narrow = actual == FluxoidRegime::narrow_wall;
    const bool wide = actual == FluxoidRegime::wide_wall_with_hole;
    const bool expects_narrow = regime == FluxoidRegime::narrow_wall;
    if ((expects_narrow && !narrow) || (!expects_narrow && !wide)) {
        throw ConfigError("fluxoid regime " + std::string(to_string(regime)) +
                          " is inconsistent with wall width " + std::to_string(geom.wall_width) +
                          " m at lambda_L = " + std::to_string(london_depth(mat, T)) + " m");
    }
    switch (regime) {
        case FluxoidRegime::wide_wall_with_hole:
            return n * mat.flux_quantum();
        case FluxoidRegime::wide_wall_no_hole:
            return 0.0;
        case FluxoidRegime::narrow_wall:
            return n * mat.flux_quantum() -
                   kinetic_inductance(geom, mat, T) * persistent_current_state(n, phi, geom, mat, T);
    }
    return 0.0;
}

SelfConsistentFlux solve_self_consistent_flux(FluxPoint applied, int n, const RingGeometry& geom,
                                              const Material& mat, double T, double tol,
                                              int max_iterations) {
    const double phi0 = mat.flux_quantum();
    FluxPoint current_flux = applied;
    for (int it = 1; it <= max_iterations; ++it) {
        const double I = persistent_current_state(n, current_flux, geom, mat, T);
        const double next = applied.phi_abs + geom.inductance * I;
        const double step = std::abs(next - current_flux.phi_abs);
        current_flux = normalize_flux(next, mat.charge);
        if (step < tol * phi0) {
            return {current_flux, persistent_current_state(n, current_flux, geom, mat, T), it};
        }
    }
    throw DomainError("self-consistent flux did not converge in " + std::to_string(max_iterations) +
                      " iterations");
}

double screening_current_density(double depth, double j0, double lambda_L) {
    if (depth < 0.0 || !positive(lambda_L)) {
        throw DomainError("screening_current_density: need depth >= 0 and lambda_L > 0");
    }
    return j0 * std::exp(-depth / lambda_L);
}

double angular_momentum_transfer(int n, FluxPoint phi) {
    return two_pi * codata.hbar * (n - phi.phi_norm);
}

double angular_momentum_transfer_total(int n, FluxPoint phi, const RingGeometry& geom,
                                       const Material& mat, double T) {
    return pair_count(geom, mat, T) * angular_momentum_transfer(n, phi);
}

double max_persistent_current(const RingGeometry& geom, const Material& mat, double T) {
    return std::abs(persistent_current_state(0, mat.flux(0.5), geom, mat, T));
}

double critical_current(FluxPoint phi, double I_c0, CurrentDirection direction,
                        CriticalCurrentModel model, const RingGeometry& geom, const Material& mat,
                        double T) {
    if (std::abs(model.shift / 2.0) > 0.25) {
        throw DomainError("critical-current shift |delta_phi/2| exceeds the observed bound 0.25");
    }
    if (!(I_c0 > 2.0 * max_persistent_current(geom, mat, T))) {
        throw DomainError("I_c0 must exceed twice the maximum persistent current");
    }
    const double half = model.shift / 2.0;
    const double arg = direction == CurrentDirection::plus ? phi.phi_norm - half : phi.phi_norm + half;
    const FluxPoint shifted = mat.flux(arg);
    const int n = ground_state_number(shifted).n;
    return I_c0 - 2.0 * std::abs(persistent_current_state(n, shifted, geom, mat, T));
}

}  // namespace fluxring
