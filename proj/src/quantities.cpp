#include "fluxring/quantities.hpp"

#include "fluxring/errors.hpp"

namespace fluxring {

namespace {

void require_positive_charge(double q) {
    if (!(q > 0.0)) {
        throw DomainError("carrier charge must be positive");
    }
}

}  // namespace

double flux_quantum(double q) {
    require_positive_charge(q);
    return two_pi * codata.hbar / q;
}

FluxPoint FluxPoint::normalized(double phi_norm, double q) {
    return FluxPoint{denormalize_flux(phi_norm, q), phi_norm};
}

FluxPoint normalize_flux(double phi_abs, double q) {
    return FluxPoint{phi_abs, phi_abs / flux_quantum(q)};
}

double denormalize_flux(double phi_norm, double q) {
    return phi_norm * flux_quantum(q);
}

}  // namespace fluxring
