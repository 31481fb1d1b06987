#pragma once

#include "fluxring/ring_model.hpp"
#include "oracle.hpp"

inline oracle::Ring to_oracle(const fluxring::Ring& ring) {
    const auto& g = ring.geometry;
    const auto& m = ring.material;
    return {g.radius, g.cross_section, m.T_c, m.n_s0, m.lambda_L0, m.mass, m.charge, g.inductance};
}
