#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fluxring/errors.hpp"
#include "fluxring/feasibility.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace fluxring;

namespace {

ParticleSpec particle(double a) { return {a, default_mass_density, 1.0, std::nullopt}; }

double t_ref(double a) {
    return static_cast<double>(1e3L / (2 * oracle::pi * oracle::hbar) * std::pow(static_cast<oracle::real>(a), 5));
}

double T_ref(double a) {
    return static_cast<double>(oracle::hbar * oracle::hbar /
                               (2 * 1e3L * oracle::kB * std::pow(static_cast<oracle::real>(a), 5)));
}

}  // namespace

TEST_CASE("interference time bound") {
    for (double a : {3e-9, 60e-9, 1.84e-6, 10e-6, 100e-6}) {
        CHECK(interference_time_bound(particle(a)) == doctest::Approx(t_ref(a)).epsilon(1e-12));
    }
    CHECK(interference_time_bound(particle(3e-9)) == doctest::Approx(3.6e-7).epsilon(0.3));
    CHECK(interference_time_bound(particle(60e-9)) == doctest::Approx(1.0).epsilon(0.3));
    CHECK(interference_time_bound(particle(1.84e-6)) == doctest::Approx(3.15e7).epsilon(0.3));
    CHECK_THROWS_AS(interference_time_bound(particle(0.0)), ConfigError);
}

TEST_CASE("velocity does not enter the time bound") {
    auto p = particle(60e-9);
    const double t = interference_time_bound(p);
    p.velocity = 250.0;
    CHECK(interference_time_bound(p) == t);
}

TEST_CASE("Bohr temperature bound follows the closed form") {
    CHECK(bohr_temperature_bound(particle(1e-9)) == doctest::Approx(T_ref(1e-9)).epsilon(1e-12));
    CHECK(bohr_temperature_bound(particle(60e-9)) == doctest::Approx(T_ref(60e-9)).epsilon(1e-12));
    CHECK(bohr_temperature_bound(particle(1e-9)) == doctest::Approx(4.028e-4).epsilon(1e-3));
    CHECK(bohr_temperature_bound(particle(60e-9)) == doctest::Approx(5.180e-13).epsilon(1e-3));
}

TEST_CASE("orbit gaps") {
    const auto bohr = orbit_gap(codata.m_e, 5e-11, 0);
    CHECK(bohr.energy == doctest::Approx(static_cast<double>(oracle::hbar * oracle::hbar /
                                                             (2 * oracle::me * 25e-22L))).epsilon(1e-13));
    CHECK(bohr.temperature == doctest::Approx(bohr.energy / codata.k_B).epsilon(1e-15));
    const auto wide = orbit_gap(codata.m_e, 500e-9, 0);
    CHECK(wide.energy == doctest::Approx(2.442e-26).epsilon(1e-3));
    CHECK(wide.temperature == doctest::Approx(1.769e-3).epsilon(1e-3));

    const int n_F = 10000;
    CHECK(orbit_gap(codata.m_e, 500e-9, n_F).energy == doctest::Approx(wide.energy * (2 * n_F + 1)).epsilon(1e-12));
    CHECK_THROWS_AS(orbit_gap(codata.m_e, 500e-9, -1), DomainError);
}

TEST_CASE("moment difference of the flux-qubit loop") {
    const auto m = moment_difference(1e-12, 0.5e-6);
    CHECK(m.magnetic_bohr == doctest::Approx(static_cast<double>(2 * 1e-12L * 0.5e-6L / oracle::muB)).epsilon(1e-12));
    CHECK(m.angular_hbar ==
          doctest::Approx(static_cast<double>(2 * oracle::me / oracle::e * 1e-18L / oracle::hbar)).epsilon(1e-12));
    CHECK(m.magnetic_bohr == doctest::Approx(1.078e5).epsilon(1e-3));
    CHECK_THROWS_AS(moment_difference(0.0, 1e-6), DomainError);
}

TEST_CASE("two-slit pattern extremes") {
    TwoSlitSetup s{0.7, 0.7, 0.0, 0.0, FluxPoint::normalized(0.0, codata.e)};
    CHECK(two_slit_pattern(s, 0.0).probability == doctest::Approx(4 * 0.49).epsilon(1e-15));
    s.phi = FluxPoint::normalized(0.5, codata.e);
    CHECK(two_slit_pattern(s, 0.0).probability == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(two_slit_pattern(s, 0.0).transmission == doctest::Approx(2 * 0.49).epsilon(1e-15));
    s.A1 = -1.0;
    CHECK_THROWS_AS(two_slit_pattern(s, 0.0), DomainError);
}

TEST_CASE("uncertainty estimate for the C70 scenario") {
    const double m = 840.0 * codata.amu;
    const auto u = uncertainty_product(3.0, 0.03, 1e-6, 1e-8, m);
    CHECK(u.threshold == doctest::Approx(static_cast<double>(oracle::hbar / (2 * 840 * oracle::amu))).epsilon(1e-12));
    CHECK(u.threshold == doctest::Approx(0.3e-10).epsilon(0.3));
    // dz v (dz/z + dt/t) = 1e-6 * 100 * (1e-6/3 + 1e-8/0.03)
    CHECK(u.product == doctest::Approx(1e-4 * (1e-6 / 3.0 + 1e-8 / 0.03)).epsilon(1e-12));
    CHECK(u.violated == (u.product < u.threshold));
    // At v = 100 m/s the product drops below the threshold only beyond z ~ 5.3 m.
    const auto far = uncertainty_product(30.0, 0.3, 1e-6, 1e-8, m);
    CHECK(far.violated);
    CHECK_THROWS_AS(uncertainty_product(5e-6, 1.0, 1e-6, 1e-8, m), DomainError);
    CHECK_THROWS_AS(uncertainty_product(3.0, 5e-8, 1e-6, 1e-8, m), DomainError);
}

TEST_CASE("size sweep csv") {
    const std::vector<double> sizes{1e-9, 1e-8};
    const auto sweep = feasibility_sweep(sizes);
    std::ostringstream out;
    write_csv(out, sweep);
    CHECK(out.str().rfind("a_m,t_bound_s,T_bound_K\n1.00000000e-09,", 0) == 0);
}

TEST_CASE("property: bounds scale as a^5 and a^-5") {
    std::vector<double> sizes;
    for (int i = 0; i < 30; ++i) sizes.push_back(1e-9 * std::pow(10.0, i * 5.0 / 29.0));
    const auto sweep = feasibility_sweep(sizes);
    for (std::size_t i = 1; i < sizes.size(); ++i) {
        const double dl = std::log(sizes[i] / sizes[i - 1]);
        CHECK(std::log(sweep.time_bound[i] / sweep.time_bound[i - 1]) / dl == doctest::Approx(5.0).epsilon(1e-9));
        CHECK(std::log(sweep.temperature_bound[i] / sweep.temperature_bound[i - 1]) / dl ==
              doctest::Approx(-5.0).epsilon(1e-9));
    }
}

TEST_CASE("property: product of the two bounds is hbar / (4 pi k_B)") {
    gen::Source g(51);
    for (int i = 0; i < gen::cases; ++i) {
        ParticleSpec p{g.log_uniform(1e-10, 1e-3), g.log_uniform(10.0, 2e4), 1.0, std::nullopt};
        const double product = interference_time_bound(p) * bohr_temperature_bound(p);
        CHECK(product * 4.0 * std::numbers::pi * codata.k_B / codata.hbar == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("property: two-slit probability is bounded below and its fringe average is flux-free") {
    gen::Source g(52);
    for (int i = 0; i < 50; ++i) {
        TwoSlitSetup s{g.uniform(0.0, 2.0), g.uniform(0.0, 2.0), g.uniform(-3.0, 3.0), g.uniform(-3.0, 3.0),
                       FluxPoint::normalized(g.uniform(-5.0, 5.0), codata.e)};
        const double floor = (s.A1 - s.A2) * (s.A1 - s.A2);
        for (int k = 0; k < 500; ++k) {
            CHECK(two_slit_pattern(s, two_pi * k / 500.0).probability >= floor - 1e-12);
        }
        const auto integral = oracle::simpson([&](oracle::real d) {
            return static_cast<oracle::real>(two_slit_pattern(s, static_cast<double>(d)).probability);
        }, 0.0L, 2 * oracle::pi, 2000) / (2 * oracle::pi);
        CHECK(static_cast<double>(integral) == doctest::Approx(two_slit_pattern(s, 0.0).transmission).epsilon(1e-10));
    }
}
