#include "fluxring/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "fluxring/csv.hpp"
#include "fluxring/errors.hpp"
#include "parallel.hpp"

namespace fluxring {

double ThermalEnsemble::probability(int n) const {
    if (n < first_n || n > last_n()) {
        return 0.0;
    }
    return probabilities[static_cast<std::size_t>(n - first_n)];
}

namespace {

struct Support {
    int lo;
    int hi;
};

Support support_for(const GroundState& g, int n_max) {
    return {g.n - n_max, g.n + n_max + (g.degenerate ? 1 : 0)};
}

}  // namespace

ThermalEnsemble build_ensemble(FluxPoint phi, double T, const RingGeometry& geom, const Material& mat,
                               const EnsembleOptions& options) {
    if (!(T > 0.0)) {
        throw DomainError("ensemble temperature must be positive");
    }
    if (options.n_max < 1) {
        throw ConfigError("n_max must be at least 1");
    }
    // E_n / k_B T = scale * (n - phi)^2
    const double scale = pair_count(geom, mat, T) * codata.hbar * codata.hbar /
                         (2.0 * mat.mass * geom.radius * geom.radius * codata.k_B * T);

    const GroundState ground = ground_state_number(phi);
    const double d0 = ground.n - phi.phi_norm;
    const double x_min = d0 * d0;
    auto log_weight = [&](int n) {
        const double d = n - phi.phi_norm;
        return -scale * (d * d - x_min);
    };
    const double log_ratio = std::log(options.boundary_ratio);
    auto boundary_ok = [&](int n_max) {
        const Support s = support_for(ground, n_max);
        return std::max(log_weight(s.lo), log_weight(s.hi)) < log_ratio;
    };

    int n_max = options.n_max;
    bool ok = boundary_ok(n_max);
    while (!ok && options.escalate && n_max < options.n_max_limit) {
        n_max = std::min(2 * n_max, options.n_max_limit);
        ok = boundary_ok(n_max);
    }

    const Support s = support_for(ground, n_max);
    ThermalEnsemble ens;
    ens.temperature = T;
    ens.phi = phi;
    ens.n_max = n_max;
    ens.first_n = s.lo;
    ens.truncation_ok = ok;
    ens.probabilities.resize(static_cast<std::size_t>(s.hi - s.lo + 1));
    for (int n = s.lo; n <= s.hi; ++n) {
        ens.probabilities[static_cast<std::size_t>(n - s.lo)] = std::exp(log_weight(n));
    }
    // smallest weights first
    double total = 0.0;
    std::size_t left = 0;
    std::size_t right = ens.probabilities.size() - 1;
    while (left <= right && right < ens.probabilities.size()) {
        if (ens.probabilities[left] <= ens.probabilities[right]) {
            total += ens.probabilities[left++];
        } else {
            total += ens.probabilities[right--];
        }
    }
    for (double& p : ens.probabilities) {
        p /= total;
    }
    return ens;
}

EnsembleAverages ensemble_averages(const ThermalEnsemble& ens, const RingGeometry& geom,
                                   const Material& mat) {
    const double phi = ens.phi.phi_norm;
    // Positive and negative deviations are accumulated separately, each in
    // order of increasing |n - phi|, so that a support symmetric about phi
    // gives an exactly zero mean deviation.
    double pos = 0.0, neg = 0.0, v2_pos = 0.0, v2_neg = 0.0;
    const int split = static_cast<int>(std::ceil(phi));
    for (int n = std::max(split, ens.first_n); n <= ens.last_n(); ++n) {
        const double d = n - phi;
        const double p = ens.probability(n);
        pos += p * d;
        v2_pos += p * d * d;
    }
    for (int n = std::min(split - 1, ens.last_n()); n >= ens.first_n; --n) {
        const double d = n - phi;
        const double p = ens.probability(n);
        neg += p * d;
        v2_neg += p * d * d;
    }
    const double mean_dev = pos + neg;

    EnsembleAverages out;
    out.n_bar = phi + mean_dev;
    out.mean_v2 = v2_pos + v2_neg;
    // s q n_s (2 pi hbar / l m) (n_bar - phi)
    out.mean_current = geom.cross_section * mat.charge * pair_density(mat, ens.temperature) *
                       velocity_quantum(geom, mat) * mean_dev;
    return out;
}

double default_resistance_scale(const RingGeometry& geom, const Material& mat,
                                const EnsembleOptions& options) {
    const auto ens = build_ensemble(mat.flux(0.5), 0.99 * mat.T_c, geom, mat, options);
    return 1.0 / ensemble_averages(ens, geom, mat).mean_v2;
}

LittleParksCurve little_parks_sweep(double T, std::span<const double> grid, const RingGeometry& geom,
                                    const Material& mat, double c_R, const EnsembleOptions& options,
                                    unsigned threads) {
    if (grid.empty()) {
        throw ConfigError("flux grid is empty");
    }
    if (!std::is_sorted(grid.begin(), grid.end())) {
        throw ConfigError("flux grid must be non-decreasing");
    }
    const std::size_t n = grid.size();
    LittleParksCurve curve;
    curve.phi.assign(grid.begin(), grid.end());
    curve.mean_current.resize(n);
    curve.mean_v2.resize(n);
    curve.delta_R.resize(n);
    std::vector<char> ok(n, 1);

    detail::parallel_for(n, threads, [&](std::size_t i) {
        const auto ens = build_ensemble(mat.flux(grid[i]), T, geom, mat, options);
        const auto avg = ensemble_averages(ens, geom, mat);
        curve.mean_current[i] = avg.mean_current;
        curve.mean_v2[i] = avg.mean_v2;
        curve.delta_R[i] = c_R * avg.mean_v2;
        ok[i] = ens.truncation_ok;
    });
    curve.truncation_ok = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    return curve;
}

void write_csv(std::ostream& out, const LittleParksCurve& curve, const std::string& metadata) {
    const std::string header[] = {"phi_norm", "mean_current_A", "mean_v2", "delta_R_ohm"};
    const std::vector<double> columns[] = {curve.phi, curve.mean_current, curve.mean_v2, curve.delta_R};
    write_table(out, metadata, header, columns);
}

}  // namespace fluxring
