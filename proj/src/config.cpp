#include "fluxring/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fluxring/errors.hpp"
#include "fluxring/quantities.hpp"

namespace fluxring::config {

namespace {

using D = Dimension;

constexpr std::array<KeySpec, 49> keys{{
    {"radius", D::length},
    {"wall_width", D::length},
    {"wall_height", D::length},
    {"cross_section", D::area},
    {"inductance", D::inductance},
    {"target_current", D::current},
    {"T_c", D::temperature},
    {"n_s0", D::number_density},
    {"lambda_L0", D::length},
    {"rho_n", D::resistivity},
    {"carrier_mass", D::mass},
    {"carrier_charge", D::charge},
    {"T", D::temperature},
    {"flux", D::flux_range},
    {"seed", D::integer},
    {"n_max", D::integer},
    {"threads", D::integer},
    {"c_R", D::resistance},
    {"omega_sw", D::rate},
    {"R_B", D::resistance},
    {"duty", D::dimensionless},
    {"mode", D::text},
    {"theta", D::time},
    {"dt", D::time},
    {"barrier_energy", D::energy},
    {"attempt_rate", D::rate},
    {"phi", D::dimensionless},
    {"trajectory", D::text},
    {"I_c0", D::current},
    {"shift", D::dimensionless},
    {"L", D::inductance},
    {"R", D::resistance},
    {"I_p0", D::current},
    {"size", D::length},
    {"sizes", D::text},
    {"density", D::mass_density},
    {"velocity", D::velocity},
    {"mass", D::mass},
    {"distance", D::length},
    {"position_inaccuracy", D::length},
    {"time_inaccuracy", D::time},
    {"field", D::field},
    {"sample_radius", D::length},
    {"slit_amplitude_1", D::dimensionless},
    {"slit_amplitude_2", D::dimensionless},
    {"path_phase_1", D::dimensionless},
    {"path_phase_2", D::dimensionless},
    {"gap_radius", D::length},
    {"loop_area", D::area},
}};

struct Unit {
    std::string_view suffix;
    Dimension dimension;
    double factor;
};

constexpr std::array<Unit, 42> units{{
    {"m", D::length, 1.0},
    {"mm", D::length, 1e-3},
    {"um", D::length, 1e-6},
    {"nm", D::length, 1e-9},
    {"pm", D::length, 1e-12},
    {"m2", D::area, 1.0},
    {"um2", D::area, 1e-12},
    {"nm2", D::area, 1e-18},
    {"A", D::current, 1.0},
    {"mA", D::current, 1e-3},
    {"uA", D::current, 1e-6},
    {"nA", D::current, 1e-9},
    {"K", D::temperature, 1.0},
    {"mK", D::temperature, 1e-3},
    {"H", D::inductance, 1.0},
    {"nH", D::inductance, 1e-9},
    {"pH", D::inductance, 1e-12},
    {"ohm", D::resistance, 1.0},
    {"mohm", D::resistance, 1e-3},
    {"kohm", D::resistance, 1e3},
    {"ohm_m", D::resistivity, 1.0},
    {"s", D::time, 1.0},
    {"ms", D::time, 1e-3},
    {"us", D::time, 1e-6},
    {"ns", D::time, 1e-9},
    {"ps", D::time, 1e-12},
    {"Hz", D::rate, 1.0},
    {"1/s", D::rate, 1.0},
    {"kHz", D::rate, 1e3},
    {"MHz", D::rate, 1e6},
    {"GHz", D::rate, 1e9},
    {"kg", D::mass, 1.0},
    {"amu", D::mass, codata.amu},
    {"C", D::charge, 1.0},
    {"e", D::charge, codata.e},
    {"J", D::energy, 1.0},
    {"eV", D::energy, codata.e},
    {"T", D::field, 1.0},
    {"mT", D::field, 1e-3},
    {"m-3", D::number_density, 1.0},
    {"kg/m3", D::mass_density, 1.0},
    {"m/s", D::velocity, 1.0},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string describe(std::string_view key, const Entry& e) {
    return "'" + std::string(key) + "' (" + e.origin + ")";
}

const Entry& require(const ValueMap& values, std::string_view key) {
    const auto it = values.find(key);
    if (it == values.end()) {
        throw ConfigError("missing value for '" + std::string(key) + "'");
    }
    return it->second;
}

// Splits "number[ ]suffix"; throws on a malformed number.
std::pair<double, std::string_view> split_number(std::string_view value, std::string_view what) {
    value = trim(value);
    const char* begin = value.data();
    const char* end = begin + value.size();
    if (begin != end && *begin == '+') ++begin;
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, x);
    if (ec != std::errc{} || !std::isfinite(x)) {
        throw ConfigError("malformed number '" + std::string(value) + "' for " + std::string(what));
    }
    return {x, trim(std::string_view(ptr, static_cast<std::size_t>(end - ptr)))};
}

}  // namespace

std::span<const KeySpec> known_keys() { return keys; }

const KeySpec& lookup_key(std::string_view key, std::string_view where) {
    const auto it = std::find_if(keys.begin(), keys.end(), [&](const KeySpec& k) { return k.key == key; });
    if (it == keys.end()) {
        std::string msg = "unknown key '" + std::string(key) + "'";
        if (!where.empty()) msg += " (" + std::string(where) + ")";
        throw ConfigError(msg);
    }
    return *it;
}

ValueMap parse_text(std::string_view text, std::string_view source) {
    ValueMap out;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;

        const std::string where = std::string(source) + ":" + std::to_string(line_no);
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("expected 'key = value' at " + where);
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        lookup_key(key, where);
        if (value.empty()) {
            throw ConfigError("empty value for '" + std::string(key) + "' at " + where);
        }
        out.insert_or_assign(std::string(key), Entry{std::string(value), where});
    }
    return out;
}

ValueMap load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_text(buf.str(), path.string());
}

std::vector<std::string> preset_names() { return {"aluminum-ring", "fullerene-C70", "virus-60nm"}; }

ValueMap preset(std::string_view name) {
    static constexpr std::string_view base =
        "radius = 1 um\n"
        "wall_width = 10 nm\n"
        "target_current = 0.5 uA\n"
        "inductance = 1e-11 H\n"
        "T_c = 1.2 K\n"
        "lambda_L0 = 50 nm\n"
        "rho_n = 1e-8 ohm_m\n"
        "T = 1.188 K\n"
        "flux = 0:1:101\n"
        "seed = 1\n"
        "n_max = 20\n"
        "threads = 0\n"
        "omega_sw = 1 MHz\n"
        "R_B = 0.01 ohm\n"
        "duty = 0.5\n"
        "mode = deterministic\n"
        "theta = 1 ms\n"
        "dt = 1 us\n"
        "phi = 0.25\n"
        "shift = 0\n"
        "field = 0.1 T\n"
        "sample_radius = 1 m\n"
        "size = 60 nm\n"
        "density = 1000 kg/m3\n"
        "velocity = 100 m/s\n"
        "distance = 3 m\n"
        "position_inaccuracy = 1 um\n"
        "time_inaccuracy = 10 ns\n"
        "gap_radius = 500 nm\n"
        "loop_area = 1 um2\n";
    std::string_view overlay;
    if (name == "aluminum-ring") {
    } else if (name == "fullerene-C70") {
        overlay = "size = 1 nm\nmass = 840 amu\n";
    } else if (name == "virus-60nm") {
        overlay = "size = 60 nm\n";
    } else {
        throw ConfigError("unknown preset '" + std::string(name) + "'");
    }
    const std::string source = "preset " + std::string(name);
    auto values = parse_text(base, source);
    for (auto& [k, v] : parse_text(overlay, source)) {
        values.insert_or_assign(k, v);
    }
    return values;
}

ValueMap merge(std::initializer_list<const ValueMap*> layers) {
    ValueMap out;
    for (const auto* layer : layers) {
        for (const auto& [k, v] : *layer) {
            out.insert_or_assign(k, v);
        }
    }
    return out;
}

double parse_quantity(std::string_view value, Dimension dimension, std::string_view what) {
    const auto [x, suffix] = split_number(value, what);
    if (suffix.empty()) return x;
    for (const auto& u : units) {
        if (u.suffix == suffix && u.dimension == dimension) return x * u.factor;
    }
    throw ConfigError("unit '" + std::string(suffix) + "' not valid for " + std::string(what));
}

bool has(const ValueMap& values, std::string_view key) { return values.contains(key); }

double quantity(const ValueMap& values, std::string_view key) {
    const auto& spec = lookup_key(key);
    const auto& e = require(values, key);
    return parse_quantity(e.value, spec.dimension, describe(key, e));
}

double quantity_or(const ValueMap& values, std::string_view key, double fallback) {
    return has(values, key) ? quantity(values, key) : fallback;
}

std::int64_t integer(const ValueMap& values, std::string_view key) {
    const auto& e = require(values, key);
    const auto v = trim(e.value);
    std::int64_t x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw ConfigError("malformed integer '" + e.value + "' for " + describe(key, e));
    }
    return x;
}

std::string text(const ValueMap& values, std::string_view key) { return require(values, key).value; }

std::vector<double> Range::linear() const {
    std::vector<double> out(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] = start + (stop - start) * i / (steps - 1);
    }
    if (steps > 0) out.back() = stop;
    return out;
}

std::vector<double> Range::geometric() const {
    if (!(start > 0.0) || !(stop > 0.0)) {
        throw ConfigError("geometric range needs positive end points");
    }
    std::vector<double> out(static_cast<std::size_t>(steps));
    const double ratio = std::log(stop / start);
    for (int i = 0; i < steps; ++i) {
        out[static_cast<std::size_t>(i)] = start * std::exp(ratio * i / (steps - 1));
    }
    if (steps > 0) out.back() = stop;
    return out;
}

Range parse_range(std::string_view text, std::string_view what, double flux_quantum) {
    const auto c1 = text.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
    if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
        throw ConfigError(std::string(what) + ": expected start:stop:steps, got '" + std::string(text) + "'");
    }
    auto end_point = [&](std::string_view part) {
        const auto [x, suffix] = split_number(part, what);
        if (suffix.empty()) return x;
        if (suffix == "Wb" && flux_quantum > 0.0) return x / flux_quantum;
        throw ConfigError(std::string(what) + ": unit '" + std::string(suffix) + "' not accepted here");
    };
    Range r;
    r.start = end_point(text.substr(0, c1));
    r.stop = end_point(text.substr(c1 + 1, c2 - c1 - 1));
    const auto steps_text = trim(text.substr(c2 + 1));
    long long steps = 0;
    const auto [ptr, ec] = std::from_chars(steps_text.data(), steps_text.data() + steps_text.size(), steps);
    if (ec != std::errc{} || ptr != steps_text.data() + steps_text.size()) {
        throw ConfigError(std::string(what) + ": malformed step count '" + std::string(steps_text) + "'");
    }
    if (steps < 2) {
        throw ConfigError(std::string(what) + ": steps must be at least 2, got " + std::to_string(steps));
    }
    if (steps > 10'000'000) {
        throw ConfigError(std::string(what) + ": too many steps");
    }
    if (!(r.stop >= r.start)) {
        throw ConfigError(std::string(what) + ": stop must not precede start");
    }
    r.steps = static_cast<int>(steps);
    return r;
}

}  // namespace fluxring::config
