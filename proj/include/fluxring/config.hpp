#pragma once

// Line-based `key = value` configuration with `#` comments and SI unit
// suffixes, plus the shipped presets.
//
// Recognised keys and their accepted suffixes:
//
//   ring        radius, wall_width, wall_height [m nm um mm]; cross_section [m2 nm2 um2];
//               inductance [H nH pH]; target_current [A mA uA nA]; T_c [K mK];
//               n_s0 [m-3]; lambda_L0 [m nm um]; rho_n [ohm_m]; carrier_mass [kg amu];
//               carrier_charge [C e]
//   run         T [K mK]; flux (start:stop:steps, normalized; Wb suffix in files only);
//               seed; n_max; threads; c_R [ohm]
//   switching   omega_sw, attempt_rate [Hz kHz MHz GHz 1/s]; R_B [ohm mohm kohm]; duty; mode;
//               theta, dt [s ms us ns ps]; barrier_energy [J eV]; phi; trajectory (path)
//   icrit       I_c0 [A mA uA nA]; shift
//   decay       L [H nH pH]; R [ohm]; I_p0 [A uA nA]
//   feasibility size, distance, position_inaccuracy [m nm um]; density [kg/m3];
//               velocity [m/s]; mass [kg amu]; time_inaccuracy [s ns]; sizes (a0:a1:n)
//               slit_amplitude_1, slit_amplitude_2, path_phase_1, path_phase_2;
//               gap_radius [m nm] (electron orbit gap); loop_area [m2 um2] (moment difference)
//   meissner    field [T mT]; sample_radius [m]

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fluxring::config {

enum class Dimension {
    dimensionless,
    integer,
    text,
    flux_range,
    length,
    area,
    current,
    temperature,
    inductance,
    resistance,
    resistivity,
    time,
    rate,
    mass,
    charge,
    energy,
    field,
    number_density,
    mass_density,
    velocity,
};

struct KeySpec {
    std::string_view key;
    Dimension dimension;
};

/// All recognised keys.
std::span<const KeySpec> known_keys();
/// Throws ConfigError naming `key` (and `where`) if it is not recognised.
const KeySpec& lookup_key(std::string_view key, std::string_view where = {});

/// A value together with where it came from ("preset aluminum-ring",
/// "cfg.txt:12", "--flux", ...), used in error messages.
struct Entry {
    std::string value;
    std::string origin;

    bool operator==(const Entry&) const = default;
};

using ValueMap = std::map<std::string, Entry, std::less<>>;

/// Parses `key = value` lines. Unknown keys and malformed lines raise
/// ConfigError naming the source line.
ValueMap parse_text(std::string_view text, std::string_view source);

/// parse_text on a file; IoError if it cannot be read.
ValueMap load_file(const std::filesystem::path& path);

/// Names of the shipped presets.
std::vector<std::string> preset_names();
/// Values of a preset (ConfigError for unknown names).
ValueMap preset(std::string_view name);

/// Later maps override earlier ones.
ValueMap merge(std::initializer_list<const ValueMap*> layers);

/// Numeric value in SI units. An optional suffix must belong to the key's
/// dimension. ConfigError names the key and origin.
double quantity(const ValueMap& values, std::string_view key);
double quantity_or(const ValueMap& values, std::string_view key, double fallback);
std::int64_t integer(const ValueMap& values, std::string_view key);
std::string text(const ValueMap& values, std::string_view key);
bool has(const ValueMap& values, std::string_view key);

/// Parses "number[suffix]" for the given dimension.
double parse_quantity(std::string_view value, Dimension dimension, std::string_view what);

struct Range {
    double start = 0.0;
    double stop = 0.0;
    int steps = 0;

    /// `steps` evenly spaced points from start to stop inclusive.
    std::vector<double> linear() const;
    /// `steps` geometrically spaced points (start, stop > 0).
    std::vector<double> geometric() const;
    bool operator==(const Range&) const = default;
};

/// "start:stop:steps" with steps >= 2. `flux_quantum` > 0 enables Wb
/// suffixes on start/stop (converted to phi); otherwise a suffix is an error.
Range parse_range(std::string_view text, std::string_view what, double flux_quantum = 0.0);

}  // namespace fluxring::config
