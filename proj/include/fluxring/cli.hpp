#pragma once

// Command-line front end. `parse_config` is a pure mapping from tokens (and
// the config file they name) to a RunConfig; `run` dispatches to the physics
// modules and writes the artifacts.
//
//   fluxring <command> [--preset NAME] [--config FILE] [--flux a:b:n] [--T K]
//            [--seed N] [-o FILE] [--set key=value ...] [command flags]
//
// Precedence: command-line flag > config file > preset.
//
// Exit codes: 0 success, 2 usage error, 3 domain/physics error, 4 I/O error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fluxring/config.hpp"

namespace fluxring::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_domain = 3;
inline constexpr int exit_io = 4;

std::span<const std::string_view> commands();

struct RunConfig {
    std::string command;
    std::string preset = "aluminum-ring";
    std::optional<std::string> config_path;
    config::Range flux;
    double T = 0.0;
    std::uint64_t seed = 0;
    std::optional<std::string> output;
    config::ValueMap values;  // merged preset < file < command line
    std::string command_line; // tokens joined by spaces, for CSV metadata

    bool operator==(const RunConfig&) const = default;
};

/// Tokens exclude the program name. Throws UsageError (unknown command, flag
/// or key; malformed number; steps < 2), naming the offending token, and
/// IoError when the config file cannot be read.
RunConfig parse_config(std::span<const std::string> args);

/// Executes the command. The one-line summary goes to `out`, diagnostics to
/// `err`. CSV goes to the output file, or to `out` when none is given.
/// Returns the exit code; exceptions are mapped, never propagated.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// parse_config + run with exit-code mapping, for main().
int main_entry(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace fluxring::cli
