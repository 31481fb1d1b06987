#pragma once

#include <filesystem>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fluxring {

/// Scientific notation with `digits` significant digits, e.g. 1.00000000e-09.
std::string format_sci(double value, int digits = 9);

/// Comma-separated table with a mandatory header row and an optional single
/// `#` metadata line. Columns must have equal length.
void write_table(std::ostream& out, std::string_view metadata, std::span<const std::string> header,
                 std::span<const std::vector<double>> columns);

/// Writes `content` to a sibling temp file and renames it over `path`.
/// Throws IoError; never leaves a partial file at `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace fluxring
