#include "fluxring/csv.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <system_error>

#include "fluxring/errors.hpp"

namespace fluxring {

std::string format_sci(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, value);
    return buf;
}

void write_table(std::ostream& out, std::string_view metadata, std::span<const std::string> header,
                 std::span<const std::vector<double>> columns) {
    if (header.size() != columns.size()) {
        throw ConfigError("csv: header/column count mismatch");
    }
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (const auto& c : columns) {
        if (c.size() != rows) {
            throw ConfigError("csv: columns differ in length");
        }
    }
    if (!metadata.empty()) {
        out << "# " << metadata << '\n';
    }
    for (std::size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << format_sci(columns[c][r]);
        }
        out << '\n';
    }
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    namespace fs = std::filesystem;
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename onto " + path.string());
    }
}

}  // namespace fluxring
