#pragma once

// Minimal CSV for the tool's own outputs: header row, comma separator,
// '.' decimal point, LF line endings, no quoting (no field contains commas).

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace pacman {

// 17 significant digits; round-trips every double.
std::string format_double(double v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Index of a header column, or npos.
    std::size_t column(std::string_view name) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

std::string to_csv(const CsvTable& table);
CsvTable parse_csv(std::string_view text);

// Writes to a sibling temporary file and renames it over `path`, so readers
// never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);
std::string read_file(const std::filesystem::path& path);

}  // namespace pacman
