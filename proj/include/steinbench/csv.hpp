#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace steinbench {

struct CsvTable {
    std::vector<std::string> header;  // empty when the file has no header line
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& name) const;
};

// Reads a comma-separated file. The first line is treated as a header when
// any of its fields fails to parse as a number.
CsvTable read_csv(const std::string& path);
CsvTable parse_csv(const std::string& text);

double parse_double(const std::string& field);
long long parse_int(const std::string& field);

// 17 significant digits, '.' separator.
std::string format_double(double v);

// Writes via a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace steinbench
