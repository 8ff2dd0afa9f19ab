#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace weberosc::cli {

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// Writes the table via a temporary file renamed into place.
void write_csv(const std::filesystem::path& path, const Table& table);

Table read_csv(const std::filesystem::path& path);

}  // namespace weberosc::cli
