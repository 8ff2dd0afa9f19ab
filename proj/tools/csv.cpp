#include "csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "weberosc/errors.hpp"

namespace weberosc::cli {

std::string format_double(double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

void write_csv(const std::filesystem::path& path, const Table& table) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::trunc);
    if (!os) {
      throw Error("cannot open " + tmp.string() + " for writing");
    }
    for (std::size_t i = 0; i < table.header.size(); ++i) {
      os << (i ? "," : "") << table.header[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << format_double(row[i]);
      }
      os << '\n';
    }
    if (!os.flush()) {
      throw Error("write to " + tmp.string() + " failed");
    }
  }
  std::filesystem::rename(tmp, path);
}

Table read_csv(const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) {
    throw Error("cannot open " + path.string());
  }
  Table table;
  std::string line;
  if (std::getline(is, line)) {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      table.header.push_back(cell);
    }
  }
  while (std::getline(is, line)) {
    if (line.empty()) {
      continue;
    }
    std::vector<double> row;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end) {
      double v;
      const auto r = std::from_chars(p, end, v);
      if (r.ec != std::errc()) {
        throw Error("malformed number in " + path.string());
      }
      row.push_back(v);
      p = r.ptr;
      if (p < end && *p == ',') {
        ++p;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace weberosc::cli
