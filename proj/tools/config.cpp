#include "config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "weberosc/errors.hpp"

namespace weberosc::cli {

namespace {

using nlohmann::json;

double as_number(const json& v, const std::string& key) {
  if (!v.is_number()) {
    throw ConfigError("config: '" + key + "' must be a number");
  }
  return v.get<double>();
}

int as_count(const json& v, const std::string& key) {
  if (!v.is_number_integer()) {
    throw ConfigError("config: '" + key + "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

void apply_json(RunConfig& cfg, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config: top level must be an object");
  }
  PhysicalConfig& p = cfg.phys;
  const std::map<std::string, double*> physical = {
      {"m", &p.m},   {"k1", &p.k1},       {"k2", &p.k2}, {"omega0", &p.omega0},
      {"q", &p.q},   {"A", &p.A},         {"mu", &p.mu}, {"L", &p.L},
      {"H", &p.H},   {"g", &p.g},         {"x0", &p.x0}, {"v0", &p.v0},
      {"z0", &p.z0}, {"zdot0", &p.zdot0}, {"t_end", &p.t_end}};
  for (const auto& [key, value] : doc.items()) {
    if (auto it = physical.find(key); it != physical.end()) {
      *it->second = as_number(value, key);
    } else if (key == "preset") {
      if (!value.is_string()) {
        throw ConfigError("config: 'preset' must be a string");
      }
      cfg.preset = value.get<std::string>();
    } else if (key == "drag") {
      if (value.is_array()) {
        cfg.drag.clear();
        for (const auto& d : value) {
          cfg.drag.push_back(as_number(d, key));
        }
      } else if (value.is_string()) {
        cfg.drag = parse_list(value.get<std::string>());
      } else {
        throw ConfigError("config: 'drag' must be an array or a list string");
      }
    } else if (key == "samples") {
      cfg.samples = as_count(value, key);
    } else if (key == "terms") {
      cfg.terms = as_count(value, key);
    } else if (key == "n") {
      cfg.n = as_count(value, key);
    } else if (key == "theta_max") {
      cfg.theta_max = as_number(value, key);
    } else if (key == "oracle") {
      if (!value.is_boolean()) {
        throw ConfigError("config: 'oracle' must be a boolean");
      }
      cfg.oracle = value.get<bool>();
    } else if (key == "out") {
      if (!value.is_string()) {
        throw ConfigError("config: 'out' must be a string");
      }
      cfg.out = value.get<std::string>();
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
}

void apply_file(RunConfig& cfg, const std::filesystem::path& path) {
  std::ifstream is(path);
  if (!is) {
    throw ConfigError("config: cannot read " + path.string());
  }
  std::stringstream ss;
  ss << is.rdbuf();
  apply_json(cfg, ss.str());
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) {
      throw ConfigError("empty entry in list '" + text + "'");
    }
    item = item.substr(first, last - first + 1);
    double v;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (r.ec != std::errc() || r.ptr != item.data() + item.size() ||
        !std::isfinite(v)) {
      throw ConfigError("not a number: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) {
    throw ConfigError("empty list");
  }
  return out;
}

double comparison_tolerance(double fallback) {
  const char* env = std::getenv("WEBEROSC_TOL");
  if (env == nullptr || *env == '\0') {
    return fallback;
  }
  const std::string s = env;
  double v;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || !(v > 0)) {
    throw ConfigError("WEBEROSC_TOL must be a positive number");
  }
  return v;
}

}  // namespace weberosc::cli
