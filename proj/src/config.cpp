#include "ptchain/config.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ptchain {

const char* command_name(Command command) {
  switch (command) {
    case Command::Spectrum: return "spectrum";
    case Command::Roots: return "roots";
    case Command::Scatter: return "scatter";
    case Command::Correspond: return "correspond";
    case Command::Evolve: return "evolve";
  }
  return "?";
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail_line(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "config line " << line << ": " << what;
  throw ConfigError(msg.str());
}

double parse_real(const std::string& value, int line, const std::string& key) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (end == value.c_str() || *end != '\0' || !std::isfinite(x)) {
    fail_line(line, "key '" + key + "' needs a finite number, got '" + value +
                        "'");
  }
  return x;
}

int parse_integer(const std::string& value, int line, const std::string& key) {
  char* end = nullptr;
  const long x = std::strtol(value.c_str(), &end, 10);
  if (end == value.c_str() || *end != '\0') {
    fail_line(line, "key '" + key + "' needs an integer, got '" + value + "'");
  }
  return static_cast<int>(x);
}

bool parse_boolean(const std::string& value, int line, const std::string& key) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail_line(line, "key '" + key + "' needs true/false, got '" + value + "'");
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream stream(value);
  while (std::getline(stream, item, ',')) items.push_back(trim(item));
  return items;
}

std::vector<double> parse_real_list(const std::string& value, int line,
                                    const std::string& key) {
  std::vector<double> out;
  for (const std::string& item : split_list(value)) {
    out.push_back(parse_real(item, line, key));
  }
  if (out.empty()) fail_line(line, "sweep axis '" + key + "' is empty");
  return out;
}

std::vector<int> parse_integer_list(const std::string& value, int line,
                                    const std::string& key) {
  std::vector<int> out;
  for (const std::string& item : split_list(value)) {
    out.push_back(parse_integer(item, line, key));
  }
  if (out.empty()) fail_line(line, "sweep axis '" + key + "' is empty");
  return out;
}

[[noreturn]] void fail_missing(const std::string& key) {
  throw ConfigError("missing required key '" + key + "'");
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  RunConfig config;
  bool has_command = false;

  std::istringstream stream(text);
  std::string raw;
  int line = 0;
  while (std::getline(stream, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw = raw.substr(0, hash);
    const std::string entry = trim(raw);
    if (entry.empty()) continue;

    const auto eq = entry.find('=');
    if (eq == std::string::npos) fail_line(line, "expected key = value");
    const std::string key = trim(entry.substr(0, eq));
    const std::string value = trim(entry.substr(eq + 1));
    if (key.empty()) fail_line(line, "empty key");

    if (key == "command") {
      if (value == "spectrum") config.command = Command::Spectrum;
      else if (value == "roots") config.command = Command::Roots;
      else if (value == "scatter") config.command = Command::Scatter;
      else if (value == "correspond") config.command = Command::Correspond;
      else if (value == "evolve") config.command = Command::Evolve;
      else fail_line(line, "unknown command '" + value + "'");
      has_command = true;
    } else if (key == "lattice.N") {
      config.n = parse_integer(value, line, key);
      config.has_n = true;
    } else if (key == "lattice.Ns") {
      config.ns = parse_integer(value, line, key);
      config.has_ns = true;
    } else if (key == "lattice.J") {
      config.j = parse_real(value, line, key);
    } else if (key == "lattice.gamma") {
      config.gamma = parse_real(value, line, key);
      config.has_gamma = true;
    } else if (key == "lattice.swap_gain_loss") {
      config.swap_gain_loss = parse_boolean(value, line, key);
    } else if (key == "sweep.N") {
      config.n_values = parse_integer_list(value, line, key);
    } else if (key == "sweep.Ns") {
      config.ns_values = parse_integer_list(value, line, key);
    } else if (key == "sweep.gamma") {
      config.gamma_values = parse_real_list(value, line, key);
    } else if (key == "sweep.k") {
      config.k_values = parse_real_list(value, line, key);
    } else if (key == "sweep.sigma") {
      config.sigma_values = parse_real_list(value, line, key);
    } else if (key == "scatter.V") {
      config.v = parse_real(value, line, key);
      config.has_v = true;
    } else if (key == "scatter.nu") {
      config.nu = parse_real(value, line, key);
      config.has_nu = true;
    } else if (key == "scatter.k") {
      config.k = parse_real(value, line, key);
      config.has_k = true;
    } else if (key == "roots.enforce_min_count") {
      config.roots_enforce_min_count = parse_boolean(value, line, key);
    } else if (key == "evolve.k0") {
      config.k0 = parse_real(value, line, key);
    } else if (key == "evolve.sigma") {
      config.sigma = parse_real(value, line, key);
      config.has_sigma = true;
    } else if (key == "evolve.center") {
      config.center = parse_integer(value, line, key);
    } else if (key == "evolve.total_sites") {
      config.total_sites = parse_integer(value, line, key);
      config.has_total_sites = true;
    } else if (key == "output.path") {
      config.out_path = value;
    } else if (key == "output.format") {
      if (value == "csv") config.format = OutputFormat::Csv;
      else if (value == "json") config.format = OutputFormat::Json;
      else fail_line(line, "output.format must be csv or json");
    } else {
      fail_line(line, "unknown key '" + key + "'");
    }
  }

  if (!has_command) fail_missing("command");

  const bool needs_lattice = config.command != Command::Evolve;
  if (needs_lattice) {
    if (!config.has_n && config.n_values.empty()) fail_missing("lattice.N");
    if (!config.has_ns && config.ns_values.empty()) fail_missing("lattice.Ns");
  }
  if (config.command == Command::Spectrum || config.command == Command::Roots ||
      config.command == Command::Correspond) {
    if (!config.has_gamma && config.gamma_values.empty()) {
      fail_missing("lattice.gamma");
    }
  }
  if (config.command == Command::Scatter) {
    if (!config.has_v) fail_missing("scatter.V");
    if (!config.has_nu) fail_missing("scatter.nu");
    if (!config.has_k && config.k_values.empty()) fail_missing("scatter.k");
  }
  if (config.command == Command::Evolve) {
    if (!config.has_gamma && config.gamma_values.empty()) {
      fail_missing("lattice.gamma");
    }
    if (!config.has_sigma && config.sigma_values.empty()) {
      fail_missing("evolve.sigma");
    }
    if (!config.has_total_sites) fail_missing("evolve.total_sites");
  }

  return config;
}

}  // namespace ptchain
