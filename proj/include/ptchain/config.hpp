#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ptchain/common.hpp"

namespace ptchain {

enum class Command { Spectrum, Roots, Scatter, Correspond, Evolve };
enum class OutputFormat { Csv, Json };

const char* command_name(Command command);

/// Configuration error with the offending line or key in the message.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parsed run description. Scalars give the base point; the sweep axes,
/// when present, replace the corresponding scalar and expand as a cartesian
/// product in the order N, Ns, gamma (and k or sigma where applicable).
struct RunConfig {
  Command command = Command::Spectrum;

  // lattice.*
  int n = 0;
  int ns = 0;
  double j = 1.0;
  double gamma = 0.0;
  bool swap_gain_loss = false;
  bool has_n = false, has_ns = false, has_gamma = false;

  // sweep.*
  std::vector<int> n_values, ns_values;
  std::vector<double> gamma_values, k_values, sigma_values;

  // scatter.*
  double v = 0.0;
  double nu = 0.0;
  double k = 0.0;
  bool has_v = false, has_nu = false, has_k = false;

  // roots.*
  bool roots_enforce_min_count = false;

  // evolve.*
  double k0 = kPi / 2.0;
  double sigma = 0.0;
  int center = -1;  // default: round(5 * sigma)
  int total_sites = 0;
  bool has_sigma = false, has_total_sites = false;

  // output.*
  std::string out_path;
  OutputFormat format = OutputFormat::Csv;
};

/// Flat key = value format, one pair per line, '#' starts a comment.
/// Unknown keys are hard errors; missing required keys are reported by
/// name; malformed values are reported with their line number.
RunConfig parse_config(const std::string& text);

}  // namespace ptchain
