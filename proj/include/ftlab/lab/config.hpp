#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ftlab/errors.hpp"

namespace ftlab::lab {

/// Malformed or invalid configuration (exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Unreadable or unwritable file (exit code 3).
class IoError : public Error {
 public:
  using Error::Error;
};

struct FredholmConfig {
  int m = 80;
  double scale = 10.0;
  std::vector<double> t_list{0.125, 1.0, 8.0};

  friend bool operator==(const FredholmConfig&, const FredholmConfig&) = default;
};

struct IdPiiConfig {
  double s_min = -2.0;
  double s_max = 12.0;
  double xi_lo = -30.0;
  double xi_hi = 15.0;
  double h_xi = 0.04;
  int steps = 2800;

  friend bool operator==(const IdPiiConfig&, const IdPiiConfig&) = default;
};

struct LabConfig {
  std::vector<double> potential{0.0, 0.0, 2.0};
  double t = 1.0;
  /// Defaults to -t x and -t x - 0.1 x^3 when not given.
  std::vector<std::vector<double>> deformations;
  std::vector<int> n_list{16, 32, 64};
  std::vector<double> s_list{0.0, 1.0};
  FredholmConfig fredholm;
  IdPiiConfig idpii;
  std::string output_dir = "results";
  int workers = 1;
  /// Stamped on every record; fixed per config so reruns are byte-identical.
  std::string timestamp;

  friend bool operator==(const LabConfig&, const LabConfig&) = default;
};

/// Parse JSON text; unknown keys, wrong types and invariant violations throw
/// ConfigError. Missing keys take the defaults above.
LabConfig parse_config_text(const std::string& text);
/// Reads the file (IoError when missing) and parses it.
LabConfig parse_config(const std::string& path);
/// Canonical JSON (sorted keys, defaults filled in).
std::string serialize_config(const LabConfig& cfg);
/// FNV-1a over the canonical form without output_dir and workers, as hex.
std::string config_hash(const LabConfig& cfg);

}  // namespace ftlab::lab
