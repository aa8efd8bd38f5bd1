#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bgk/fv_schemes.hpp"
#include "bgk/gas_physics.hpp"

namespace bgk {

/// Parse or validation failure. `line` is 1-based, 0 when the problem is
/// not tied to a line of the file.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Everything a run or a convergence study needs. Defaults reproduce the
/// argon Couette benchmark.
struct RunConfig {
  Scheme scheme = Scheme::O2Slope;
  int cells = 100;
  int velocities = 40;
  double vmin = -953.0;
  double vmax = 953.0;
  GasModel gas;
  WallSpec left{273.0, 0.0, +1};
  WallSpec right{273.0, 300.0, -1};
  double length = 1.0;        // m
  double knudsen = 9.25e-3;   // sets the density through the left wall temperature
  double alpha = 0.5;
  double cfl = 0.9;
  double tolerance = 1e-8;
  long max_steps = 1000000;
  long progress_every = 0;
  std::string output = "profile.csv";
  bool conservative = true;
  bool equilibrium_fallback = false;
  bool collisionless = false;
  bool periodic = false;

  std::vector<Scheme> study_schemes;  // empty: just `scheme`
  std::vector<int> study_meshes{25, 50, 100, 200};
  int study_reference = 400;
  bool study_sequencing = true;
  std::string study_errors;           // empty: derived from `output`

  /// Cross-field checks; throws ConfigError with line 0.
  void validate() const;
};

/// Flat `key = value` text, `#` starts a comment. Unknown keys, malformed
/// values and violated constraints raise ConfigError with the line number.
RunConfig parse_config(std::string_view text);

/// parse_config on the contents of `path`.
RunConfig load_config(const std::string& path);

}  // namespace bgk
