#ifndef GREENPOT_CONFIG_HPP
#define GREENPOT_CONFIG_HPP

#include "greenpot/compact_set.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace greenpot {

enum class Command { sigma, fekete, constants, verify_inequality, verify_blaschke, extremal_sweep };
enum class OutputFormat { csv, record };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

/// Input error with the line of the configuration file it refers to (0 when unknown).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct NumericConfig {
  double grid_h = 1.0 / 512;
  int angular_cells = 64;
  int restarts = 8;
  std::optional<unsigned> seed;
  int n = 64;
  std::vector<int> n_list{2, 4, 8, 16, 32, 64};
  int trials = 10000;
  int degree = 20;
  int max_atoms = 64;
  int moment_order = 4;
  double tol = 1e-6;
  double route_tol = 1e-3;
  double mass_tol = 5e-3;
};

struct RunConfig {
  std::optional<Command> command;
  SetShape shape = ConcentricDisk{0.5};
  int boundary_resolution = 64;
  NumericConfig numeric;
  std::string output_path;
  OutputFormat format = OutputFormat::csv;
  bool strict = false;

  CompactSet set() const { return CompactSet(shape, boundary_resolution); }
};

/// Parses a YAML configuration:
///
///   command: constants
///   set: {kind: disk, r: 0.5, boundary_resolution: 64}
///   numeric: {grid_h: 0.001953125, restarts: 8, seed: 7, n_list: [2, 4, 8], trials: 10000}
///   output: {path: out.csv, format: csv}
///
/// Set kinds: disk (r), polygon (vertices: [[x, y], ...]), points (points: [[x, y], ...]).
RunConfig parse_config_text(const std::string& text, const std::string& source = "<config>");
RunConfig load_config(const std::string& path);

/// Range checks that do not depend on the command; throws ConfigError.
void validate_config(const RunConfig& config, const std::string& source = "<config>");

}  // namespace greenpot

#endif  // GREENPOT_CONFIG_HPP
