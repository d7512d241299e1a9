#include "greenpot/config.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace greenpot {

namespace {

int line_of(const YAML::Node& node) {
  const YAML::Mark m = node.Mark();
  return m.line >= 0 ? m.line + 1 : 0;
}

template <typename T>
T read(const YAML::Node& node, const std::string& key, const std::string& source) {
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(source, line_of(node), "field '" + key + "' has the wrong type");
  }
}

void reject_unknown(const YAML::Node& map, const std::set<std::string>& known, const std::string& where,
                    const std::string& source) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!known.count(key)) throw ConfigError(source, line_of(kv.first), "unknown field '" + key + "' in " + where);
  }
}

std::vector<Complex> read_points(const YAML::Node& node, const std::string& key, const std::string& source) {
  if (!node.IsSequence()) throw ConfigError(source, line_of(node), "'" + key + "' must be a list of [x, y] pairs");
  std::vector<Complex> out;
  for (const auto& p : node) {
    if (!p.IsSequence() || p.size() != 2) {
      throw ConfigError(source, line_of(p), "'" + key + "' entries must be [x, y] pairs");
    }
    out.emplace_back(read<double>(p[0], key, source), read<double>(p[1], key, source));
  }
  return out;
}

void require_map(const YAML::Node& node, const std::string& key, const std::string& source) {
  if (!node.IsMap()) throw ConfigError(source, line_of(node), "'" + key + "' must be a mapping");
}

}  // namespace

ConfigError::ConfigError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + message),
      line_(line) {}

std::optional<Command> parse_command(const std::string& name) {
  if (name == "sigma") return Command::sigma;
  if (name == "fekete") return Command::fekete;
  if (name == "constants") return Command::constants;
  if (name == "verify-inequality") return Command::verify_inequality;
  if (name == "verify-blaschke") return Command::verify_blaschke;
  if (name == "extremal-sweep") return Command::extremal_sweep;
  return std::nullopt;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::sigma: return "sigma";
    case Command::fekete: return "fekete";
    case Command::constants: return "constants";
    case Command::verify_inequality: return "verify-inequality";
    case Command::verify_blaschke: return "verify-blaschke";
    case Command::extremal_sweep: return "extremal-sweep";
  }
  return "?";
}

RunConfig parse_config_text(const std::string& text, const std::string& source) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ConfigError(source, e.mark.line + 1, e.msg);
  }
  RunConfig cfg;
  if (root.IsNull()) return cfg;
  require_map(root, "top level", source);
  reject_unknown(root, {"command", "set", "numeric", "output", "strict"}, "top level", source);

  if (const auto c = root["command"]) {
    const auto name = read<std::string>(c, "command", source);
    cfg.command = parse_command(name);
    if (!cfg.command) throw ConfigError(source, line_of(c), "unknown command '" + name + "'");
  }
  if (const auto s = root["strict"]) cfg.strict = read<bool>(s, "strict", source);

  if (const auto set = root["set"]) {
    require_map(set, "set", source);
    reject_unknown(set, {"kind", "r", "vertices", "points", "boundary_resolution"}, "set", source);
    if (const auto res = set["boundary_resolution"]) {
      cfg.boundary_resolution = read<int>(res, "boundary_resolution", source);
    }
    const auto kind_node = set["kind"];
    if (!kind_node) throw ConfigError(source, line_of(set), "'set' needs a 'kind'");
    const auto kind = read<std::string>(kind_node, "kind", source);
    if (kind == "disk") {
      if (!set["r"]) throw ConfigError(source, line_of(set), "disk needs 'r'");
      cfg.shape = ConcentricDisk{read<double>(set["r"], "r", source)};
    } else if (kind == "polygon") {
      if (!set["vertices"]) throw ConfigError(source, line_of(set), "polygon needs 'vertices'");
      cfg.shape = JordanPolygon{read_points(set["vertices"], "vertices", source)};
    } else if (kind == "points") {
      if (!set["points"]) throw ConfigError(source, line_of(set), "points needs 'points'");
      cfg.shape = PointCloud{read_points(set["points"], "points", source)};
    } else {
      throw ConfigError(source, line_of(kind_node), "unknown set kind '" + kind + "'");
    }
    try {
      (void)cfg.set();
    } catch (const std::invalid_argument& e) {
      throw ConfigError(source, line_of(set), e.what());
    }
  }

  if (const auto num = root["numeric"]) {
    require_map(num, "numeric", source);
    reject_unknown(num,
                   {"grid_h", "angular_cells", "restarts", "seed", "n", "n_list", "trials", "degree", "max_atoms",
                    "moment_order", "tol", "route_tol", "mass_tol"},
                   "numeric", source);
    auto& n = cfg.numeric;
    if (const auto v = num["grid_h"]) n.grid_h = read<double>(v, "grid_h", source);
    if (const auto v = num["angular_cells"]) n.angular_cells = read<int>(v, "angular_cells", source);
    if (const auto v = num["restarts"]) n.restarts = read<int>(v, "restarts", source);
    if (const auto v = num["seed"]) n.seed = read<unsigned>(v, "seed", source);
    if (const auto v = num["n"]) n.n = read<int>(v, "n", source);
    if (const auto v = num["n_list"]) n.n_list = read<std::vector<int>>(v, "n_list", source);
    if (const auto v = num["trials"]) n.trials = read<int>(v, "trials", source);
    if (const auto v = num["degree"]) n.degree = read<int>(v, "degree", source);
    if (const auto v = num["max_atoms"]) n.max_atoms = read<int>(v, "max_atoms", source);
    if (const auto v = num["moment_order"]) n.moment_order = read<int>(v, "moment_order", source);
    if (const auto v = num["tol"]) n.tol = read<double>(v, "tol", source);
    if (const auto v = num["route_tol"]) n.route_tol = read<double>(v, "route_tol", source);
    if (const auto v = num["mass_tol"]) n.mass_tol = read<double>(v, "mass_tol", source);
    auto check = [&](bool ok, const char* key, const std::string& what) {
      if (!ok) throw ConfigError(source, line_of(num[key]), std::string("'") + key + "' " + what);
    };
    check(n.grid_h >= 1.0 / 4096 && n.grid_h <= 1.0 / 64, "grid_h", "must lie in [1/4096, 1/64]");
    check(n.angular_cells >= 4, "angular_cells", "must be >= 4");
    check(n.restarts >= 8, "restarts", "must be >= 8");
    check(n.n >= 2, "n", "must be >= 2");
    check(n.trials >= 1, "trials", "must be >= 1");
    check(n.degree >= 1, "degree", "must be >= 1");
    check(n.max_atoms >= 1, "max_atoms", "must be >= 1");
    check(n.moment_order >= 0, "moment_order", "must be >= 0");
    check(n.tol >= 0.0, "tol", "must be >= 0");
    bool increasing = !n.n_list.empty();
    for (std::size_t i = 0; i < n.n_list.size(); ++i) {
      increasing = increasing && n.n_list[i] >= 2 && (i == 0 || n.n_list[i] > n.n_list[i - 1]);
    }
    check(increasing, "n_list", "must be a nonempty increasing list of integers >= 2");
  }

  if (const auto out = root["output"]) {
    require_map(out, "output", source);
    reject_unknown(out, {"path", "format"}, "output", source);
    if (const auto v = out["path"]) cfg.output_path = read<std::string>(v, "path", source);
    if (const auto v = out["format"]) {
      const auto f = read<std::string>(v, "format", source);
      if (f == "csv") {
        cfg.format = OutputFormat::csv;
      } else if (f == "record" || f == "structured-record" || f == "json") {
        cfg.format = OutputFormat::record;
      } else {
        throw ConfigError(source, line_of(v), "format must be csv or record");
      }
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError(path, 0, "cannot open configuration file");
  std::stringstream buf;
  buf << f.rdbuf();
  return parse_config_text(buf.str(), path);
}

void validate_config(const RunConfig& config, const std::string& source) {
  if (!config.command) throw ConfigError(source, 0, "no command given");
  const bool randomized =
      *config.command == Command::verify_inequality || *config.command == Command::verify_blaschke;
  if (randomized && !config.numeric.seed) {
    throw ConfigError(source, 0, "randomized suites need a seed (numeric.seed or --seed)");
  }
}

}  // namespace greenpot
