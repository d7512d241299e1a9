#include "greenpot/config.hpp"
#include "greenpot/report.hpp"
#include "greenpot/run.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace greenpot;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("greenpot_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path write_config(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

int run_text(const std::string& text, std::string* log = nullptr) {
  std::ostringstream out;
  const int code = run(parse_config_text(text), out);
  if (log) *log = out.str();
  return code;
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(GREENPOT_BIN) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int error_line(const std::string& text) {
  try {
    parse_config_text(text, "cfg.yaml");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).rfind("cfg.yaml:", 0) == 0);
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_config_text(R"(command: verify-blaschke
set:
  kind: polygon
  vertices: [[0.3, -0.3], [0.3, 0.3], [-0.3, 0.3], [-0.3, -0.3]]
  boundary_resolution: 32
numeric: {seed: 7, trials: 50, n_list: [2, 4], grid_h: 0.00390625}
output: {path: out.csv, format: structured-record}
strict: true
)");
  CHECK(cfg.command == Command::verify_blaschke);
  CHECK(cfg.set().is_polygon());
  CHECK(cfg.boundary_resolution == 32);
  CHECK(cfg.numeric.seed == 7u);
  CHECK(cfg.numeric.trials == 50);
  CHECK(cfg.numeric.n_list == std::vector<int>{2, 4});
  CHECK(cfg.numeric.grid_h == 1.0 / 256);
  CHECK(cfg.output_path == "out.csv");
  CHECK(cfg.format == OutputFormat::record);
  CHECK(cfg.strict);
}

TEST_CASE("config errors carry the offending line") {
  CHECK(error_line("command: sigma\nset: {kind: disk, r: 0.5}\nnumeric:\n  grid_h: 0.5\n") == 4);
  CHECK(error_line("command: sigma\nbogus: 1\n") == 2);
  CHECK(error_line("command: nope\n") == 1);
  CHECK(error_line("set:\n  kind: disk\n  r: 1.5\n") == 2);
  CHECK(error_line("numeric:\n  restarts: 3\n") == 2);
  CHECK(error_line("numeric:\n  n_list: [4, 2]\n") == 2);
  CHECK(error_line("numeric:\n  trials: many\n") == 2);
  CHECK(error_line("set: [\n") > 0);
}

TEST_CASE("exit codes") {
  CHECK(run_text("command: constants\nset: {kind: disk, r: 0.5}\n") == kExitOk);
  // randomized suites need a seed
  CHECK(run_text("command: verify-blaschke\nset: {kind: disk, r: 0.5}\n") == kExitInputError);
  // constants are not defined for point clouds
  CHECK(run_text("command: constants\nset: {kind: points, points: [[0.1, 0.0]]}\n") == kExitInputError);
  // an impossible mass tolerance turns into a violation
  CHECK(run_text("command: sigma\nset: {kind: disk, r: 0.5}\nnumeric: {grid_h: 0.015625, mass_tol: 0.0}\n") ==
        kExitViolation);
}

TEST_CASE("constants summary on D_0.5") {
  std::string log;
  CHECK(run_text("command: constants\nset: {kind: disk, r: 0.5}\n", &log) == kExitOk);
  CHECK(log.find("0.69314718056") != std::string::npos);
  CHECK(log.find("0.333333333333") != std::string::npos);
  CHECK(log.find("-0.0079055") != std::string::npos);
}

TEST_CASE("verify-blaschke: zero violations with seed 7") {
  std::string log;
  const auto out = scratch() / "blaschke.csv";
  CHECK(run_text("command: verify-blaschke\nset: {kind: disk, r: 0.5}\nnumeric: {seed: 7, trials: 10000}\n"
                 "output: {path: " + out.string() + "}\n",
                 &log) == kExitOk);
  CHECK(log.find("0 violations") != std::string::npos);
}

TEST_CASE("identical inputs give byte-identical outputs") {
  for (const char* body : {"command: extremal-sweep\nnumeric: {n_list: [2, 4, 8], grid_h: 0.0078125}\n",
                           "command: fekete\nnumeric: {n_list: [2, 3, 5]}\n",
                           "command: verify-inequality\nnumeric: {seed: 3, trials: 200, n: 16, grid_h: 0.0078125}\n",
                           "command: sigma\nnumeric: {grid_h: 0.015625}\n"}) {
    for (const char* format : {"csv", "record"}) {
      std::string text = std::string(body) + "set: {kind: polygon, vertices: [[0.3, -0.3], [0.3, 0.3], [-0.3, 0.3], "
                                             "[-0.3, -0.3]]}\n";
      const auto a = scratch() / "a.out", b = scratch() / "b.out";
      run_text(text + "output: {path: " + a.string() + ", format: " + format + "}\n");
      run_text(text + "output: {path: " + b.string() + ", format: " + format + "}\n");
      CHECK(!slurp(a).empty());
      CHECK(slurp(a) == slurp(b));
    }
  }
}

TEST_CASE("CSV schemas and row order") {
  const auto sweep = scratch() / "sweep.csv";
  CHECK(run_text("command: extremal-sweep\nset: {kind: disk, r: 0.5}\nnumeric: {n_list: [2, 4, 8, 16]}\n"
                 "output: {path: " + sweep.string() + "}\n") == kExitOk);
  std::istringstream in(slurp(sweep));
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,product_norm,factor_norm_product,ratio,target_e_minus_C,moment_gap");
  int prev = 0;
  while (std::getline(in, line)) {
    const int n = std::stoi(line.substr(0, line.find(',')));
    CHECK(n > prev);
    prev = n;
  }
  CHECK(prev == 16);

  const auto consts = scratch() / "constants.csv";
  CHECK(run_text("command: constants\nset: {kind: disk, r: 0.5}\noutput: {path: " + consts.string() + "}\n") ==
        kExitOk);
  std::istringstream cin(slurp(consts));
  std::getline(cin, line);
  CHECK(line == kConstantsCsvHeader);
  std::getline(cin, line);
  CHECK(line.find("-0.00790550887244") != std::string::npos);
}

TEST_CASE("command line front end") {
  const auto cfg = write_config("c.yaml", "set: {kind: disk, r: 0.5}\n");
  const auto out = scratch() / "cli.csv";
  CHECK(run_binary("constants --config " + cfg.string() + " --out " + out.string()) == 0);
  CHECK(slurp(out).rfind(kConstantsCsvHeader, 0) == 0);
  CHECK(run_binary("verify-blaschke --config " + cfg.string()) == 1);
  const auto small = write_config("s.yaml", "set: {kind: disk, r: 0.5}\nnumeric: {trials: 20}\n");
  CHECK(run_binary("verify-blaschke --config " + small.string() + " --seed 7") == 0);
  CHECK(run_binary("fekete --config " + small.string() + " --strict") == 0);
  CHECK(run_binary("constants --config /nonexistent.yaml") == 1);
  CHECK(run_binary("frobnicate --config " + cfg.string()) == 1);
  const auto bad = write_config("bad.yaml", "set: {kind: disk, r: 0.5}\nnumeric: {grid_h: 1.0}\n");
  CHECK(run_binary("sigma --config " + bad.string()) == 1);
}
