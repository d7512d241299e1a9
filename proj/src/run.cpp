#include "greenpot/run.hpp"

#include "greenpot/blaschke.hpp"
#include "greenpot/constants.hpp"
#include "greenpot/numerics.hpp"
#include "greenpot/report.hpp"
#include "greenpot/riesz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

namespace greenpot {

namespace {

using nlohmann::ordered_json;

struct Outcome {
  std::string artifact;
  bool violation = false;
  bool nonconverged = false;
};

ordered_json set_record(const CompactSet& E) {
  ordered_json j;
  j["kind"] = E.kind_name();
  if (E.is_disk()) j["r"] = round_decimal(E.disk_radius());
  j["boundary_resolution"] = E.boundary_resolution();
  return j;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

FeketeOptions fekete_options(const RunConfig& cfg) {
  FeketeOptions o;
  o.restarts = cfg.numeric.restarts;
  return o;
}

ConstantsOptions constants_options(const RunConfig& cfg) {
  ConstantsOptions o;
  o.fekete_n = cfg.numeric.n;
  o.fekete = fekete_options(cfg);
  o.grid.h = cfg.numeric.grid_h;
  o.grid.angular_cells = cfg.numeric.angular_cells;
  return o;
}

Outcome run_sigma(const RunConfig& cfg, const CompactSet& E, std::ostream& log) {
  GridSpec spec;
  spec.h = cfg.numeric.grid_h;
  spec.angular_cells = cfg.numeric.angular_cells;
  const GridDensity grid = sigma_numeric(E, spec);
  Outcome o;
  log << "sigma mass " << format_decimal(grid.mass) << " (clipped " << format_decimal(grid.clipped_mass) << ", "
      << grid.centers.size() << " cells)\n";
  o.violation = !(grid.mass > 0.0) || grid.mass > 1.0 + cfg.numeric.mass_tol;
  if (E.is_disk()) {
    const double target = sigma_mass_disk(E.disk_radius());
    log << "closed-form mass " << format_decimal(target) << ", deviation "
        << format_decimal(std::abs(grid.mass - target)) << '\n';
    o.violation = o.violation || std::abs(grid.mass - target) > cfg.numeric.mass_tol;
  }
  if (cfg.format == OutputFormat::csv) {
    std::ostringstream s;
    write_grid_csv(s, grid);
    o.artifact = s.str();
  } else {
    ordered_json j;
    j["command"] = "sigma";
    j["set"] = set_record(E);
    j["grid"] = to_record(grid);
    o.artifact = dump(j);
  }
  return o;
}

Outcome run_fekete(const RunConfig& cfg, const CompactSet& E, std::ostream& log) {
  const SweepAudit audit = fekete_sweep(E, cfg.numeric.n_list, fekete_options(cfg));
  Outcome o;
  o.violation = !audit.monotonicity_violations.empty();
  o.nonconverged = !audit.all_converged;
  const std::optional<double> robin = E.is_disk() ? std::optional<double>(-std::log(E.disk_radius())) : std::nullopt;
  for (const auto& f : audit.results) {
    log << "n=" << f.n << " normalized_energy=" << format_decimal(f.normalized_energy)
        << " min_potential=" << format_decimal(f.min_potential) << (f.converged ? "" : " (restarts disagree)")
        << '\n';
    if (f.normalized_energy > f.min_potential + 1e-9) o.violation = true;
    if (robin && f.min_potential > *robin + cfg.numeric.tol) o.violation = true;
  }
  for (int i : audit.monotonicity_violations) {
    log << "monotonicity violation at n=" << audit.results[i].n << '\n';
  }
  if (cfg.format == OutputFormat::csv) {
    std::ostringstream s;
    write_fekete_csv(s, audit.results);
    o.artifact = s.str();
  } else {
    ordered_json j;
    j["command"] = "fekete";
    j["set"] = set_record(E);
    j["results"] = ordered_json::array();
    for (const auto& f : audit.results) j["results"].push_back(to_record(f));
    o.artifact = dump(j);
  }
  return o;
}

Outcome run_constants(const RunConfig& cfg, const CompactSet& E, std::ostream& log) {
  const ConstantsReport rep = constants_report(E, constants_options(cfg));
  print_constants_table(log, rep);
  Outcome o;
  const double tol = cfg.numeric.tol;
  o.violation = rep.discrepancy >= cfg.numeric.route_tol || rep.c_route_a > tol || rep.c_route_b > tol ||
                !(rep.sigma_mass < 1.0 + cfg.numeric.mass_tol);
  if (rep.c_closed) {
    o.violation = o.violation || std::abs(rep.c_route_a - *rep.c_closed) >= cfg.numeric.route_tol ||
                  std::abs(rep.c_route_b - *rep.c_closed) >= cfg.numeric.route_tol;
  }
  if (cfg.format == OutputFormat::csv) {
    std::ostringstream s;
    write_constants_csv(s, rep);
    o.artifact = s.str();
  } else {
    ordered_json j;
    j["command"] = "constants";
    j["set"] = set_record(E);
    j["report"] = to_record(rep);
    j["equilibrium"] = to_record(rep.equilibrium);
    o.artifact = dump(j);
  }
  return o;
}

Outcome run_verify_inequality(const RunConfig& cfg, const CompactSet& E, std::ostream& log) {
  const ConstantsReport rep = constants_report(E, constants_options(cfg));
  std::mt19937_64 rng(*cfg.numeric.seed);
  const int trials = cfg.numeric.trials;
  std::vector<std::vector<DiscreteMeasure>> families;
  families.reserve(trials);
  for (int t = 0; t < trials; ++t) families.push_back(random_measure_family(rng, cfg.numeric.max_atoms));
  std::vector<InequalityCheck> checks(trials);
  std::vector<InequalityCheck> basic(trials);
  parallel_for(static_cast<std::size_t>(trials), [&](std::size_t t) {
    checks[t] = verify_sharp_inequality(families[t], E, rep);
    basic[t] = verify_basic_inequality(families[t], E, rep.robin);
  });

  Outcome o;
  int violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::ostringstream csv;
  ordered_json rows = ordered_json::array();
  csv << "trial,atoms,groups,lhs,rhs,slack\n";
  for (int t = 0; t < trials; ++t) {
    Eigen::Index atoms = 0;
    for (const auto& m : families[t]) atoms += m.size();
    min_slack = std::min(min_slack, checks[t].slack);
    if (checks[t].slack < -cfg.numeric.tol || basic[t].slack < -cfg.numeric.tol) ++violations;
    csv << t << ',' << atoms << ',' << families[t].size() << ',' << format_decimal(checks[t].lhs) << ','
        << format_decimal(checks[t].rhs) << ',' << format_decimal(checks[t].slack) << '\n';
    rows.push_back({{"trial", t},
                    {"atoms", atoms},
                    {"groups", families[t].size()},
                    {"lhs", format_decimal(checks[t].lhs)},
                    {"rhs", format_decimal(checks[t].rhs)},
                    {"slack", format_decimal(checks[t].slack)}});
  }
  const FeketeResult f = fekete_solve(E, cfg.numeric.n, fekete_options(cfg));
  const InequalityCheck sharp = verify_sharp_inequality(fekete_split(f), E, rep);
  log << trials << " families, " << violations << " violations, min slack " << format_decimal(min_slack) << '\n';
  log << "fekete split n=" << f.n << " slack " << format_decimal(sharp.slack) << '\n';
  o.violation = violations > 0 || sharp.slack < -cfg.numeric.tol;
  o.nonconverged = !f.converged;
  if (cfg.format == OutputFormat::csv) {
    o.artifact = csv.str();
  } else {
    ordered_json j;
    j["command"] = "verify-inequality";
    j["set"] = set_record(E);
    j["constant"] = format_decimal(rep.constant());
    j["sigma_mass"] = format_decimal(rep.sigma_mass);
    j["violations"] = violations;
    j["min_slack"] = format_decimal(min_slack);
    j["fekete_split"] = {{"n", f.n}, {"slack", format_decimal(sharp.slack)}};
    j["trials"] = std::move(rows);
    o.artifact = dump(j);
  }
  return o;
}

Outcome run_verify_blaschke(const RunConfig& cfg, const CompactSet& E, std::ostream& log) {
  const ConstantsReport rep = constants_report(E, constants_options(cfg));
  std::mt19937_64 rng(*cfg.numeric.seed);
  const int trials = cfg.numeric.trials;
  std::vector<std::vector<BlaschkeProduct>> cases;
  cases.reserve(trials);
  for (int t = 0; t < trials; ++t) cases.push_back(random_factorization(rng, cfg.numeric.degree));
  std::vector<ProductInequalityCheck> checks(trials);
  parallel_for(static_cast<std::size_t>(trials),
               [&](std::size_t t) { checks[t] = verify_product_inequality(cases[t], E, rep); });

  Outcome o;
  int violations = 0;
  double min_slack = std::numeric_limits<double>::infinity();
  std::ostringstream csv;
  ordered_json rows = ordered_json::array();
  csv << "trial,factors,degree,log_lhs,log_rhs,slack\n";
  for (int t = 0; t < trials; ++t) {
    min_slack = std::min(min_slack, checks[t].slack);
    if (checks[t].slack < -cfg.numeric.tol) ++violations;
    csv << t << ',' << cases[t].size() << ',' << checks[t].degree << ',' << format_decimal(checks[t].log_lhs) << ','
        << format_decimal(checks[t].log_rhs) << ',' << format_decimal(checks[t].slack) << '\n';
    rows.push_back({{"trial", t},
                    {"factors", cases[t].size()},
                    {"degree", checks[t].degree},
                    {"log_lhs", format_decimal(checks[t].log_lhs)},
                    {"log_rhs", format_decimal(checks[t].log_rhs)},
                    {"slack", format_decimal(checks[t].slack)}});
  }
  log << trials << " factorizations, " << violations << " violations, min slack " << format_decimal(min_slack)
      << '\n';
  o.violation = violations > 0;
  if (cfg.format == OutputFormat::csv) {
    o.artifact = csv.str();
  } else {
    ordered_json j;
    j["command"] = "verify-blaschke";
    j["set"] = set_record(E);
    j["violations"] = violations;
    j["min_slack"] = format_decimal(min_slack);
    j["trials"] = std::move(rows);
    o.artifact = dump(j);
  }
  return o;
}

Outcome run_extremal_sweep(const RunConfig& cfg, const CompactSet& E, std::ostream& log) {
  const ConstantsReport rep = constants_report(E, constants_options(cfg));
  ExtremalOptions opts;
  opts.fekete = fekete_options(cfg);
  opts.moment_order = cfg.numeric.moment_order;
  const auto rows = extremal_sweep(E, cfg.numeric.n_list, rep, opts);
  Outcome o;
  for (const auto& r : rows) {
    log << "n=" << r.n << " ratio=" << format_decimal(r.ratio) << " target=" << format_decimal(r.target_e_minus_c)
        << " norm^(1/n)=" << format_decimal(std::pow(r.product_norm, 1.0 / r.n))
        << " moment_gap=" << format_decimal(r.moment_gap) << '\n';
    if (r.ratio > r.target_e_minus_c + cfg.numeric.tol) o.violation = true;
    if (!r.converged) o.nonconverged = true;
  }
  if (cfg.format == OutputFormat::csv) {
    std::ostringstream s;
    write_sweep_csv(s, rows);
    o.artifact = s.str();
  } else {
    ordered_json j;
    j["command"] = "extremal-sweep";
    j["set"] = set_record(E);
    j["rows"] = ordered_json::array();
    for (const auto& r : rows) j["rows"].push_back(to_record(r));
    o.artifact = dump(j);
  }
  return o;
}

}  // namespace

int run(const RunConfig& config, std::ostream& log) {
  Outcome outcome;
  try {
    validate_config(config);
    const CompactSet E = config.set();
    switch (*config.command) {
      case Command::sigma: outcome = run_sigma(config, E, log); break;
      case Command::fekete: outcome = run_fekete(config, E, log); break;
      case Command::constants: outcome = run_constants(config, E, log); break;
      case Command::verify_inequality: outcome = run_verify_inequality(config, E, log); break;
      case Command::verify_blaschke: outcome = run_verify_blaschke(config, E, log); break;
      case Command::extremal_sweep: outcome = run_extremal_sweep(config, E, log); break;
    }
    if (!config.output_path.empty()) write_file(config.output_path, outcome.artifact);
  } catch (const std::invalid_argument& e) {
    log << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::runtime_error& e) {
    log << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  if (outcome.nonconverged) log << "warning: Fekete restarts disagree by more than 1e-6\n";
  if (outcome.violation) {
    log << "FAIL: tolerance violated\n";
    return kExitViolation;
  }
  if (outcome.nonconverged && config.strict) return kExitViolation;
  log << "OK\n";
  return kExitOk;
}

}  // namespace greenpot
