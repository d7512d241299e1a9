#include "greenpot/report.hpp"

#include "greenpot/numerics.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace greenpot {

namespace {

using nlohmann::ordered_json;

ordered_json point_pairs(const Eigen::VectorXcd& pts) {
  ordered_json arr = ordered_json::array();
  for (Eigen::Index k = 0; k < pts.size(); ++k) {
    arr.push_back({round_decimal(pts[k].real()), round_decimal(pts[k].imag())});
  }
  return arr;
}

}  // namespace

ordered_json to_record(const FeketeResult& f) {
  ordered_json j;
  j["n"] = f.n;
  j["energy"] = format_decimal(f.energy);
  j["normalized_energy"] = format_decimal(f.normalized_energy);
  j["min_potential"] = format_decimal(f.min_potential);
  j["restarts_used"] = f.restarts_used;
  j["converged"] = f.converged;
  j["restart_spread"] = format_decimal(f.restart_spread);
  j["points"] = point_pairs(f.points);
  return j;
}

ordered_json to_record(const EquilibriumResult& eq) {
  ordered_json j;
  j["source"] = to_string(eq.source);
  j["robin"] = format_decimal(eq.robin);
  j["total_mass"] = format_decimal(eq.measure.total_mass());
  j["points"] = point_pairs(eq.measure.points());
  ordered_json masses = ordered_json::array();
  for (Eigen::Index k = 0; k < eq.measure.size(); ++k) masses.push_back(round_decimal(eq.measure.masses()[k]));
  j["masses"] = masses;
  return j;
}

ordered_json to_record(const ConstantsReport& rep) {
  ordered_json j;
  j["set"] = rep.set_kind;
  j["robin"] = format_decimal(rep.robin);
  j["sigma_mass"] = format_decimal(rep.sigma_mass);
  j["c_route_a"] = format_decimal(rep.c_route_a);
  j["c_route_b"] = format_decimal(rep.c_route_b);
  j["c_closed"] = rep.c_closed ? ordered_json(format_decimal(*rep.c_closed)) : ordered_json(nullptr);
  j["discrepancy"] = format_decimal(rep.discrepancy);
  j["equilibrium_source"] = to_string(rep.equilibrium.source);
  return j;
}

ordered_json to_record(const ExtremalSweepRow& row) {
  ordered_json j;
  j["n"] = row.n;
  j["product_norm"] = format_decimal(row.product_norm);
  j["factor_norm_product"] = format_decimal(row.factor_norm_product);
  j["ratio"] = format_decimal(row.ratio);
  j["target_e_minus_C"] = format_decimal(row.target_e_minus_c);
  j["moment_gap"] = format_decimal(row.moment_gap);
  return j;
}

ordered_json to_record(const GridDensity& grid) {
  ordered_json j;
  j["layout"] = grid.layout == GridLayout::polar ? "polar" : "cartesian";
  j["h"] = format_decimal(grid.h);
  if (grid.layout == GridLayout::polar) {
    j["h_theta"] = format_decimal(grid.h_theta);
    j["radial_cells"] = grid.radial_cells;
    j["angular_cells"] = grid.angular_cells;
  }
  j["mass"] = format_decimal(grid.mass);
  j["clipped_mass"] = format_decimal(grid.clipped_mass);
  ordered_json cells = ordered_json::array();
  for (Eigen::Index k = 0; k < grid.centers.size(); ++k) {
    cells.push_back({round_decimal(grid.centers[k].real()), round_decimal(grid.centers[k].imag()),
                     round_decimal(grid.density[k]), round_decimal(grid.cell_area[k])});
  }
  j["columns"] = {"re", "im", "density", "cell_area"};
  j["cells"] = std::move(cells);
  return j;
}

void write_sweep_csv(std::ostream& out, std::vector<ExtremalSweepRow> rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  out << kSweepCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.n << ',' << format_decimal(r.product_norm) << ',' << format_decimal(r.factor_norm_product) << ','
        << format_decimal(r.ratio) << ',' << format_decimal(r.target_e_minus_c) << ',' << format_decimal(r.moment_gap)
        << '\n';
  }
}

void write_constants_csv(std::ostream& out, const ConstantsReport& rep) {
  out << kConstantsCsvHeader << '\n';
  out << rep.set_kind << ',' << format_decimal(rep.robin) << ',' << format_decimal(rep.sigma_mass) << ','
      << format_decimal(rep.c_route_a) << ',' << format_decimal(rep.c_route_b) << ','
      << (rep.c_closed ? format_decimal(*rep.c_closed) : std::string()) << ',' << format_decimal(rep.discrepancy)
      << '\n';
}

void write_fekete_csv(std::ostream& out, const std::vector<FeketeResult>& results) {
  out << kFeketeCsvHeader << '\n';
  for (const auto& f : results) {
    out << f.n << ',' << format_decimal(f.energy) << ',' << format_decimal(f.normalized_energy) << ','
        << format_decimal(f.min_potential) << ',' << f.restarts_used << ',' << (f.converged ? 1 : 0) << '\n';
  }
}

void print_constants_table(std::ostream& out, const ConstantsReport& rep) {
  auto line = [&](const char* name, const std::string& value) {
    out << "  " << std::left << std::setw(22) << name << value << '\n';
  };
  out << "constants for " << rep.set_kind << '\n';
  line("V (robin)", format_decimal(rep.robin));
  line("sigma mass", format_decimal(rep.sigma_mass));
  line("C route a (int)", format_decimal(rep.c_route_a));
  line("C route b (deficit)", format_decimal(rep.c_route_b));
  line("C closed form", rep.c_closed ? format_decimal(*rep.c_closed) : std::string("-"));
  line("route discrepancy", format_decimal(rep.discrepancy));
  line("equilibrium source", to_string(rep.equilibrium.source));
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error(path + ": cannot open for writing: " + std::strerror(errno));
  f << contents;
  f.flush();
  if (!f) throw std::runtime_error(path + ": write failed");
}

}  // namespace greenpot
