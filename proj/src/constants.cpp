#include "greenpot/constants.hpp"

#include "greenpot/numerics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace greenpot {

namespace {

DiscreteMeasure concatenate(const std::vector<DiscreteMeasure>& measures) {
  Eigen::Index count = 0;
  for (const auto& m : measures) count += m.size();
  Eigen::VectorXcd pts(count);
  Eigen::VectorXd ms(count);
  Eigen::Index at = 0;
  for (const auto& m : measures) {
    pts.segment(at, m.size()) = m.points();
    ms.segment(at, m.size()) = m.masses();
    at += m.size();
  }
  return DiscreteMeasure(std::move(pts), std::move(ms));
}

double total_mass(const std::vector<DiscreteMeasure>& measures) {
  double t = 0.0;
  for (const auto& m : measures) t += m.total_mass();
  return t;
}

}  // namespace

double c_constant_route_a(const CompactSet& E, const EquilibriumResult& eq, double mass) {
  if (std::abs(eq.measure.total_mass() - 1.0) > 1e-12) {
    throw std::invalid_argument("c_constant_route_a: equilibrium measure must have unit mass");
  }
  const auto& pts = eq.measure.points();
  const auto& ms = eq.measure.masses();
  Eigen::VectorXd inner(pts.size());
  parallel_for(static_cast<std::size_t>(pts.size()),
               [&](std::size_t k) { inner[Eigen::Index(k)] = farthest_log_distance(E, pts[Eigen::Index(k)]); });
  return inner.dot(ms) - eq.robin * mass;
}

double c_constant_route_b(const CompactSet& E, const EquilibriumResult& eq, const SigmaSource& sigma) {
  if (const auto* radial = std::get_if<RadialSigma>(&sigma)) {
    const double r = radial->r;
    if (!E.is_disk() || std::abs(E.disk_radius() - r) > 1e-15) {
      throw std::invalid_argument("c_constant_route_b: radial sigma requires the matching concentric disk");
    }
    const GaussRule rule = gauss_legendre(16);
    // d sigma(D_rho) / d rho = 2 pi rho * density(rho).
    auto integrand = [&](double rho) {
      const double deficit = eq.potential(Complex(rho, 0.0)).value() - eq.robin;
      return deficit * 2.0 * std::numbers::pi * rho * sigma_density_disk(r, Complex(rho, 0.0));
    };
    return integrate_panels(integrand, 0.0, r, 8, rule) + integrate_panels(integrand, r, 1.0, 32, rule);
  }
  const auto& grid = std::get<GridDensity>(sigma);
  Eigen::VectorXd deficit(grid.centers.size());
  parallel_for(static_cast<std::size_t>(grid.centers.size()), [&](std::size_t k) {
    const Eigen::Index i = Eigen::Index(k);
    deficit[i] = grid.density[i] == 0.0 ? 0.0 : eq.potential(grid.centers[i]).as_real() - eq.robin;
  });
  return (deficit.array() * grid.density.array() * grid.cell_area.array()).sum();
}

double c_constant_disk(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("c_constant_disk: need 0 < r < 1");
  return std::log((1.0 + r * r) / (2.0 * r)) + (1.0 - r) / (1.0 + r) * std::log(r);
}

double disk_product_bound_log(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("disk_product_bound_log: need 0 < r < 1");
  return std::log(2.0) + 2.0 * r / (r + 1.0) * std::log(r) - std::log(1.0 + r * r);
}

ConstantsReport constants_report(const CompactSet& E, const ConstantsOptions& options) {
  if (!E.is_regular()) throw std::invalid_argument("constants_report: E must be a disk or polygon");
  ConstantsReport rep;
  rep.set_kind = E.kind_name();
  if (E.is_disk()) {
    const double r = E.disk_radius();
    rep.equilibrium = equilibrium_disk(r, E.boundary_resolution());
    rep.sigma_mass = sigma_mass_disk(r);
    rep.c_route_a = c_constant_route_a(E, rep.equilibrium, rep.sigma_mass);
    rep.c_route_b = c_constant_route_b(E, rep.equilibrium, RadialSigma{r});
    rep.c_closed = c_constant_disk(r);
  } else {
    rep.equilibrium = equilibrium_general(E, options.fekete_n, options.fekete);
    const GridDensity grid = sigma_numeric(E, options.grid);
    rep.sigma_mass = grid.mass;
    rep.clipped_mass = grid.clipped_mass;
    rep.c_route_a = c_constant_route_a(E, rep.equilibrium, rep.sigma_mass);
    rep.c_route_b = c_constant_route_b(E, rep.equilibrium, grid);
  }
  rep.robin = rep.equilibrium.robin;
  rep.discrepancy = std::abs(rep.c_route_a - rep.c_route_b);
  return rep;
}

InequalityCheck verify_sharp_inequality(const std::vector<DiscreteMeasure>& measures, const CompactSet& E,
                                        const ConstantsReport& report) {
  if (measures.empty() || std::abs(total_mass(measures) - 1.0) > 1e-12) {
    throw std::invalid_argument("verify_sharp_inequality: measures must sum to unit mass");
  }
  InequalityCheck c;
  for (const auto& nu : measures) c.lhs += inf_over_set(nu, E).value.as_real();
  const double inf_total = inf_over_set(concatenate(measures), E).value.as_real();
  c.rhs = report.constant() + report.sigma_mass * inf_total;
  c.slack = c.lhs - c.rhs;
  return c;
}

InequalityCheck verify_basic_inequality(const std::vector<DiscreteMeasure>& measures, const CompactSet& E,
                                        double robin) {
  if (measures.empty() || std::abs(total_mass(measures) - 1.0) > 1e-12) {
    throw std::invalid_argument("verify_basic_inequality: measures must sum to unit mass");
  }
  InequalityCheck c;
  for (const auto& nu : measures) c.lhs += inf_over_set(nu, E).value.as_real();
  c.rhs = -robin + inf_over_set(concatenate(measures), E).value.as_real();
  c.slack = c.lhs - c.rhs;
  return c;
}

std::vector<DiscreteMeasure> random_measure_family(std::mt19937_64& rng, int max_atoms, double radius) {
  if (max_atoms < 1 || !(radius > 0.0 && radius <= kMaxInteriorModulus)) {
    throw std::invalid_argument("random_measure_family: bad parameters");
  }
  std::uniform_int_distribution<int> atom_count(1, max_atoms);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> gamma1(1.0);
  const int n = atom_count(rng);
  Eigen::VectorXcd pts(n);
  Eigen::VectorXd ms(n);
  for (int k = 0; k < n; ++k) {
    pts[k] = std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
    ms[k] = gamma1(rng) + 1e-300;
  }
  ms /= ms.sum();
  const int groups = std::uniform_int_distribution<int>(1, n)(rng);
  std::uniform_int_distribution<int> pick(0, groups - 1);
  std::vector<std::vector<int>> members(groups);
  for (int k = 0; k < n; ++k) members[pick(rng)].push_back(k);
  std::vector<DiscreteMeasure> family;
  for (const auto& idx : members) {
    if (idx.empty()) continue;
    Eigen::VectorXcd p(idx.size());
    Eigen::VectorXd m(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) p[i] = pts[idx[i]], m[i] = ms[idx[i]];
    family.emplace_back(std::move(p), std::move(m));
  }
  return family;
}

std::vector<DiscreteMeasure> fekete_split(const FeketeResult& f) {
  std::vector<DiscreteMeasure> out;
  out.reserve(f.points.size());
  for (Eigen::Index k = 0; k < f.points.size(); ++k) out.push_back(DiscreteMeasure::point_mass(f.points[k], 1.0 / f.n));
  return out;
}

}  // namespace greenpot
