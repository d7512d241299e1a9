#include "greenpot/riesz.hpp"

#include "greenpot/geometry.hpp"
#include "greenpot/numerics.hpp"
#include "greenpot/potentials.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <vector>

namespace greenpot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kClipBudget = 1e-3;

void check_radius(double r) {
  if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("radius must satisfy 0 < r < 1");
}

GridDensity polar_grid(const CompactSet& E, const GridSpec& spec) {
  const int M = static_cast<int>(std::ceil(1.0 / spec.h - 1e-9));
  const int J = spec.angular_cells;
  if (J < 4) throw std::invalid_argument("sigma_numeric: angular_cells must be >= 4");
  const double h = 1.0 / M;
  const double dtheta = kTwoPi / J;

  Eigen::ArrayXXd u(M, J);
  parallel_for(static_cast<std::size_t>(M), [&](std::size_t i) {
    const double rho = (double(i) + 0.5) * h;
    for (int j = 0; j < J; ++j) {
      u(Eigen::Index(i), j) = farthest_log_distance(E, std::polar(rho, (j + 0.5) * dtheta));
    }
  });

  GridDensity g;
  g.layout = GridLayout::polar;
  g.h = h;
  g.h_theta = dtheta;
  g.radial_cells = M;
  g.angular_cells = J;
  g.centers.resize(Eigen::Index(M) * J);
  g.density.resize(Eigen::Index(M) * J);
  g.cell_area.resize(Eigen::Index(M) * J);
  for (int i = 0; i < M; ++i) {
    const double rho = (i + 0.5) * h;
    for (int j = 0; j < J; ++j) {
      // Flux form of the polar Laplacian; zero flux through the origin and a
      // second-order one-sided derivative against u = 0 on the unit circle.
      const double flux_in = i > 0 ? i * (u(i, j) - u(i - 1, j)) : 0.0;
      const double flux_out = i + 1 < M ? (i + 1) * (u(i + 1, j) - u(i, j))
                                        : (u(i - 1, j) - 9.0 * u(i, j)) / 3.0 * (1.0 / h);
      const double radial = (flux_out - flux_in) / (rho * h);
      const double angular =
          (u(i, (j + 1) % J) - 2.0 * u(i, j) + u(i, (j + J - 1) % J)) / (rho * rho * dtheta * dtheta);
      const Eigen::Index k = Eigen::Index(i) * J + j;
      g.centers[k] = std::polar(rho, (j + 0.5) * dtheta);
      g.density[k] = -(radial + angular) / kTwoPi;
      g.cell_area[k] = rho * h * dtheta;
    }
  }
  return g;
}

GridDensity cartesian_grid(const CompactSet& E, const GridSpec& spec) {
  const int N = static_cast<int>(std::ceil(2.0 / spec.h - 1e-9));
  const double h = 2.0 / N;
  auto coord = [&](int a) { return -1.0 + (a + 0.5) * h; };
  const double nan = std::numeric_limits<double>::quiet_NaN();

  Eigen::ArrayXXd u = Eigen::ArrayXXd::Constant(N, N, nan);
  parallel_for(static_cast<std::size_t>(N), [&](std::size_t a) {
    const double x = coord(int(a));
    for (int b = 0; b < N; ++b) {
      const Complex z(x, coord(b));
      if (std::norm(z) < 1.0) u(Eigen::Index(a), b) = farthest_log_distance(E, z);
    }
  });

  std::vector<Complex> centers;
  std::vector<double> density;
  for (int a = 1; a + 1 < N; ++a) {
    for (int b = 1; b + 1 < N; ++b) {
      const double c = u(a, b);
      const double e = u(a + 1, b), w = u(a - 1, b), n = u(a, b + 1), s = u(a, b - 1);
      if (std::isnan(c) || std::isnan(e) || std::isnan(w) || std::isnan(n) || std::isnan(s)) continue;
      const double lap = (e + w + n + s - 4.0 * c) / (h * h);
      centers.emplace_back(coord(a), coord(b));
      density.push_back(-lap / kTwoPi);
    }
  }
  GridDensity g;
  g.layout = GridLayout::cartesian;
  g.h = h;
  const auto count = static_cast<Eigen::Index>(centers.size());
  g.centers = Eigen::Map<Eigen::VectorXcd>(centers.data(), count);
  g.density = Eigen::Map<Eigen::VectorXd>(density.data(), count);
  g.cell_area = Eigen::VectorXd::Constant(count, h * h);
  return g;
}

}  // namespace

double sigma_density_disk(double r, const Complex& z) {
  check_radius(r);
  require_disk_point(z, "sigma_density_disk");
  const double m = std::abs(z);
  if (m == 0.0) throw DomainError("sigma_density_disk: density has a pole at z = 0");
  const double a = r * m + 1.0;
  const double b = r + m;
  return r * (1.0 - r * r) * (1.0 - m * m) / (kTwoPi * m * a * a * b * b);
}

double sigma_mass_radial(double r, double R) {
  check_radius(r);
  if (!(R >= 0.0 && R <= 1.0)) throw std::invalid_argument("sigma_mass_radial: need 0 <= R <= 1");
  return R * (1.0 - r * r) / ((r * R + 1.0) * (r + R));
}

double sigma_mass_disk(double r) {
  check_radius(r);
  return (1.0 - r) / (1.0 + r);
}

double farthest_log_distance_disk(double r, const Complex& z) {
  check_radius(r);
  require_disk_point(z, "farthest_log_distance_disk");
  const double m = std::abs(z);
  return std::log((1.0 + r * m) / (m + r));
}

GridDensity sigma_numeric(const CompactSet& E, const GridSpec& spec) {
  if (E.is_singleton()) throw std::invalid_argument("sigma_numeric: E must not be a single point");
  if (!(spec.h > 0.0)) throw std::invalid_argument("sigma_numeric: grid spacing must be positive");
  if (spec.h > E.feature_size() / 4.0) {
    throw ResolutionError("sigma_numeric: grid spacing " + format_decimal(spec.h) +
                          " exceeds a quarter of the feature size " + format_decimal(E.feature_size()));
  }
  const bool polar = spec.layout == GridLayout::polar || (spec.layout == GridLayout::automatic && E.is_disk());
  GridDensity g = polar ? polar_grid(E, spec) : cartesian_grid(E, spec);

  double clipped = 0.0;
  for (Eigen::Index k = 0; k < g.density.size(); ++k) {
    if (g.density[k] < 0.0) {
      clipped += -g.density[k] * g.cell_area[k];
      g.density[k] = 0.0;
    }
  }
  g.clipped_mass = clipped;
  g.mass = (g.density.array() * g.cell_area.array()).sum();
  if (clipped > kClipBudget * g.mass) {
    throw std::runtime_error("sigma_numeric: clipped negative mass " + format_decimal(clipped) +
                             " exceeds 1e-3 of the total " + format_decimal(g.mass));
  }
  return g;
}

double sigma_mass(const CompactSet& E, const GridSpec& spec) {
  if (E.is_disk()) return sigma_mass_disk(E.disk_radius());
  return sigma_numeric(E, spec).mass;
}

double GridDensity::mass_within(double R) const {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < centers.size(); ++k) {
    if (std::abs(centers[k]) <= R) sum += density[k] * cell_area[k];
  }
  return sum;
}

Eigen::VectorXd GridDensity::cumulative_radial_mass() const {
  if (layout != GridLayout::polar) throw std::logic_error("cumulative_radial_mass: polar grids only");
  Eigen::VectorXd out(radial_cells);
  double running = 0.0;
  for (int i = 0; i < radial_cells; ++i) {
    running += (density.segment(Eigen::Index(i) * angular_cells, angular_cells).array() *
                cell_area.segment(Eigen::Index(i) * angular_cells, angular_cells).array())
                   .sum();
    out[i] = running;
  }
  return out;
}

double GridDensity::mass_inside(const CompactSet& E) const {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < centers.size(); ++k) {
    if (E.contains(centers[k])) sum += density[k] * cell_area[k];
  }
  return sum;
}

double green_potential_of_density(const std::function<double(const Complex&)>& density, const Complex& z,
                                  const PolarQuadrature& q) {
  require_disk_point(z, "green_potential_of_density");
  const GaussRule rule = gauss_legendre(q.order);
  const int M = q.angular_nodes;
  const double dtheta = kTwoPi / M;
  const double phase = std::arg(z) + 0.5 * dtheta;
  auto ring = [&](double rho) {
    double sum = 0.0;
    for (int m = 0; m < M; ++m) {
      const Complex zeta = std::polar(rho, phase + m * dtheta);
      sum += green_disk_unchecked(z, zeta) * density(zeta);
    }
    return rho * sum * dtheta;
  };
  const double rz = std::abs(z);
  double total = 0.0;
  if (rz > 0.0) total += integrate_panels(ring, 0.0, rz, q.panels, rule);
  total += integrate_panels(ring, rz, 1.0, q.panels, rule);
  return total;
}

void write_grid_csv(std::ostream& out, const GridDensity& grid) {
  out << "# layout=" << (grid.layout == GridLayout::polar ? "polar" : "cartesian") << ",h=" << format_decimal(grid.h);
  if (grid.layout == GridLayout::polar) {
    out << ",h_theta=" << format_decimal(grid.h_theta) << ",radial_cells=" << grid.radial_cells
        << ",angular_cells=" << grid.angular_cells;
  }
  out << ",cells=" << grid.centers.size() << ",mass=" << format_decimal(grid.mass)
      << ",clipped_mass=" << format_decimal(grid.clipped_mass) << '\n';
  out << "re,im,density,cell_area\n";
  for (Eigen::Index k = 0; k < grid.centers.size(); ++k) {
    out << format_decimal(grid.centers[k].real()) << ',' << format_decimal(grid.centers[k].imag()) << ','
        << format_decimal(grid.density[k]) << ',' << format_decimal(grid.cell_area[k]) << '\n';
  }
}

}  // namespace greenpot
