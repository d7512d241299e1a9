#ifndef GREENPOT_RIESZ_HPP
#define GREENPOT_RIESZ_HPP

// Riesz measure sigma_E of u = -log d_E: closed forms for concentric disks and a
// finite-difference Laplacian for general sets.

#include "greenpot/compact_set.hpp"

#include <Eigen/Dense>

#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace greenpot {

/// Grid too coarse for the geometry of E.
class ResolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Density of sigma for E = D_r at z (w.r.t. area).
double sigma_density_disk(double r, const Complex& z);
/// sigma(D_R) for E = D_r.
double sigma_mass_radial(double r, double R);
/// Total mass (1 - r)/(1 + r) for E = D_r.
double sigma_mass_disk(double r);
/// -log d_{D_r}(z) in closed form.
double farthest_log_distance_disk(double r, const Complex& z);

enum class GridLayout { automatic, polar, cartesian };

struct GridSpec {
  double h = 1.0 / 512;  // radial spacing (polar) or cell side (cartesian)
  int angular_cells = 64;
  GridLayout layout = GridLayout::automatic;
};

/// Cell-centred samples of the numerical Riesz density.
struct GridDensity {
  GridLayout layout = GridLayout::polar;
  double h = 0.0;
  double h_theta = 0.0;  // polar only
  int radial_cells = 0;   // polar only
  int angular_cells = 0;  // polar only
  Eigen::VectorXcd centers;
  Eigen::VectorXd density;
  Eigen::VectorXd cell_area;
  double mass = 0.0;
  double clipped_mass = 0.0;  // total |negative| mass removed by clipping

  /// sigma({|z| <= R}) accumulated over cells with centre inside the radius.
  double mass_within(double R) const;
  /// Polar grids: cumulative mass after each radial ring.
  Eigen::VectorXd cumulative_radial_mass() const;
  /// Mass on cells whose centre lies in E.
  double mass_inside(const CompactSet& E) const;
};

/// Negated 5-point Laplacian of u = -log d_E over 2 pi, clipped at zero.
/// Concentric disks use a polar grid (conservative radial stencil); other sets a
/// cell-centred Cartesian grid over cells whose stencil stays inside D.
/// Throws ResolutionError if h > feature_size(E) / 4, and std::runtime_error if the
/// clipped negative mass exceeds 1e-3 of the total.
GridDensity sigma_numeric(const CompactSet& E, const GridSpec& spec = {});

/// Total mass of sigma_E: closed form for disks, grid integration otherwise.
double sigma_mass(const CompactSet& E, const GridSpec& spec = {});

struct PolarQuadrature {
  int angular_nodes = 512;
  int panels = 24;        // radial Gauss-Legendre panels per segment
  int order = 16;         // Gauss-Legendre order per panel
};

/// int g(z, zeta) density(zeta) dA(zeta) over D, by angular trapezoid and radial
/// composite Gauss-Legendre with a breakpoint at |z|.
double green_potential_of_density(const std::function<double(const Complex&)>& density, const Complex& z,
                                  const PolarQuadrature& q = {});

/// Writes the grid as CSV: a '#' metadata line, then re,im,density,cell_area.
void write_grid_csv(std::ostream& out, const GridDensity& grid);

}  // namespace greenpot

#endif  // GREENPOT_RIESZ_HPP
