#ifndef GREENPOT_EQUILIBRIUM_HPP
#define GREENPOT_EQUILIBRIUM_HPP

#include "greenpot/compact_set.hpp"
#include "greenpot/potentials.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace greenpot {

/// Minimizer of the discrete Green energy sum_{j<k} g(z_j, z_k) over E^n.
struct FeketeResult {
  int n = 0;
  Eigen::VectorXcd points;
  double energy = 0.0;
  double normalized_energy = 0.0;  // 2 energy / (n (n - 1))
  double min_potential = 0.0;      // inf_E (1/n) sum_k g(z, xi_k)
  int restarts_used = 0;
  int iterations = 0;         // sweeps of the best restart
  double restart_spread = 0;  // energy gap between the two best restarts
  bool converged = true;      // false when the two best restarts disagree by > 1e-6

  DiscreteMeasure counting_measure() const { return DiscreteMeasure::uniform(points); }
};

struct FeketeOptions {
  int restarts = 8;
  int max_sweeps = 5000;
  double energy_tol = 1e-12;  // stop when one sweep lowers the energy by less
};

enum class EquilibriumSource { closed_form, fekete_limit };

/// Green equilibrium measure of E and its Robin constant V_E.
struct EquilibriumResult {
  DiscreteMeasure measure;
  double robin = 0.0;
  EquilibriumSource source = EquilibriumSource::fekete_limit;
  std::optional<double> disk_radius;  // set for closed_form results
  double normalized_energy = 0.0;     // fekete_limit only: the Fekete energy at the same n

  /// Potential of the equilibrium measure. Closed-form results use the exact potential
  /// of the uniform circle measure, min(-log r, -log|z|); otherwise the discrete sum.
  ExtendedReal potential(const Complex& z) const;

  /// Complex moment int z^k dmu (exact for closed-form results).
  Complex moment(int k) const;
  /// Radial moment int |z|^{2k} dmu (exact for closed-form results).
  double radial_moment(int k) const;
};

std::string to_string(EquilibriumSource s);

double discrete_energy(const Eigen::VectorXcd& points);

FeketeResult fekete_solve(const CompactSet& E, int n, const FeketeOptions& options = {});
inline FeketeResult fekete_solve(const CompactSet& E, int n, int restarts) {
  FeketeOptions o;
  o.restarts = restarts;
  return fekete_solve(E, n, o);
}

struct SweepAudit {
  std::vector<FeketeResult> results;
  std::vector<int> monotonicity_violations;  // indices i with energy[i] < energy[i-1] - 1e-9
  bool all_converged = true;
};

SweepAudit fekete_sweep(const CompactSet& E, const std::vector<int>& n_list, const FeketeOptions& options = {});

/// Uniform measure on |z| = r at boundary_resolution points, V = -log r.
EquilibriumResult equilibrium_disk(double r, int boundary_resolution = 64);
/// Normalized Fekete counting measure; robin taken from min_potential.
EquilibriumResult equilibrium_general(const CompactSet& E, int n, const FeketeOptions& options = {});
/// Dispatch: closed form for concentric disks, Fekete limit otherwise.
EquilibriumResult equilibrium(const CompactSet& E, int n = 64, const FeketeOptions& options = {});

/// max over 0 <= k <= K of |int z^k dtau - int z^k dmu| and over 1 <= k <= K of
/// |int |z|^{2k} dtau - int |z|^{2k} dmu|.
double weak_star_distance(const DiscreteMeasure& tau, const EquilibriumResult& eq, int K);

}  // namespace greenpot

#endif  // GREENPOT_EQUILIBRIUM_HPP
