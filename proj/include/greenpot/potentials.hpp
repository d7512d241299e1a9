#ifndef GREENPOT_POTENTIALS_HPP
#define GREENPOT_POTENTIALS_HPP

#include "greenpot/compact_set.hpp"
#include "greenpot/geometry.hpp"

#include <Eigen/Dense>

#include <functional>
#include <vector>

namespace greenpot {

struct EquilibriumResult;

/// Finite positive measure sum_k m_k delta_{p_k} on the unit disk.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  DiscreteMeasure(Eigen::VectorXcd points, Eigen::VectorXd masses);

  /// Equal masses total/n at the given points.
  static DiscreteMeasure uniform(const Eigen::VectorXcd& points, double total = 1.0);
  static DiscreteMeasure point_mass(const Complex& p, double mass = 1.0);

  const Eigen::VectorXcd& points() const { return points_; }
  const Eigen::VectorXd& masses() const { return masses_; }
  Eigen::Index size() const { return points_.size(); }
  bool empty() const { return points_.size() == 0; }
  double total_mass() const { return total_; }

  /// Sum of two measures (atoms concatenated).
  DiscreteMeasure operator+(const DiscreteMeasure& other) const;

 private:
  Eigen::VectorXcd points_;
  Eigen::VectorXd masses_;
  double total_ = 0.0;
};

/// Green potential U^mu(z) = sum_k m_k g(z, p_k).
ExtendedReal green_potential(const DiscreteMeasure& mu, const Complex& z);
/// Same, with IEEE +inf for the pole and no domain checks on z.
double green_potential_unchecked(const DiscreteMeasure& mu, const Complex& z);

struct SetMinimum {
  ExtendedReal value;
  Complex argmin;
};

/// Minimum of f over E. Sets with interior are searched on the boundary only, which
/// is exact for superharmonic f. The boundary is sampled at max(resolution,
/// extra density) points, extra_params are added as additional samples, and the
/// best sampled local minima are refined by golden-section search on the parameter.
/// Point clouds are searched exhaustively.
SetMinimum minimize_over_set(const CompactSet& E, const std::function<double(const Complex&)>& f,
                             const std::vector<double>& extra_params = {}, int min_samples = 0);

/// inf over E of the Green potential of mu, with its location on the boundary of E.
SetMinimum inf_over_set(const DiscreteMeasure& mu, const CompactSet& E);

/// -log d_E(z) = inf_{zeta in E} g(z, zeta). Zero-safe alternative to the distance itself.
double farthest_log_distance(const CompactSet& E, const Complex& z);

/// d_E(z) = sup_{zeta in E} delta(z, zeta).
double farthest_point_distance(const CompactSet& E, const Complex& z);

/// Lower bound for U^mu(z) - inf_E U^mu - (U^{mu_E}(z) - V_E); returns the difference
/// of the two sides. Nonnegative up to discretization error. +inf when z is an atom of mu.
double bernstein_walsh_gap(const DiscreteMeasure& mu, const CompactSet& E, const Complex& z,
                           const EquilibriumResult& eq);

/// Number of golden-section iterations used by boundary refinement.
inline constexpr int kGoldenIterations = 48;

}  // namespace greenpot

#endif  // GREENPOT_POTENTIALS_HPP
