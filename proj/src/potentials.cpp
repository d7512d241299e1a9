#include "greenpot/potentials.hpp"

#include "greenpot/equilibrium.hpp"
#include "greenpot/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace greenpot {

namespace {

constexpr int kRefineCandidates = 4;
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

DiscreteMeasure::DiscreteMeasure(Eigen::VectorXcd points, Eigen::VectorXd masses)
    : points_(std::move(points)), masses_(std::move(masses)) {
  if (points_.size() != masses_.size()) throw std::invalid_argument("DiscreteMeasure: size mismatch");
  for (Eigen::Index k = 0; k < points_.size(); ++k) {
    const Complex& p = points_[k];
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag()) || std::abs(p) > kMaxInteriorModulus) {
      throw std::invalid_argument("DiscreteMeasure: atom outside |z| <= 1 - 1e-9");
    }
    if (!std::isfinite(masses_[k]) || !(masses_[k] > 0.0)) {
      throw std::invalid_argument("DiscreteMeasure: masses must be finite and positive");
    }
  }
  total_ = masses_.sum();
}

DiscreteMeasure DiscreteMeasure::uniform(const Eigen::VectorXcd& points, double total) {
  if (points.size() == 0) return DiscreteMeasure();
  return DiscreteMeasure(points, Eigen::VectorXd::Constant(points.size(), total / double(points.size())));
}

DiscreteMeasure DiscreteMeasure::point_mass(const Complex& p, double mass) {
  return DiscreteMeasure(Eigen::VectorXcd::Constant(1, p), Eigen::VectorXd::Constant(1, mass));
}

DiscreteMeasure DiscreteMeasure::operator+(const DiscreteMeasure& other) const {
  Eigen::VectorXcd pts(size() + other.size());
  Eigen::VectorXd ms(size() + other.size());
  pts << points_, other.points_;
  ms << masses_, other.masses_;
  return DiscreteMeasure(std::move(pts), std::move(ms));
}

ExtendedReal green_potential(const DiscreteMeasure& mu, const Complex& z) {
  require_disk_point(z, "green_potential");
  const double v = green_potential_unchecked(mu, z);
  return std::isinf(v) ? ExtendedReal::infinity() : ExtendedReal(v);
}

double green_potential_unchecked(const DiscreteMeasure& mu, const Complex& z) {
  double sum = 0.0;
  const auto& pts = mu.points();
  const auto& ms = mu.masses();
  for (Eigen::Index k = 0; k < pts.size(); ++k) sum += ms[k] * green_disk_unchecked(z, pts[k]);
  return sum;
}

SetMinimum minimize_over_set(const CompactSet& E, const std::function<double(const Complex&)>& f,
                             const std::vector<double>& extra_params, int min_samples) {
  if (E.is_cloud()) {
    const auto& pts = E.cloud_points();
    double best = kInf;
    Complex arg = pts.front();
    for (const auto& p : pts) {
      const double v = f(p);
      if (v < best) best = v, arg = p;
    }
    return {std::isinf(best) ? ExtendedReal::infinity() : ExtendedReal(best), arg};
  }

  const int n = std::max(E.boundary_resolution(), min_samples);
  std::vector<double> params;
  params.reserve(n + extra_params.size());
  for (int k = 0; k < n; ++k) params.push_back(double(k) / n);
  for (double t : extra_params) params.push_back(t - std::floor(t));
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  if (!params.empty() && params.back() >= 1.0) params.pop_back();

  const std::size_t m = params.size();
  std::vector<double> values(m);
  for (std::size_t k = 0; k < m; ++k) values[k] = f(E.boundary_point(params[k]));

  // Cyclic local minima of the sampled values, best first.
  std::vector<std::size_t> minima;
  for (std::size_t k = 0; k < m; ++k) {
    const double prev = values[(k + m - 1) % m];
    const double next = values[(k + 1) % m];
    if (values[k] <= prev && values[k] <= next) minima.push_back(k);
  }
  std::stable_sort(minima.begin(), minima.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  if (minima.size() > static_cast<std::size_t>(kRefineCandidates)) minima.resize(kRefineCandidates);

  std::size_t best_k = static_cast<std::size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  double best_v = values[best_k];
  double best_t = params[best_k];
  if (std::isfinite(best_v)) {
    auto along = [&](double t) { return f(E.boundary_point(t)); };
    for (std::size_t k : minima) {
      const double lo = k == 0 ? params[m - 1] - 1.0 : params[k - 1];
      const double hi = k + 1 == m ? params[0] + 1.0 : params[k + 1];
      const auto [t, v] = golden_section_minimize(along, lo, hi, kGoldenIterations);
      if (v < best_v) best_v = v, best_t = t;
    }
  }
  const Complex arg = E.boundary_point(best_t);
  return {std::isinf(best_v) ? ExtendedReal::infinity() : ExtendedReal(best_v), arg};
}

SetMinimum inf_over_set(const DiscreteMeasure& mu, const CompactSet& E) {
  std::vector<double> extra;
  int min_samples = 0;
  if (!E.is_cloud() && !mu.empty()) {
    // Atom shadows on the boundary and the gaps between them, so that minima between
    // closely spaced boundary atoms are bracketed.
    std::vector<double> atom_params;
    atom_params.reserve(mu.size());
    for (Eigen::Index k = 0; k < mu.size(); ++k) atom_params.push_back(E.boundary_param(mu.points()[k]));
    std::sort(atom_params.begin(), atom_params.end());
    extra = atom_params;
    for (std::size_t k = 0; k < atom_params.size(); ++k) {
      const double a = atom_params[k];
      const double b = k + 1 < atom_params.size() ? atom_params[k + 1] : atom_params[0] + 1.0;
      extra.push_back(0.5 * (a + b));
    }
    min_samples = static_cast<int>(2 * mu.size());
  }
  return minimize_over_set(
      E, [&](const Complex& z) { return green_potential_unchecked(mu, z); }, extra, min_samples);
}

double farthest_log_distance(const CompactSet& E, const Complex& z) {
  require_disk_point(z, "farthest_point_distance");
  const auto m = minimize_over_set(E, [&](const Complex& zeta) { return green_disk_unchecked(z, zeta); });
  return m.value.as_real();
}

double farthest_point_distance(const CompactSet& E, const Complex& z) { return std::exp(-farthest_log_distance(E, z)); }

double bernstein_walsh_gap(const DiscreteMeasure& mu, const CompactSet& E, const Complex& z,
                           const EquilibriumResult& eq) {
  if (std::abs(mu.total_mass() - 1.0) > 1e-12) {
    throw std::invalid_argument("bernstein_walsh_gap: measure must have unit total mass");
  }
  const ExtendedReal u = green_potential(mu, z);
  if (u.is_infinite()) return kInf;
  const SetMinimum inf = inf_over_set(mu, E);
  const ExtendedReal ueq = eq.potential(z);
  if (ueq.is_infinite()) return -kInf;
  return (u.value() - inf.value.value()) - (ueq.value() - eq.robin);
}

}  // namespace greenpot
