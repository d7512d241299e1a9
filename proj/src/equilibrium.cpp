#include "greenpot/equilibrium.hpp"

#include "greenpot/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace greenpot {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kRestartAgreement = 1e-6;
constexpr double kMonotoneTol = 1e-9;
constexpr long kExhaustiveLimit = 200000;

struct RestartOutcome {
  Eigen::VectorXcd points;
  double energy = kInf;
  int sweeps = 0;
};

// Energy of point j against all others.
double point_energy(const Eigen::VectorXcd& pts, Eigen::Index j, const Complex& z) {
  double sum = 0.0;
  for (Eigen::Index i = 0; i < pts.size(); ++i) {
    if (i != j) sum += green_disk_unchecked(z, pts[i]);
  }
  return sum;
}

// Block coordinate descent: each point in turn takes a projected gradient step scaled
// by the local curvature of the log kernel, with backtracking until its energy drops.
RestartOutcome descend(const CompactSet& E, Eigen::VectorXcd pts, const FeketeOptions& options) {
  const Eigen::Index n = pts.size();
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);
  RestartOutcome out;
  double energy = discrete_energy(pts);
  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    double decrease = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const Complex z = pts[j];
      Complex grad(0, 0);
      double curvature = 0.0;
      double current = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (i == j) continue;
        grad += green_disk_gradient(z, pts[i]);
        curvature += 1.0 / std::norm(z - pts[i]);
        current += green_disk_unchecked(z, pts[i]);
      }
      if (!std::isfinite(current)) {
        // Coincident points: push apart along the boundary.
        const Complex moved = E.project(z + Complex(1e-6, 1e-6));
        pts[j] = moved;
        continue;
      }
      if (std::norm(grad) == 0.0 || curvature == 0.0) continue;
      const Complex direction = -grad / curvature;
      double alpha = scale[j];
      bool accepted = false;
      for (int tries = 0; tries < 40; ++tries) {
        const Complex trial = E.project(z + alpha * direction);
        if (std::norm(trial) >= 1.0) {
          alpha *= 0.5;
          continue;
        }
        const double e = point_energy(pts, j, trial);
        if (e < current) {
          pts[j] = trial;
          decrease += current - e;
          accepted = true;
          break;
        }
        alpha *= 0.5;
      }
      scale[j] = accepted ? std::min(4.0, alpha * 1.5) : std::max(1e-8, alpha);
    }
    energy -= decrease;
    if (decrease < options.energy_tol) {
      ++sweep;
      break;
    }
  }
  out.energy = discrete_energy(pts);
  out.points = std::move(pts);
  out.sweeps = sweep;
  return out;
}

long binomial_capped(long m, long k) {
  long c = 1;
  for (long i = 1; i <= k; ++i) {
    c = c * (m - k + i) / i;
    if (c > kExhaustiveLimit) return kExhaustiveLimit + 1;
  }
  return c;
}

FeketeResult fekete_cloud(const CompactSet& E, int n) {
  const auto& cloud = E.cloud_points();
  const int m = static_cast<int>(cloud.size());
  if (m < n) throw std::invalid_argument("fekete_solve: point cloud has fewer than n points");
  Eigen::MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) g(i, j) = i == j ? 0.0 : green_disk_unchecked(cloud[i], cloud[j]);

  std::vector<int> best;
  double best_energy = kInf;
  auto subset_energy = [&](const std::vector<int>& idx) {
    double e = 0.0;
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b) e += g(idx[a], idx[b]);
    return e;
  };

  if (binomial_capped(m, n) <= kExhaustiveLimit) {
    std::vector<int> idx(n);
    for (int k = 0; k < n; ++k) idx[k] = k;
    while (true) {
      const double e = subset_energy(idx);
      if (e < best_energy) best_energy = e, best = idx;
      int k = n - 1;
      while (k >= 0 && idx[k] == m - n + k) --k;
      if (k < 0) break;
      ++idx[k];
      for (int l = k + 1; l < n; ++l) idx[l] = idx[l - 1] + 1;
    }
  } else {
    // Greedy insertion followed by single-swap improvement.
    std::vector<bool> used(m, false);
    for (int step = 0; step < n; ++step) {
      int pick = -1;
      double pick_cost = kInf;
      for (int c = 0; c < m; ++c) {
        if (used[c]) continue;
        double cost = 0.0;
        for (int b : best) cost += g(c, b);
        if (cost < pick_cost) pick_cost = cost, pick = c;
      }
      used[pick] = true;
      best.push_back(pick);
    }
    best_energy = subset_energy(best);
    bool improved = true;
    while (improved) {
      improved = false;
      for (int a = 0; a < n && !improved; ++a) {
        for (int c = 0; c < m && !improved; ++c) {
          if (used[c]) continue;
          double delta = 0.0;
          for (int b = 0; b < n; ++b) {
            if (b == a) continue;
            delta += g(c, best[b]) - g(best[a], best[b]);
          }
          if (delta < -1e-15) {
            used[best[a]] = false;
            used[c] = true;
            best[a] = c;
            best_energy += delta;
            improved = true;
          }
        }
      }
    }
    best_energy = subset_energy(best);
  }

  FeketeResult r;
  r.n = n;
  r.points.resize(n);
  for (int k = 0; k < n; ++k) r.points[k] = cloud[best[k]];
  r.energy = best_energy;
  r.normalized_energy = 2.0 * best_energy / (double(n) * (n - 1));
  r.min_potential = inf_over_set(r.counting_measure(), E).value.as_real();
  r.restarts_used = 1;
  return r;
}

}  // namespace

std::string to_string(EquilibriumSource s) { return s == EquilibriumSource::closed_form ? "closed_form" : "fekete_limit"; }

double discrete_energy(const Eigen::VectorXcd& points) {
  double e = 0.0;
  for (Eigen::Index j = 0; j < points.size(); ++j)
    for (Eigen::Index k = j + 1; k < points.size(); ++k) e += green_disk_unchecked(points[j], points[k]);
  return e;
}

FeketeResult fekete_solve(const CompactSet& E, int n, const FeketeOptions& options) {
  if (n < 2) throw std::invalid_argument("fekete_solve: n must be >= 2");
  if (E.is_cloud()) return fekete_cloud(E, n);
  if (options.restarts < 8) throw std::invalid_argument("fekete_solve: restarts must be >= 8");

  const int restarts = options.restarts;
  std::vector<RestartOutcome> outcomes(restarts);
  parallel_for(static_cast<std::size_t>(restarts), [&](std::size_t k) {
    Eigen::VectorXcd start(n);
    for (int j = 0; j < n; ++j) start[j] = E.boundary_point((j + double(k) / restarts) / n);
    outcomes[k] = descend(E, std::move(start), options);
  });

  std::vector<int> order(restarts);
  for (int k = 0; k < restarts; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return outcomes[a].energy < outcomes[b].energy; });
  const RestartOutcome& best = outcomes[order[0]];

  FeketeResult r;
  r.n = n;
  r.points = best.points;
  r.energy = best.energy;
  r.normalized_energy = 2.0 * best.energy / (double(n) * (n - 1));
  r.min_potential = inf_over_set(r.counting_measure(), E).value.as_real();
  r.restarts_used = restarts;
  r.iterations = best.sweeps;
  r.restart_spread = outcomes[order[1]].energy - best.energy;
  r.converged = r.restart_spread <= kRestartAgreement;
  return r;
}

SweepAudit fekete_sweep(const CompactSet& E, const std::vector<int>& n_list, const FeketeOptions& options) {
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw std::invalid_argument("fekete_sweep: n_list must be increasing");
  }
  SweepAudit audit;
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    audit.results.push_back(fekete_solve(E, n_list[i], options));
    audit.all_converged = audit.all_converged && audit.results.back().converged;
    if (i > 0 && audit.results[i].normalized_energy < audit.results[i - 1].normalized_energy - kMonotoneTol) {
      audit.monotonicity_violations.push_back(static_cast<int>(i));
    }
  }
  return audit;
}

ExtendedReal EquilibriumResult::potential(const Complex& z) const {
  if (source == EquilibriumSource::closed_form && disk_radius) {
    require_disk_point(z, "equilibrium potential");
    const double m = std::abs(z);
    return ExtendedReal(m <= *disk_radius ? -std::log(*disk_radius) : -std::log(m));
  }
  return green_potential(measure, z);
}

Complex EquilibriumResult::moment(int k) const {
  if (source == EquilibriumSource::closed_form && disk_radius) return k == 0 ? Complex(1, 0) : Complex(0, 0);
  Complex sum(0, 0);
  for (Eigen::Index i = 0; i < measure.size(); ++i) sum += measure.masses()[i] * std::pow(measure.points()[i], k);
  return sum;
}

double EquilibriumResult::radial_moment(int k) const {
  if (source == EquilibriumSource::closed_form && disk_radius) return std::pow(*disk_radius, 2 * k);
  return (measure.points().array().abs2().pow(k) * measure.masses().array()).sum();
}

EquilibriumResult equilibrium_disk(double r, int boundary_resolution) {
  const CompactSet E = CompactSet::disk(r, boundary_resolution);
  EquilibriumResult eq;
  eq.measure = DiscreteMeasure::uniform(E.boundary_sample().points);
  eq.robin = -std::log(r);
  eq.source = EquilibriumSource::closed_form;
  eq.disk_radius = r;
  eq.normalized_energy = eq.robin;
  return eq;
}

EquilibriumResult equilibrium_general(const CompactSet& E, int n, const FeketeOptions& options) {
  if (!E.is_regular()) throw std::invalid_argument("equilibrium_general: E must be a disk or polygon");
  if (n < 16) throw std::invalid_argument("equilibrium_general: n must be >= 16");
  const FeketeResult f = fekete_solve(E, n, options);
  EquilibriumResult eq;
  eq.measure = f.counting_measure();
  eq.robin = f.min_potential;
  eq.source = EquilibriumSource::fekete_limit;
  eq.normalized_energy = f.normalized_energy;
  return eq;
}

EquilibriumResult equilibrium(const CompactSet& E, int n, const FeketeOptions& options) {
  if (E.is_disk()) return equilibrium_disk(E.disk_radius(), E.boundary_resolution());
  return equilibrium_general(E, n, options);
}

double weak_star_distance(const DiscreteMeasure& tau, const EquilibriumResult& eq, int K) {
  if (std::abs(tau.total_mass() - 1.0) > 1e-12 || std::abs(eq.measure.total_mass() - 1.0) > 1e-12) {
    throw std::invalid_argument("weak_star_distance: both measures must have unit mass");
  }
  if (K < 0) throw std::invalid_argument("weak_star_distance: K must be >= 0");
  const Eigen::ArrayXcd z = tau.points().array();
  const Eigen::ArrayXd w = tau.masses().array();
  double dist = 0.0;
  Eigen::ArrayXcd zk = Eigen::ArrayXcd::Ones(z.size());
  Eigen::ArrayXd rk = Eigen::ArrayXd::Ones(z.size());
  for (int k = 0; k <= K; ++k) {
    dist = std::max(dist, std::abs((zk * w).sum() - eq.moment(k)));
    if (k >= 1) dist = std::max(dist, std::abs((rk * w).sum() - eq.radial_moment(k)));
    zk *= z;
    rk *= z.abs2();
  }
  return dist;
}

}  // namespace greenpot
