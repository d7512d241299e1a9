#ifndef GREENPOT_TESTS_SUPPORT_HPP
#define GREENPOT_TESTS_SUPPORT_HPP

// Generators and independent oracles shared by the unit tests and the acceptance run.
// Oracles deliberately avoid the library's code paths: direct formulas, dense scans.

#include "greenpot/compact_set.hpp"
#include "greenpot/geometry.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using greenpot::Complex;
inline constexpr double kPi = std::numbers::pi;

/// Small generator wrapper for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  /// Uniform by area in |z| < radius.
  Complex disk_point(double radius = 0.95) {
    const double rho = radius * std::sqrt(uniform(0.0, 1.0));
    return std::polar(rho, uniform(0.0, 2 * kPi));
  }
  /// Uniform in rmin <= |z| <= rmax by radius.
  Complex annulus_point(double rmin, double rmax) { return std::polar(uniform(rmin, rmax), uniform(0.0, 2 * kPi)); }
  Complex halfplane_point() { return {uniform(-5.0, 5.0), uniform(0.05, 5.0)}; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Green function of the disk straight from log |1 - conj(zeta) z| / |z - zeta|.
inline double green(const Complex& z, const Complex& zeta) {
  return std::log(std::abs(1.0 - std::conj(zeta) * z) / std::abs(z - zeta));
}

/// Green function of the upper half-plane, log |w - conj(w0)| / |w - w0|.
inline double green_halfplane(const Complex& w, const Complex& w0) {
  return std::log(std::abs(w - std::conj(w0)) / std::abs(w - w0));
}

/// Boundary point of a polygon at normalized arclength t, recomputed from the vertices.
inline Complex polygon_point(const std::vector<Complex>& v, double t) {
  std::vector<double> len;
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    len.push_back(std::abs(v[(i + 1) % v.size()] - v[i]));
    total += len.back();
  }
  double s = (t - std::floor(t)) * total;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (s <= len[i] || i + 1 == v.size()) return v[i] + (v[(i + 1) % v.size()] - v[i]) * (s / len[i]);
    s -= len[i];
  }
  return v.front();
}

/// Dense scan of the boundary: the shape's own boundary formula, not the library's.
/// Polygon vertices are always included.
inline std::vector<Complex> dense_boundary(const greenpot::CompactSet& E, int samples) {
  std::vector<Complex> out;
  if (E.is_cloud()) return E.cloud_points();
  if (E.is_polygon()) out = std::get<greenpot::JordanPolygon>(E.shape()).vertices;
  out.reserve(out.size() + samples);
  for (int k = 0; k < samples; ++k) {
    const double t = double(k) / samples;
    if (E.is_disk()) {
      out.push_back(std::polar(E.disk_radius(), 2 * kPi * t));
    } else {
      out.push_back(polygon_point(std::get<greenpot::JordanPolygon>(E.shape()).vertices, t));
    }
  }
  return out;
}

inline double dense_min(const std::vector<Complex>& pts, const std::function<double(const Complex&)>& f) {
  double best = INFINITY;
  for (const auto& p : pts) best = std::min(best, f(p));
  return best;
}

/// Even-odd rule point-in-polygon test.
inline bool inside_polygon(const std::vector<Complex>& v, const Complex& z) {
  bool in = false;
  for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
    if ((v[i].imag() > z.imag()) != (v[j].imag() > z.imag())) {
      const double x = v[j].real() + (z.imag() - v[j].imag()) * (v[i].real() - v[j].real()) / (v[i].imag() - v[j].imag());
      if (z.real() < x) in = !in;
    }
  }
  return in;
}

/// Closed forms for E = D_r.
inline double disk_constant(double r) {
  return std::log((1 + r * r) / (2 * r)) + (1 - r) / (1 + r) * std::log(r);
}
inline double disk_riesz_density(double r, double rho) {
  return r * (1 - r * r) * (1 - rho * rho) /
         (2 * kPi * rho * (r * rho + 1) * (r * rho + 1) * (r + rho) * (r + rho));
}
inline double disk_farthest_log(double r, double rho) { return std::log((1 + r * rho) / (rho + r)); }

/// Energy of n equally spaced points on |z| = r.
inline double equally_spaced_energy(double r, int n) {
  double e = 0.0;
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) e += green(std::polar(r, 2 * kPi * j / n), std::polar(r, 2 * kPi * k / n));
  return e;
}

/// sup over |z| = r of |prod (z - a)/(1 - conj(a) z)| for zeros equally spaced on |z| = r:
/// 2 r^n / (1 + r^{2n}).
inline double equally_spaced_product_norm(double r, int n) {
  return 2 * std::pow(r, n) / (1 + std::pow(r, 2 * n));
}

}  // namespace oracle

#endif  // GREENPOT_TESTS_SUPPORT_HPP
