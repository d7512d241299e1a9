#include "greenpot/compact_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace greenpot {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBoundaryEps = 1e-12;

double wrap_unit(double t) {
  t -= std::floor(t);
  return t >= 1.0 ? 0.0 : t;
}

double cross(const Complex& a, const Complex& b) { return a.real() * b.imag() - a.imag() * b.real(); }

// Nearest point to z on segment [a, b], with its fraction along the segment.
Complex segment_nearest(const Complex& a, const Complex& b, const Complex& z, double* frac) {
  const Complex ab = b - a;
  const double len2 = std::norm(ab);
  double s = len2 > 0 ? (std::real(std::conj(ab) * (z - a))) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  *frac = s;
  return a + s * ab;
}

bool segments_intersect(const Complex& p1, const Complex& p2, const Complex& q1, const Complex& q2) {
  const double d1 = cross(q2 - q1, p1 - q1);
  const double d2 = cross(q2 - q1, p2 - q1);
  const double d3 = cross(p2 - p1, q1 - p1);
  const double d4 = cross(p2 - p1, q2 - p1);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  auto on_segment = [](const Complex& a, const Complex& b, const Complex& c) {
    return std::min(a.real(), b.real()) <= c.real() && c.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= c.imag() && c.imag() <= std::max(a.imag(), b.imag());
  };
  if (d1 == 0 && on_segment(q1, q2, p1)) return true;
  if (d2 == 0 && on_segment(q1, q2, p2)) return true;
  if (d3 == 0 && on_segment(p1, p2, q1)) return true;
  if (d4 == 0 && on_segment(p1, p2, q2)) return true;
  return false;
}

void check_point(const Complex& z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || std::abs(z) > kMaxInteriorModulus) {
    throw std::invalid_argument(std::string(what) + ": point outside |z| <= 1 - 1e-9");
  }
}

}  // namespace

CompactSet::CompactSet(SetShape shape, int boundary_resolution)
    : shape_(std::move(shape)), resolution_(boundary_resolution) {
  validate();
}

CompactSet CompactSet::square(double half, int boundary_resolution) {
  return polygon({{half, -half}, {half, half}, {-half, half}, {-half, -half}}, boundary_resolution);
}

void CompactSet::validate() {
  if (resolution_ < kMinBoundaryResolution) {
    throw std::invalid_argument("CompactSet: boundary_resolution must be >= 16");
  }
  if (const auto* d = std::get_if<ConcentricDisk>(&shape_)) {
    if (!(d->r > 0.0) || d->r > kMaxInteriorModulus) {
      throw std::invalid_argument("ConcentricDisk: radius must satisfy 0 < r <= 1 - 1e-9");
    }
    return;
  }
  if (const auto* c = std::get_if<PointCloud>(&shape_)) {
    if (c->points.empty()) throw std::invalid_argument("PointCloud: must be nonempty");
    for (const auto& p : c->points) check_point(p, "PointCloud");
    return;
  }
  const auto& poly = std::get<JordanPolygon>(shape_);
  const auto& v = poly.vertices;
  const std::size_t n = v.size();
  if (n < 3) throw std::invalid_argument("JordanPolygon: needs at least 3 vertices");
  for (const auto& p : v) check_point(p, "JordanPolygon");
  double twice_area = 0.0;
  for (std::size_t k = 0; k < n; ++k) twice_area += cross(v[k], v[(k + 1) % n]);
  if (!(twice_area > 0.0)) throw std::invalid_argument("JordanPolygon: vertices must be positively oriented");
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) throw std::invalid_argument("JordanPolygon: repeated vertex");
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) {
        throw std::invalid_argument("JordanPolygon: edges intersect (polygon is not simple)");
      }
    }
  }
  cumulative_.assign(n + 1, 0.0);
  for (std::size_t k = 0; k < n; ++k) cumulative_[k + 1] = cumulative_[k] + std::abs(v[(k + 1) % n] - v[k]);
}

bool CompactSet::is_singleton() const {
  const auto* c = std::get_if<PointCloud>(&shape_);
  if (!c) return false;
  return std::all_of(c->points.begin(), c->points.end(), [&](const Complex& p) { return p == c->points.front(); });
}

double CompactSet::disk_radius() const {
  const auto* d = std::get_if<ConcentricDisk>(&shape_);
  if (!d) throw std::logic_error("CompactSet: not a concentric disk");
  return d->r;
}

const std::vector<Complex>& CompactSet::cloud_points() const {
  const auto* c = std::get_if<PointCloud>(&shape_);
  if (!c) throw std::logic_error("CompactSet: not a point cloud");
  return c->points;
}

std::string CompactSet::kind_name() const {
  if (is_disk()) return "disk";
  if (is_polygon()) return "polygon";
  return "points";
}

double CompactSet::feature_size() const {
  if (const auto* d = std::get_if<ConcentricDisk>(&shape_)) return d->r;
  if (const auto* c = std::get_if<PointCloud>(&shape_)) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < c->points.size(); ++i)
      for (std::size_t j = i + 1; j < c->points.size(); ++j) {
        const double d = std::abs(c->points[i] - c->points[j]);
        if (d > 0) best = std::min(best, d);
      }
    return best;
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + 1 < cumulative_.size(); ++k) best = std::min(best, cumulative_[k + 1] - cumulative_[k]);
  return best;
}

double CompactSet::boundary_length() const {
  if (const auto* d = std::get_if<ConcentricDisk>(&shape_)) return kTwoPi * d->r;
  if (is_cloud()) return 0.0;
  return cumulative_.back();
}

double CompactSet::extremization_tolerance() const { return 1e-12; }

Complex CompactSet::boundary_point(double t) const {
  t = wrap_unit(t);
  if (const auto* d = std::get_if<ConcentricDisk>(&shape_)) return std::polar(d->r, kTwoPi * t);
  const auto* poly = std::get_if<JordanPolygon>(&shape_);
  if (!poly) throw std::logic_error("boundary_point: point clouds have no boundary curve");
  const auto& v = poly->vertices;
  const double s = t * cumulative_.back();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  std::size_t k = static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
  k = std::clamp<std::size_t>(k, 1, v.size()) - 1;
  const double len = cumulative_[k + 1] - cumulative_[k];
  const double frac = len > 0 ? (s - cumulative_[k]) / len : 0.0;
  return v[k] + frac * (v[(k + 1) % v.size()] - v[k]);
}

Complex CompactSet::nearest_boundary_point(const Complex& z, double* param) const {
  if (const auto* d = std::get_if<ConcentricDisk>(&shape_)) {
    const double m = std::abs(z);
    const double t = m > 0 ? wrap_unit(std::arg(z) / kTwoPi) : 0.0;
    if (param) *param = t;
    return std::polar(d->r, kTwoPi * t);
  }
  const auto* poly = std::get_if<JordanPolygon>(&shape_);
  if (!poly) throw std::logic_error("nearest_boundary_point: point clouds have no boundary curve");
  const auto& v = poly->vertices;
  const std::size_t n = v.size();
  double best_d = std::numeric_limits<double>::infinity();
  double best_t = 0.0;
  Complex best_p = v[0];
  for (std::size_t k = 0; k < n; ++k) {
    double frac = 0.0;
    const Complex p = segment_nearest(v[k], v[(k + 1) % n], z, &frac);
    const double d = std::abs(p - z);
    const double t = wrap_unit((cumulative_[k] + frac * (cumulative_[k + 1] - cumulative_[k])) / cumulative_.back());
    // Strictly closer wins; an exact tie keeps the smaller parameter.
    if (d < best_d || (d == best_d && t < best_t)) {
      best_d = d;
      best_t = t;
      best_p = p;
    }
  }
  if (param) *param = best_t;
  return best_p;
}

double CompactSet::boundary_param(const Complex& z) const {
  double t = 0.0;
  nearest_boundary_point(z, &t);
  return t;
}

BoundarySample CompactSet::boundary_sample() const {
  BoundarySample s;
  if (const auto* c = std::get_if<PointCloud>(&shape_)) {
    const auto m = static_cast<Eigen::Index>(c->points.size());
    s.points = Eigen::Map<const Eigen::VectorXcd>(c->points.data(), m);
    s.weights = Eigen::VectorXd::Ones(m);
    s.params = Eigen::VectorXd::LinSpaced(m, 0.0, double(m - 1));
    return s;
  }
  const int n = resolution_;
  s.points.resize(n);
  s.params.resize(n);
  s.weights = Eigen::VectorXd::Constant(n, boundary_length() / n);
  for (int k = 0; k < n; ++k) {
    s.params[k] = double(k) / n;
    s.points[k] = boundary_point(s.params[k]);
  }
  if (is_disk()) {
    // Exact values at the four axis points keep the sample symmetric.
    const double r = disk_radius();
    for (int k = 0; k < n; ++k) {
      if ((4 * k) % n == 0) {
        const int quarter = 4 * k / n;
        static const Complex axis[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        s.points[k] = r * axis[quarter];
      }
    }
  }
  return s;
}

bool CompactSet::contains(const Complex& z) const {
  if (const auto* d = std::get_if<ConcentricDisk>(&shape_)) return std::abs(z) <= d->r + kBoundaryEps;
  if (const auto* c = std::get_if<PointCloud>(&shape_)) {
    return std::any_of(c->points.begin(), c->points.end(),
                       [&](const Complex& p) { return std::abs(p - z) <= kBoundaryEps; });
  }
  const auto& v = std::get<JordanPolygon>(shape_).vertices;
  double frac = 0.0;
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(segment_nearest(v[k], v[(k + 1) % n], z, &frac) - z) <= kBoundaryEps) return true;
  }
  // Crossing-number test for strict interior.
  bool inside = false;
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Complex& a = v[i];
    const Complex& b = v[j];
    if ((a.imag() > z.imag()) != (b.imag() > z.imag())) {
      const double x = a.real() + (z.imag() - a.imag()) * (b.real() - a.real()) / (b.imag() - a.imag());
      if (z.real() < x) inside = !inside;
    }
  }
  return inside;
}

Complex CompactSet::project(const Complex& z) const {
  if (const auto* d = std::get_if<ConcentricDisk>(&shape_)) {
    const double m = std::abs(z);
    return m <= d->r ? z : z * (d->r / m);
  }
  if (const auto* c = std::get_if<PointCloud>(&shape_)) {
    std::size_t best = 0;
    double best_d = std::abs(c->points[0] - z);
    for (std::size_t k = 1; k < c->points.size(); ++k) {
      const double d = std::abs(c->points[k] - z);
      if (d < best_d) best_d = d, best = k;
    }
    return c->points[best];
  }
  if (contains(z)) return z;
  return nearest_boundary_point(z, nullptr);
}

BoundarySample boundary_sample(const CompactSet& E) { return E.boundary_sample(); }
bool contains(const CompactSet& E, const Complex& z) { return E.contains(z); }
Complex project(const CompactSet& E, const Complex& z) { return E.project(z); }

}  // namespace greenpot
