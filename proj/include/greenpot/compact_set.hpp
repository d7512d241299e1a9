#ifndef GREENPOT_COMPACT_SET_HPP
#define GREENPOT_COMPACT_SET_HPP

#include "greenpot/geometry.hpp"

#include <Eigen/Dense>

#include <string>
#include <variant>
#include <vector>

namespace greenpot {

/// Largest modulus allowed for points stored in sets, measures and zero lists.
inline constexpr double kMaxInteriorModulus = 1.0 - 1e-9;

/// Closed disk |z| <= r centred at the origin.
struct ConcentricDisk {
  double r;
};

/// Finite set of points.
struct PointCloud {
  std::vector<Complex> points;
};

/// Closed region bounded by a simple, positively oriented polygon.
struct JordanPolygon {
  std::vector<Complex> vertices;  // closing edge implied
};

using SetShape = std::variant<ConcentricDisk, PointCloud, JordanPolygon>;

/// Samples on the boundary of E with curve-length quadrature weights.
struct BoundarySample {
  Eigen::VectorXcd points;
  Eigen::VectorXd weights;
  Eigen::VectorXd params;  // boundary parameter in [0, 1) of each sample
};

/// A compact subset of the unit disk. Immutable after construction.
///
/// Disks and polygons carry a periodic boundary parametrization t in [0, 1)
/// (angle / 2pi, resp. normalized arclength from the first vertex).
class CompactSet {
 public:
  static constexpr int kMinBoundaryResolution = 16;

  explicit CompactSet(SetShape shape, int boundary_resolution = 64);

  static CompactSet disk(double r, int boundary_resolution = 64) {
    return CompactSet(ConcentricDisk{r}, boundary_resolution);
  }
  static CompactSet polygon(std::vector<Complex> vertices, int boundary_resolution = 64) {
    return CompactSet(JordanPolygon{std::move(vertices)}, boundary_resolution);
  }
  static CompactSet cloud(std::vector<Complex> points, int boundary_resolution = 64) {
    return CompactSet(PointCloud{std::move(points)}, boundary_resolution);
  }
  /// Axis-aligned square [-half, half]^2.
  static CompactSet square(double half, int boundary_resolution = 64);

  const SetShape& shape() const { return shape_; }
  int boundary_resolution() const { return resolution_; }
  CompactSet with_resolution(int boundary_resolution) const { return CompactSet(shape_, boundary_resolution); }

  bool is_disk() const { return std::holds_alternative<ConcentricDisk>(shape_); }
  bool is_polygon() const { return std::holds_alternative<JordanPolygon>(shape_); }
  bool is_cloud() const { return std::holds_alternative<PointCloud>(shape_); }
  /// Disks and polygons are regular by construction; point clouds are not treated as such.
  bool is_regular() const { return !is_cloud(); }
  bool is_singleton() const;
  /// Radius of a concentric disk; throws for other shapes.
  double disk_radius() const;
  const std::vector<Complex>& cloud_points() const;
  std::string kind_name() const;

  /// Smallest geometric length scale: radius, shortest edge, or minimal point spacing.
  double feature_size() const;
  /// Length of the boundary curve (0 for point clouds).
  double boundary_length() const;
  /// Additive error of boundary extremization after golden-section refinement.
  double extremization_tolerance() const;

  /// Boundary point at parameter t (taken modulo 1). Continuous shapes only.
  Complex boundary_point(double t) const;
  /// Parameter of the boundary point nearest to z. Continuous shapes only.
  double boundary_param(const Complex& z) const;

  BoundarySample boundary_sample() const;
  bool contains(const Complex& z) const;
  Complex project(const Complex& z) const;

 private:
  SetShape shape_;
  int resolution_;
  std::vector<double> cumulative_;  // polygon: arclength at each vertex, size n + 1

  void validate();
  Complex nearest_boundary_point(const Complex& z, double* param) const;
};

BoundarySample boundary_sample(const CompactSet& E);
bool contains(const CompactSet& E, const Complex& z);
Complex project(const CompactSet& E, const Complex& z);

}  // namespace greenpot

#endif  // GREENPOT_COMPACT_SET_HPP
