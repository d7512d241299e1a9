#ifndef GREENPOT_GEOMETRY_HPP
#define GREENPOT_GEOMETRY_HPP

// Pointwise hyperbolic geometry of the unit disk: Green function, pseudohyperbolic
// metric, disk automorphisms and the upper half-plane transfer. Everything here is
// header-only and templated on the real scalar type.

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace greenpot {

template <typename Scalar>
using ComplexT = std::complex<Scalar>;
using Complex = ComplexT<double>;

/// Thrown when a point falls outside the domain an operation is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A real number or +infinity. The Green function has a logarithmic pole on the
/// diagonal; the pole is carried as an explicit state instead of a float sentinel.
template <typename Scalar>
class ExtendedRealT {
 public:
  constexpr ExtendedRealT() = default;
  constexpr explicit ExtendedRealT(Scalar v) : value_(v) {}

  static constexpr ExtendedRealT infinity() {
    ExtendedRealT x;
    x.infinite_ = true;
    return x;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value; throws on the pole.
  Scalar value() const {
    if (infinite_) throw DomainError("ExtendedReal: value() on +infinity");
    return value_;
  }

  /// Finite value, or IEEE +inf for the pole. For comparisons and reductions.
  constexpr Scalar as_real() const {
    return infinite_ ? std::numeric_limits<Scalar>::infinity() : value_;
  }

  constexpr ExtendedRealT& operator+=(const ExtendedRealT& o) {
    infinite_ = infinite_ || o.infinite_;
    if (!infinite_) value_ += o.value_;
    return *this;
  }
  friend constexpr ExtendedRealT operator+(ExtendedRealT a, const ExtendedRealT& b) { return a += b; }

  /// Scaling by a positive mass keeps the pole.
  friend constexpr ExtendedRealT operator*(Scalar m, ExtendedRealT a) {
    if (!a.infinite_) a.value_ *= m;
    return a;
  }

  friend constexpr bool operator<(const ExtendedRealT& a, const ExtendedRealT& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator==(const ExtendedRealT& a, const ExtendedRealT& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Scalar value_{0};
  bool infinite_{false};
};

using ExtendedReal = ExtendedRealT<double>;

/// Coincidence radius below which the Green function is reported as its pole.
inline constexpr double kPoleRadius = 1e-15;

template <typename Scalar>
inline bool in_open_disk(const ComplexT<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::norm(z) < Scalar(1);
}

template <typename Scalar>
inline void require_disk_point(const ComplexT<Scalar>& z, const char* what) {
  if (!in_open_disk(z)) {
    throw DomainError(std::string(what) + ": point (" + std::to_string(double(z.real())) + ", " +
                      std::to_string(double(z.imag())) + ") is not in the open unit disk");
  }
}

/// Green function of the unit disk, g(z, zeta) = log |1 - conj(zeta) z| / |z - zeta|.
///
/// Evaluated as 0.5 * log1p((1-|z|^2)(1-|zeta|^2) / |z-zeta|^2), which uses the identity
/// |1 - conj(zeta) z|^2 - |z - zeta|^2 = (1-|z|^2)(1-|zeta|^2). This keeps full relative
/// accuracy when g is small (points near the unit circle) and is symmetric bit for bit.
template <typename Scalar>
ExtendedRealT<Scalar> green_disk(const ComplexT<Scalar>& z, const ComplexT<Scalar>& zeta) {
  require_disk_point(z, "green_disk");
  require_disk_point(zeta, "green_disk");
  const Scalar d2 = std::norm(z - zeta);
  if (d2 < Scalar(kPoleRadius * kPoleRadius)) return ExtendedRealT<Scalar>::infinity();
  const Scalar num = (Scalar(1) - std::norm(z)) * (Scalar(1) - std::norm(zeta));
  return ExtendedRealT<Scalar>(Scalar(0.5) * std::log1p(num / d2));
}

/// Unchecked Green function for inner loops: caller guarantees both points are in D.
/// Returns IEEE +inf on the pole.
template <typename Scalar>
inline Scalar green_disk_unchecked(const ComplexT<Scalar>& z, const ComplexT<Scalar>& zeta) {
  const Scalar dx = z.real() - zeta.real();
  const Scalar dy = z.imag() - zeta.imag();
  const Scalar d2 = dx * dx + dy * dy;
  if (d2 < Scalar(kPoleRadius * kPoleRadius)) return std::numeric_limits<Scalar>::infinity();
  const Scalar num = (Scalar(1) - std::norm(z)) * (Scalar(1) - std::norm(zeta));
  return Scalar(0.5) * std::log1p(num / d2);
}

/// Gradient of z -> g(z, zeta) as a complex number (d/dx + i d/dy).
template <typename Scalar>
inline ComplexT<Scalar> green_disk_gradient(const ComplexT<Scalar>& z, const ComplexT<Scalar>& zeta) {
  // g = log|1 - conj(zeta) z| - log|z - zeta|; grad log|f| = conj(f'/f) for holomorphic f.
  const ComplexT<Scalar> w = -std::conj(zeta) / (Scalar(1) - std::conj(zeta) * z) - Scalar(1) / (z - zeta);
  return std::conj(w);
}

/// Pseudohyperbolic distance |z - zeta| / |1 - conj(zeta) z|, in [0, 1).
template <typename Scalar>
Scalar pseudo_distance(const ComplexT<Scalar>& z, const ComplexT<Scalar>& zeta) {
  require_disk_point(z, "pseudo_distance");
  require_disk_point(zeta, "pseudo_distance");
  return std::abs(z - zeta) / std::abs(Scalar(1) - std::conj(zeta) * z);
}

/// Disk automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z). Sends a to 0.
template <typename Scalar>
class MoebiusMapT {
 public:
  MoebiusMapT() = default;
  MoebiusMapT(ComplexT<Scalar> a, Scalar theta) : a_(a), theta_(theta) {
    if (!in_open_disk(a)) throw DomainError("MoebiusMap: |a| must be < 1");
    if (!std::isfinite(theta)) throw DomainError("MoebiusMap: non-finite rotation");
  }

  static MoebiusMapT identity() { return MoebiusMapT(); }

  const ComplexT<Scalar>& a() const { return a_; }
  Scalar theta() const { return theta_; }

  ComplexT<Scalar> operator()(const ComplexT<Scalar>& z) const {
    require_disk_point(z, "apply_moebius");
    return std::polar(Scalar(1), theta_) * (z - a_) / (Scalar(1) - std::conj(a_) * z);
  }

  /// The inverse automorphism, again of the form e^{i t}(z - b)/(1 - conj(b) z).
  MoebiusMapT inverse() const { return MoebiusMapT(-a_ * std::polar(Scalar(1), theta_), -theta_); }

 private:
  ComplexT<Scalar> a_{0, 0};
  Scalar theta_{0};
};

using MoebiusMap = MoebiusMapT<double>;

template <typename Scalar>
ComplexT<Scalar> apply_moebius(const MoebiusMapT<Scalar>& m, const ComplexT<Scalar>& z) {
  return m(z);
}

/// Cayley map of the upper half-plane onto D, w -> (w - i)/(w + i).
template <typename Scalar>
ComplexT<Scalar> halfplane_to_disk(const ComplexT<Scalar>& w) {
  if (!(w.imag() > Scalar(0)) || !std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw DomainError("halfplane_to_disk: Im(w) must be > 0");
  }
  const ComplexT<Scalar> i(0, 1);
  return (w - i) / (w + i);
}

/// Inverse Cayley map, z -> i (1 + z)/(1 - z).
template <typename Scalar>
ComplexT<Scalar> disk_to_halfplane(const ComplexT<Scalar>& z) {
  require_disk_point(z, "disk_to_halfplane");
  return ComplexT<Scalar>(0, 1) * (Scalar(1) + z) / (Scalar(1) - z);
}

/// Modulus of the half-plane Blaschke factor (w - w0)/(w - conj(w0)).
template <typename Scalar>
Scalar halfplane_factor_modulus(const ComplexT<Scalar>& w, const ComplexT<Scalar>& w0) {
  if (!(w.imag() > 0) || !(w0.imag() > 0)) throw DomainError("halfplane_factor_modulus: Im must be > 0");
  return std::abs(w - w0) / std::abs(w - std::conj(w0));
}

}  // namespace greenpot

#endif  // GREENPOT_GEOMETRY_HPP
