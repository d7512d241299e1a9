#include "greenpot/blaschke.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace greenpot {

BlaschkeProduct::BlaschkeProduct(Eigen::VectorXcd zeros, double theta) : zeros_(std::move(zeros)), theta_(theta) {
  if (!std::isfinite(theta_)) throw std::invalid_argument("BlaschkeProduct: non-finite theta");
  for (Eigen::Index k = 0; k < zeros_.size(); ++k) {
    const Complex& a = zeros_[k];
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || std::abs(a) > kMaxInteriorModulus) {
      throw std::invalid_argument("BlaschkeProduct: zero outside |z| <= 1 - 1e-9");
    }
  }
}

BlaschkeProduct BlaschkeProduct::operator*(const BlaschkeProduct& other) const {
  Eigen::VectorXcd z(zeros_.size() + other.zeros_.size());
  z << zeros_, other.zeros_;
  return BlaschkeProduct(std::move(z), theta_ + other.theta_);
}

Complex blaschke_eval(const BlaschkeProduct& B, const Complex& z) {
  if (!(std::abs(z) <= 1.0)) throw DomainError("blaschke_eval: |z| must be <= 1");
  const Complex rot = std::polar(1.0, B.theta());
  if (B.degree() < kLogFormDegree) {
    Complex w = rot;
    for (Eigen::Index k = 0; k < B.zeros().size(); ++k) {
      const Complex& a = B.zeros()[k];
      w *= (z - a) / (1.0 - std::conj(a) * z);
    }
    return w;
  }
  // Modulus from the log form, argument accumulated from unit phases.
  double log_mod = 0.0;
  Complex phase = rot;
  for (Eigen::Index k = 0; k < B.zeros().size(); ++k) {
    const Complex& a = B.zeros()[k];
    const Complex f = (z - a) / (1.0 - std::conj(a) * z);
    const double m = std::abs(f);
    if (m == 0.0) return Complex(0, 0);
    log_mod += std::log(m);
    phase *= f / m;
  }
  return std::exp(log_mod) * phase;
}

double blaschke_log_modulus(const BlaschkeProduct& B, const Complex& z) {
  if (!(std::abs(z) <= 1.0)) throw DomainError("blaschke_log_modulus: |z| must be <= 1");
  if (in_open_disk(z)) {
    double sum = 0.0;
    for (Eigen::Index k = 0; k < B.zeros().size(); ++k) sum -= green_disk_unchecked(z, B.zeros()[k]);
    return sum;
  }
  return 0.0;  // unimodular on the unit circle
}

double log_sup_norm(const BlaschkeProduct& B, const CompactSet& E) {
  if (B.degree() == 0) return 0.0;
  // log|B| = -n U^{nu_B}: the sup of |B| is the inf of the zero potential.
  const SetMinimum m = inf_over_set(B.zero_measure(), E);
  return -B.degree() * m.value.as_real();
}

double sup_norm(const BlaschkeProduct& B, const CompactSet& E) { return std::exp(log_sup_norm(B, E)); }

ProductInequalityCheck verify_product_inequality(const std::vector<BlaschkeProduct>& factors, const CompactSet& E,
                                                 const ConstantsReport& report) {
  if (factors.empty()) throw std::invalid_argument("verify_product_inequality: no factors");
  BlaschkeProduct product;
  ProductInequalityCheck c;
  for (const auto& B : factors) {
    c.log_lhs += log_sup_norm(B, E);
    product = product * B;
  }
  c.degree = product.degree();
  if (c.degree < 1) throw std::invalid_argument("verify_product_inequality: total degree must be >= 1");
  const double neg_c = E.is_disk() ? disk_product_bound_log(E.disk_radius()) : -report.constant();
  c.log_rhs = c.degree * neg_c + report.sigma_mass * log_sup_norm(product, E);
  c.slack = c.log_rhs - c.log_lhs;
  return c;
}

std::vector<ExtremalSweepRow> extremal_sweep(const CompactSet& E, const std::vector<int>& n_list,
                                             const ConstantsReport& report, const ExtremalOptions& options) {
  if (!E.is_regular()) throw std::invalid_argument("extremal_sweep: E must be a disk or polygon");
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) throw std::invalid_argument("extremal_sweep: n_list must be increasing");
  }
  std::vector<ExtremalSweepRow> rows;
  const double target = std::exp(-report.constant());
  for (int n : n_list) {
    const FeketeResult f = fekete_solve(E, n, options.fekete);
    double log_factor_norms = 0.0;
    for (Eigen::Index k = 0; k < f.points.size(); ++k) {
      // ||b_k||_E = d_E(zero) for a single Blaschke factor.
      log_factor_norms -= farthest_log_distance(E, f.points[k]);
    }
    const double log_product_norm = -n * f.min_potential;
    ExtremalSweepRow row;
    row.n = n;
    row.product_norm = std::exp(log_product_norm);
    row.factor_norm_product = std::exp(log_factor_norms);
    row.ratio = std::exp((log_factor_norms - report.sigma_mass * log_product_norm) / n);
    row.target_e_minus_c = target;
    row.moment_gap = weak_star_distance(f.counting_measure(), report.equilibrium, options.moment_order);
    row.converged = f.converged;
    rows.push_back(row);
  }
  return rows;
}

std::vector<BlaschkeProduct> random_factorization(std::mt19937_64& rng, int degree, double radius) {
  if (degree < 1) throw std::invalid_argument("random_factorization: degree must be >= 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Eigen::VectorXcd zeros(degree);
  for (int k = 0; k < degree; ++k) {
    zeros[k] = std::polar(radius * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
  }
  const int groups = std::uniform_int_distribution<int>(1, degree)(rng);
  std::uniform_int_distribution<int> pick(0, groups - 1);
  std::vector<std::vector<Complex>> members(groups);
  for (int k = 0; k < degree; ++k) members[pick(rng)].push_back(zeros[k]);
  std::vector<BlaschkeProduct> out;
  for (auto& m : members) {
    if (m.empty()) continue;
    out.emplace_back(Eigen::Map<Eigen::VectorXcd>(m.data(), Eigen::Index(m.size())),
                     2.0 * std::numbers::pi * unit(rng));
  }
  return out;
}

}  // namespace greenpot
