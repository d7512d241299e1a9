#ifndef GREENPOT_BLASCHKE_HPP
#define GREENPOT_BLASCHKE_HPP

#include "greenpot/compact_set.hpp"
#include "greenpot/constants.hpp"
#include "greenpot/equilibrium.hpp"
#include "greenpot/potentials.hpp"

#include <Eigen/Dense>

#include <random>
#include <vector>

namespace greenpot {

/// B(z) = e^{i theta} prod_j (z - z_j) / (1 - conj(z_j) z).
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(Eigen::VectorXcd zeros, double theta = 0.0);

  const Eigen::VectorXcd& zeros() const { return zeros_; }
  double theta() const { return theta_; }
  int degree() const { return static_cast<int>(zeros_.size()); }

  /// Product of the factors' zero lists; rotations add.
  BlaschkeProduct operator*(const BlaschkeProduct& other) const;

  /// Normalized zero counting measure (1/n) sum delta_{z_j}.
  DiscreteMeasure zero_measure() const { return DiscreteMeasure::uniform(zeros_); }

 private:
  Eigen::VectorXcd zeros_;
  double theta_ = 0.0;
};

/// Degree at and above which evaluations go through the log-modulus.
inline constexpr int kLogFormDegree = 32;

/// B(z) for |z| <= 1.
Complex blaschke_eval(const BlaschkeProduct& B, const Complex& z);
/// log|B(z)| for |z| <= 1 (-inf at zeros). Equals -degree * U^{nu_B}(z) inside D.
double blaschke_log_modulus(const BlaschkeProduct& B, const Complex& z);

/// log ||B||_E. Zero-free products (pure rotations) have norm 1.
double log_sup_norm(const BlaschkeProduct& B, const CompactSet& E);
double sup_norm(const BlaschkeProduct& B, const CompactSet& E);

/// prod ||B_k||_E <= e^{-nC} ||prod B_k||_E^{sigma}, compared in log form.
struct ProductInequalityCheck {
  double log_lhs = 0.0;
  double log_rhs = 0.0;
  double slack = 0.0;  // log_rhs - log_lhs
  int degree = 0;
};

ProductInequalityCheck verify_product_inequality(const std::vector<BlaschkeProduct>& factors, const CompactSet& E,
                                                 const ConstantsReport& report);

struct ExtremalSweepRow {
  int n = 0;
  double product_norm = 0.0;         // ||prod b_k||_E
  double factor_norm_product = 0.0;  // prod ||b_k||_E
  double ratio = 0.0;                // (prod ||b_k|| / ||prod b_k||^sigma)^{1/n}
  double target_e_minus_c = 0.0;     // e^{-C}
  double moment_gap = 0.0;           // weak_star_distance(tau_n, mu_E, K)
  bool converged = true;
};

struct ExtremalOptions {
  FeketeOptions fekete;
  int moment_order = 4;
};

/// Single-zero factors at the n-th Fekete points of E, for each n in n_list.
std::vector<ExtremalSweepRow> extremal_sweep(const CompactSet& E, const std::vector<int>& n_list,
                                             const ConstantsReport& report, const ExtremalOptions& options = {});

/// Random zero set of the given degree (uniform in |z| <= radius), split into a random
/// number of nonempty factors.
std::vector<BlaschkeProduct> random_factorization(std::mt19937_64& rng, int degree = 20, double radius = 0.95);

}  // namespace greenpot

#endif  // GREENPOT_BLASCHKE_HPP
