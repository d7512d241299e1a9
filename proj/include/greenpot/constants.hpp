#ifndef GREENPOT_CONSTANTS_HPP
#define GREENPOT_CONSTANTS_HPP

#include "greenpot/compact_set.hpp"
#include "greenpot/equilibrium.hpp"
#include "greenpot/potentials.hpp"
#include "greenpot/riesz.hpp"

#include <optional>
#include <random>
#include <variant>
#include <vector>

namespace greenpot {

/// Radially symmetric sigma of a concentric disk, integrated in closed form.
struct RadialSigma {
  double r;
};

using SigmaSource = std::variant<GridDensity, RadialSigma>;

/// The sharp constant C_E computed two ways, plus the inputs it depends on.
struct ConstantsReport {
  std::string set_kind;
  double robin = 0.0;
  double sigma_mass = 0.0;
  double c_route_a = 0.0;  // int -log d_E dmu_E - V sigma(D)
  double c_route_b = 0.0;  // int (U^{mu_E} - V) dsigma
  std::optional<double> c_closed;
  double discrepancy = 0.0;
  EquilibriumResult equilibrium;
  double clipped_mass = 0.0;

  /// Value used downstream: the closed form when available, else route a.
  double constant() const { return c_closed ? *c_closed : c_route_a; }
};

struct ConstantsOptions {
  int fekete_n = 64;
  FeketeOptions fekete;
  GridSpec grid;
};

double c_constant_route_a(const CompactSet& E, const EquilibriumResult& eq, double mass);
double c_constant_route_b(const CompactSet& E, const EquilibriumResult& eq, const SigmaSource& sigma);
double c_constant_disk(double r);
/// log of the base of the concentric-disk product bound, 2 r^{2r/(r+1)} / (1 + r^2).
double disk_product_bound_log(double r);

ConstantsReport constants_report(const CompactSet& E, const ConstantsOptions& options = {});

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

/// sum_k inf_E U^{nu_k} >= C + sigma(D) inf_E sum_k U^{nu_k}. The measures must sum to
/// unit mass.
InequalityCheck verify_sharp_inequality(const std::vector<DiscreteMeasure>& measures, const CompactSet& E,
                                        const ConstantsReport& report);

/// The weaker bound sum_k inf_E U^{nu_k} >= 0 >= -V + inf_E sum_k U^{nu_k}.
InequalityCheck verify_basic_inequality(const std::vector<DiscreteMeasure>& measures, const CompactSet& E,
                                        double robin);

/// Random measure family: 1..max_atoms atoms uniform in |z| <= radius, Dirichlet(1)
/// masses summing to 1, split into a random number of nonempty groups.
std::vector<DiscreteMeasure> random_measure_family(std::mt19937_64& rng, int max_atoms = 64, double radius = 0.95);

/// Unit point masses of weight 1/n at each Fekete point.
std::vector<DiscreteMeasure> fekete_split(const FeketeResult& f);

}  // namespace greenpot

#endif  // GREENPOT_CONSTANTS_HPP
