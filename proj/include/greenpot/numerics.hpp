#ifndef GREENPOT_NUMERICS_HPP
#define GREENPOT_NUMERICS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>

namespace greenpot {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Golub-Welsch: nodes are eigenvalues of the Jacobi matrix, weights 2 * v0^2.
GaussRule gauss_legendre(int order);

/// Integral of f over [a, b] using composite Gauss-Legendre panels.
template <typename F>
double integrate_panels(F&& f, double a, double b, int panels, const GaussRule& rule) {
  double sum = 0.0;
  const double w = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * w;
    const double half = 0.5 * w;
    const double mid = lo + half;
    double panel = 0.0;
    for (Eigen::Index k = 0; k < rule.nodes.size(); ++k) panel += rule.weights[k] * f(mid + half * rule.nodes[k]);
    sum += half * panel;
  }
  return sum;
}

/// Golden-section minimization of f on [lo, hi] for a fixed number of iterations.
/// Returns (argmin, value) of the best point seen.
std::pair<double, double> golden_section_minimize(const std::function<double(double)>& f, double lo, double hi,
                                                  int iterations);

/// Decimal rendering with 12 significant digits ("%.12g"); the one number format used
/// in every CSV and structured record.
std::string format_decimal(double x);
/// x rounded to the value format_decimal prints.
double round_decimal(double x);

/// Number of worker threads: GREENPOT_THREADS when set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs body(i) for i in [0, count) on worker_count() threads with static chunking.
/// Each index must write only its own output slot; reductions happen after the call.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace greenpot

#endif  // GREENPOT_NUMERICS_HPP
