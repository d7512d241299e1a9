#include "greenpot/blaschke.hpp"
#include "greenpot/potentials.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace greenpot;
using oracle::Gen;

namespace {

BlaschkeProduct zeros_of(std::initializer_list<Complex> z, double theta = 0.0) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(z.size()));
  Eigen::Index k = 0;
  for (const auto& p : z) v[k++] = p;
  return BlaschkeProduct(v, theta);
}

Complex direct_product(const BlaschkeProduct& B, const Complex& z) {
  Complex p = std::polar(1.0, B.theta());
  for (Eigen::Index k = 0; k < B.zeros().size(); ++k) {
    const Complex a = B.zeros()[k];
    p *= (z - a) / (1.0 - std::conj(a) * z);
  }
  return p;
}

BlaschkeProduct random_product(Gen& gen, int degree) {
  Eigen::VectorXcd v(degree);
  for (int k = 0; k < degree; ++k) v[k] = gen.disk_point(0.95);
  return BlaschkeProduct(v, gen.uniform(-3, 3));
}

}  // namespace

TEST_CASE("blaschke_eval examples") {
  Gen gen(701);
  const auto id = zeros_of({Complex(0, 0)});
  for (int i = 0; i < 50; ++i) {
    const Complex z = gen.disk_point(1.0);
    CHECK(std::abs(blaschke_eval(id, z) - z) < 1e-15);
  }
  const auto B = random_product(gen, 7);
  for (int i = 0; i < 100; ++i) {
    CHECK(std::abs(std::abs(blaschke_eval(B, std::polar(1.0, gen.uniform(0, 7)))) - 1.0) < 1e-12);
  }
  CHECK(blaschke_log_modulus(zeros_of({{0.5, 0}, {-0.5, 0}}), Complex(0, 0)) ==
        doctest::Approx(std::log(0.25)).epsilon(1e-14));
  CHECK(std::isinf(blaschke_log_modulus(zeros_of({{0.5, 0}}), Complex(0.5, 0))));
}

TEST_CASE("evaluation agrees with the direct product in both regimes") {
  Gen gen(702);
  for (int degree : {3, 20, kLogFormDegree, 80}) {
    const auto B = random_product(gen, degree);
    for (int i = 0; i < 50; ++i) {
      const Complex z = gen.disk_point(0.999);
      const Complex ref = direct_product(B, z);
      CHECK(std::abs(blaschke_eval(B, z) - ref) < 1e-10 * std::max(1e-300, std::abs(ref)) + 1e-300);
      CHECK(blaschke_log_modulus(B, z) == doctest::Approx(std::log(std::abs(ref))).epsilon(1e-9));
      CHECK(blaschke_log_modulus(B, z) ==
            doctest::Approx(-degree * green_potential(B.zero_measure(), z).value()).epsilon(1e-9));
    }
  }
}

TEST_CASE("product of factors multiplies values") {
  Gen gen(703);
  const auto A = random_product(gen, 3), B = random_product(gen, 4);
  const auto AB = A * B;
  CHECK(AB.degree() == 7);
  for (int i = 0; i < 50; ++i) {
    const Complex z = gen.disk_point(0.99);
    CHECK(std::abs(blaschke_eval(AB, z) - blaschke_eval(A, z) * blaschke_eval(B, z)) < 1e-13);
  }
}

TEST_CASE("sup_norm examples") {
  const auto E = CompactSet::disk(0.5);
  CHECK(sup_norm(zeros_of({{0.5, 0}}), E) == doctest::Approx(0.8).epsilon(1e-12));
  Gen gen(704);
  for (int i = 0; i < 200; ++i) {
    const double r = gen.uniform(0.1, 0.9);
    const Complex a = gen.disk_point(0.95);
    const double rho = std::abs(a);
    CHECK(sup_norm(zeros_of({a}), CompactSet::disk(r)) == doctest::Approx((rho + r) / (1 + r * rho)).epsilon(1e-12));
  }
  for (int n : {1, 5, 20}) {
    Eigen::VectorXcd z = Eigen::VectorXcd::Zero(n);
    CHECK(sup_norm(BlaschkeProduct(z), E) == doctest::Approx(std::pow(0.5, n)).epsilon(1e-12));
  }
  CHECK(sup_norm(BlaschkeProduct(Eigen::VectorXcd(0), 1.0), E) == 1.0);
}

TEST_CASE("sup_norm matches dense boundary search on a polygon") {
  const auto E = CompactSet::square(0.3);
  const auto dense = oracle::dense_boundary(E, 100000);
  Gen gen(705);
  for (int i = 0; i < 30; ++i) {
    const auto B = random_product(gen, gen.integer(1, 10));
    double ref = 0.0;
    for (const auto& p : dense) ref = std::max(ref, std::abs(direct_product(B, p)));
    const double got = sup_norm(B, E);
    CHECK(got >= ref * (1 - 1e-12));
    CHECK(got <= ref * (1 + 1e-6));
  }
}

TEST_CASE("monomial reduction slack") {
  for (double r : {0.2, 0.5, 0.8}) {
    const auto E = CompactSet::disk(r);
    const auto rep = constants_report(E);
    for (int n : {1, 4, 20, 64}) {
      const auto check = verify_product_inequality({BlaschkeProduct(Eigen::VectorXcd::Zero(n))}, E, rep);
      CHECK(std::abs(check.slack - n * std::log(2 / (1 + r * r))) < 1e-10);
    }
  }
}

TEST_CASE("product inequality holds on random factorizations") {
  const auto E = CompactSet::disk(0.5);
  const auto rep = constants_report(E);
  std::mt19937_64 rng(706);
  for (int t = 0; t < 500; ++t) {
    const auto factors = random_factorization(rng, 20);
    int deg = 0;
    for (const auto& f : factors) deg += f.degree();
    CHECK(deg == 20);
    const auto check = verify_product_inequality(factors, E, rep);
    CHECK(check.degree == 20);
    CHECK(check.slack >= -1e-6);
  }
}

TEST_CASE("extremal sweep follows the closed-form chain on D_0.5") {
  const double r = 0.5, sigma = 1.0 / 3;
  const auto E = CompactSet::disk(r);
  const auto rep = constants_report(E);
  CHECK_THROWS_AS(extremal_sweep(E, {8, 4}, rep), std::invalid_argument);
  const auto rows = extremal_sweep(E, {4, 8, 16, 32}, rep);
  REQUIRE(rows.size() == 4);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    const int n = row.n;
    if (i > 0) CHECK(n > rows[i - 1].n);
    const double norm = oracle::equally_spaced_product_norm(r, n);
    const double factor = 2 * r / (1 + r * r);
    CHECK(row.product_norm == doctest::Approx(norm).epsilon(1e-9));
    CHECK(row.factor_norm_product == doctest::Approx(std::pow(factor, n)).epsilon(1e-9));
    const double ratio = factor * std::pow(2.0, -sigma / n) * std::pow(r, -sigma) *
                         std::pow(1 + std::pow(r, 2 * n), sigma / n);
    CHECK(row.ratio == doctest::Approx(ratio).epsilon(1e-9));
    CHECK(row.target_e_minus_c == doctest::Approx(std::exp(-oracle::disk_constant(r))).epsilon(1e-14));
    CHECK(row.ratio <= row.target_e_minus_c + 1e-6);
  }
}
