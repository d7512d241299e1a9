#include "greenpot/compact_set.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace greenpot;
using oracle::Gen;

namespace {
std::vector<Complex> square_vertices(double h) { return {{h, -h}, {h, h}, {-h, h}, {-h, -h}}; }
}  // namespace

TEST_CASE("boundary_sample examples") {
  // resolution 4 is below the minimum of 16; every 4th point of 16 is the same set.
  CHECK_THROWS_AS(CompactSet::disk(0.5, 4), std::invalid_argument);
  const auto d = boundary_sample(CompactSet::disk(0.5, 16));
  CHECK(d.points.size() == 16);
  const Complex expected[4] = {{0.5, 0}, {0, 0.5}, {-0.5, 0}, {0, -0.5}};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(d.points[4 * k] - expected[k]) < 1e-15);

  const auto c = boundary_sample(CompactSet::cloud({{0.1, 0}, {0.2, 0}}));
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0] == Complex(0.1, 0));
  CHECK(c.points[1] == Complex(0.2, 0));

  const auto s = boundary_sample(CompactSet::square(0.3, 16));
  REQUIRE(s.points.size() == 16);
  int per_side[4] = {0, 0, 0, 0};
  for (Eigen::Index k = 0; k < s.points.size(); ++k) {
    const Complex p = s.points[k];
    if (std::abs(p.real() - 0.3) < 1e-12 && p.imag() < 0.3 - 1e-12) ++per_side[0];
    else if (std::abs(p.imag() - 0.3) < 1e-12 && p.real() > -0.3 + 1e-12) ++per_side[1];
    else if (std::abs(p.real() + 0.3) < 1e-12 && p.imag() > -0.3 + 1e-12) ++per_side[2];
    else if (std::abs(p.imag() + 0.3) < 1e-12) ++per_side[3];
  }
  for (int k = 0; k < 4; ++k) CHECK(per_side[k] == 4);
}

TEST_CASE("boundary_sample weights integrate the boundary length") {
  const auto d = CompactSet::disk(0.4, 128);
  CHECK(boundary_sample(d).weights.sum() == doctest::Approx(2 * oracle::kPi * 0.4).epsilon(1e-13));
  const auto s = CompactSet::square(0.3, 64);
  CHECK(boundary_sample(s).weights.sum() == doctest::Approx(2.4).epsilon(1e-13));
  CHECK(s.boundary_length() == doctest::Approx(2.4).epsilon(1e-14));
}

TEST_CASE("construction rejects invalid sets") {
  CHECK_THROWS_AS(CompactSet::disk(1.0), std::invalid_argument);
  CHECK_THROWS_AS(CompactSet::disk(0.0), std::invalid_argument);
  CHECK_THROWS_AS(CompactSet::disk(0.5, 8), std::invalid_argument);
  CHECK_THROWS_AS(CompactSet::cloud({}), std::invalid_argument);
  CHECK_THROWS_AS(CompactSet::cloud({{1.0, 0.0}}), std::invalid_argument);
  // clockwise orientation
  CHECK_THROWS_AS(CompactSet::polygon({{0.3, 0.3}, {0.3, -0.3}, {-0.3, -0.3}, {-0.3, 0.3}}), std::invalid_argument);
  // self-intersecting bow tie
  CHECK_THROWS_AS(CompactSet::polygon({{0.3, -0.3}, {-0.3, 0.3}, {0.3, 0.3}, {-0.3, -0.3}}), std::invalid_argument);
  // vertex outside the unit disk
  CHECK_THROWS_AS(CompactSet::polygon({{0.9, -0.9}, {0.9, 0.9}, {-0.9, 0.9}}), std::invalid_argument);
  CHECK_NOTHROW(CompactSet::polygon(square_vertices(0.3)));
}

TEST_CASE("contains examples") {
  CHECK(contains(CompactSet::disk(0.5), Complex(0.3, 0)));
  CHECK_FALSE(contains(CompactSet::disk(0.5), Complex(0.7, 0)));
  CHECK(contains(CompactSet::square(0.3), Complex(0, 0)));
  CHECK(contains(CompactSet::cloud({{0.1, 0.1}}), Complex(0.1, 0.1)));
  CHECK_FALSE(contains(CompactSet::cloud({{0.1, 0.1}}), Complex(0.1, 0.2)));
}

TEST_CASE("contains agrees with an even-odd oracle on a nonconvex polygon") {
  const std::vector<Complex> v = {{0.5, -0.4}, {0.5, 0.4}, {0.0, 0.1}, {-0.5, 0.4}, {-0.5, -0.4}};
  const auto E = CompactSet::polygon(v);
  Gen gen(201);
  for (int i = 0; i < 5000; ++i) {
    const Complex z = gen.disk_point(0.8);
    CHECK(contains(E, z) == oracle::inside_polygon(v, z));
  }
}

TEST_CASE("project examples") {
  CHECK(std::abs(project(CompactSet::disk(0.5), Complex(0.8, 0)) - Complex(0.5, 0)) < 1e-15);
  CHECK(project(CompactSet::disk(0.5), Complex(0.1, 0.2)) == Complex(0.1, 0.2));
  CHECK(std::abs(project(CompactSet::square(0.3), Complex(0.5, 0)) - Complex(0.3, 0)) < 1e-15);
}

TEST_CASE("project matches a dense boundary search and is idempotent") {
  const auto E = CompactSet::polygon({{0.5, -0.4}, {0.5, 0.4}, {0.0, 0.1}, {-0.5, 0.4}, {-0.5, -0.4}});
  const auto dense = oracle::dense_boundary(E, 200000);
  Gen gen(202);
  for (int i = 0; i < 300; ++i) {
    const Complex z = gen.disk_point(0.95);
    const Complex p = project(E, z);
    CHECK(contains(E, p));
    CHECK(std::abs(project(E, p) - p) < 1e-12);
    if (contains(E, z)) {
      CHECK(p == z);
    } else {
      const double best = oracle::dense_min(dense, [&](const Complex& q) { return std::abs(q - z); });
      CHECK(std::abs(p - z) <= best + 1e-12);
      CHECK(std::abs(p - z) >= best - 1e-5);
    }
  }
}

TEST_CASE("boundary parametrization round trip") {
  Gen gen(203);
  const auto E = CompactSet::square(0.3);
  const auto D = CompactSet::disk(0.6);
  for (int i = 0; i < 500; ++i) {
    const double t = gen.uniform(0.0, 1.0);
    CHECK(std::abs(E.boundary_point(t) - oracle::polygon_point(std::get<JordanPolygon>(E.shape()).vertices, t)) <
          1e-14);
    CHECK(std::abs(E.boundary_param(E.boundary_point(t)) - t) < 1e-12);
    CHECK(std::abs(D.boundary_point(t) - std::polar(0.6, 2 * oracle::kPi * t)) < 1e-14);
  }
}

TEST_CASE("feature sizes") {
  CHECK(CompactSet::disk(0.5).feature_size() == 0.5);
  CHECK(CompactSet::square(0.3).feature_size() == doctest::Approx(0.6));
  CHECK(CompactSet::cloud({{0.1, 0}, {0.2, 0}, {0.5, 0}}).feature_size() == doctest::Approx(0.1));
  CHECK(CompactSet::cloud({{0.1, 0}}).is_singleton());
}
