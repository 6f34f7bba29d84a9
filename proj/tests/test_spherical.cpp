#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "crossnum/formulas.hpp"
#include "crossnum/spherical.hpp"

#include <cmath>

using namespace crossnum;
using namespace crossnum::sphere;

namespace {

const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

struct Rotation {
  double m[3][3];
  UnitVector apply(const UnitVector& u) const {
    return {m[0][0] * u.x + m[0][1] * u.y + m[0][2] * u.z, m[1][0] * u.x + m[1][1] * u.y + m[1][2] * u.z,
            m[2][0] * u.x + m[2][1] * u.y + m[2][2] * u.z};
  }
};

// Rotation from a random unit quaternion.
Rotation random_rotation(Rng& rng) {
  std::normal_distribution<double> g;
  double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
  const double len = std::sqrt(w * w + x * x + y * y + z * z);
  w /= len, x /= len, y /= len, z /= len;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

// Counts vertex-disjoint edge pairs by listing the edges of the balanced graph.
std::int64_t disjoint_pairs_oracle(int r, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < r * n; ++u)
    for (int v = u + 1; v < r * n; ++v)
      if (u / n != v / n) edges.emplace_back(u, v);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [a, b] = edges[i];
      const auto [c, d] = edges[j];
      if (a != c && a != d && b != c && b != d) ++count;
    }
  return count;
}

}  // namespace

TEST_CASE("sampling") {
  Rng rng = make_rng(42);
  double sx = 0, sy = 0, sz = 0;
  const int samples = 1'000'000;
  for (int i = 0; i < samples; ++i) {
    const auto u = sample_uniform_sphere(rng);
    REQUIRE(std::abs(u.norm() - 1.0) < 1e-12);
    sx += u.x;
    sy += u.y;
    sz += u.z;
  }
  const double sigma = 1.0 / std::sqrt(3.0 * samples);
  CHECK(std::abs(sx / samples) < 4 * sigma);
  CHECK(std::abs(sy / samples) < 4 * sigma);
  CHECK(std::abs(sz / samples) < 4 * sigma);

  Rng a = make_rng(42), b = make_rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto p = sample_uniform_sphere(a), q = sample_uniform_sphere(b);
    CHECK(p.x == q.x);
    CHECK(p.y == q.y);
    CHECK(p.z == q.z);
  }
}

TEST_CASE("arcs_cross examples") {
  const UnitVector ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  const UnitVector p{kInvSqrt3, kInvSqrt3, kInvSqrt3}, q{kInvSqrt3, kInvSqrt3, -kInvSqrt3};
  CHECK(arcs_cross(ex, ey, p, q));
  CHECK_FALSE(arcs_cross(ex, ey, ez, p));
  CHECK_FALSE(arcs_cross(ex, ey, ey, ez));
  CHECK_THROWS_AS(arcs_cross(ex, UnitVector{-1, 0, 0}, ey, ez), DegenerateArc);
  CHECK_THROWS_AS(arcs_cross(ex, ex, ey, ez), DegenerateArc);
  CHECK_THROWS_AS(arcs_cross(ex, ey, UnitVector::normalized(1, 1, 0), UnitVector::normalized(-1, 2, 0)), DegenerateArc);
  CHECK_THROWS_AS(UnitVector::normalized(0, 0, 0), std::domain_error);
}

TEST_CASE("arcs_cross is rotation invariant") {
  Rng rng = make_rng(7);
  int crossings = 0;
  for (int i = 0; i < 20'000; ++i) {
    const UnitVector a1 = sample_uniform_sphere(rng), a2 = sample_uniform_sphere(rng);
    const UnitVector b1 = sample_uniform_sphere(rng), b2 = sample_uniform_sphere(rng);
    const bool base = arcs_cross(a1, a2, b1, b2);
    crossings += base;
    const Rotation rot = random_rotation(rng);
    CHECK(arcs_cross(rot.apply(a1), rot.apply(a2), rot.apply(b1), rot.apply(b2)) == base);
    CHECK(arcs_cross(b2, b1, a1, a2) == base);
  }
  CHECK(crossings > 0);
}

TEST_CASE("count_geodesic_crossings examples") {
  SphericalDrawing d;
  d.part_sizes = {1, 1};
  d.part_of = {0, 1};
  d.positions = {UnitVector{1, 0, 0}, UnitVector{0, 1, 0}};
  CHECK(count_geodesic_crossings(d) == 0);

  SphericalDrawing k22;
  k22.part_sizes = {2, 2};
  k22.part_of = {0, 0, 1, 1};
  k22.positions = {UnitVector{1, 0, 0}, UnitVector{-1, 0, 0}, UnitVector{0, 1, 0}, UnitVector{0, -1, 0}};
  CHECK_THROWS_AS(count_geodesic_crossings(k22), DegenerateArc);
}

TEST_CASE("random drawings never report FOUR or THREE_ONE crossings") {
  Rng rng = make_rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_drawing({3, 2, 4, 2}, rng);
    const auto r = classify_geodesic_crossings(d);
    std::int64_t sum = 0;
    for (const auto& [t, c] : r.by_type) {
      CHECK(t != geom::PartitionType::kFour);
      CHECK(t != geom::PartitionType::kThreeOne);
      sum += c;
    }
    CHECK(sum == r.total);
  }
}

TEST_CASE("disjoint_edge_pairs and exact expectation") {
  CHECK(disjoint_edge_pairs(2, 2) == 2);
  CHECK(disjoint_edge_pairs(2, 1) == 0);
  CHECK(disjoint_edge_pairs(3, 1) == 0);
  for (int r = 2; r <= 5; ++r)
    for (int n = 1; n <= 4; ++n) CHECK(disjoint_edge_pairs(r, n) == disjoint_pairs_oracle(r, n));
  CHECK(exact_expected_crossings(2, 2) == Rational(1, 4));
  CHECK(exact_expected_crossings(3, 1) == Rational(0));
  CHECK(exact_expected_crossings(3, 3) == Rational(disjoint_pairs_oracle(3, 3), 8));
}

TEST_CASE("ratio_to_max") {
  CHECK(abs(ratio_to_max(2, 1000) - Rational(1, 4)) < Rational(1, 1000));
  CHECK(abs(ratio_to_max(3, 1000) - Rational(1, 4)) < Rational(1, 1000));
  CHECK(abs(ratio_to_max(4, 1000) - Rational(9, 34)) < Rational(1, 1000));
  CHECK_THROWS_AS(ratio_to_max(3, 1), DivisionByZero);
  // For two and three parts the ratio already equals zeta at every n.
  for (int n = 2; n <= 100; ++n) {
    CHECK(ratio_to_max(2, n) == formulas::zeta(2));
    CHECK(ratio_to_max(3, n) == formulas::zeta(3));
  }
  for (int r = 4; r <= 6; ++r) {
    const Rational z = formulas::zeta(r);
    CHECK(abs(ratio_to_max(r, 100) - z) < abs(ratio_to_max(r, 4) - z));
    for (int n = 4; n < 100; ++n) CHECK(abs(ratio_to_max(r, n + 1) - z) < abs(ratio_to_max(r, n) - z));
  }
}

TEST_CASE("Monte Carlo agrees with the exact expectation") {
  const auto k22 = monte_carlo_s(2, 2, 200'000, 5);
  CHECK(std::abs(k22.mean - 0.25) < 4 * k22.std_error);
  CHECK(k22.trials == 200'000);
  CHECK(k22.seed == 5);
  const auto tri = monte_carlo_s(3, 1, 1000, 5);
  CHECK(tri.mean == 0.0);
  CHECK(tri.std_error == 0.0);
  for (int r = 2; r <= 4; ++r)
    for (int n : {1, 2, 4}) {
      const auto e = monte_carlo_s(r, n, 4000, 100 + r * 10 + n);
      const double exact = exact_expected_crossings(r, n).to_double();
      if (exact == 0.0) {
        CHECK(e.mean == 0.0);
      } else {
        CHECK(std::abs(e.mean - exact) < 4 * e.std_error);
      }
    }
}

TEST_CASE("Monte Carlo is reproducible per worker count") {
  const auto a = monte_carlo_s(3, 3, 3000, 9, 1);
  const auto b = monte_carlo_s(3, 3, 3000, 9, 1);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  const auto c = monte_carlo_s(3, 3, 3000, 9, 3);
  const auto d = monte_carlo_s(3, 3, 3000, 9, 3);
  CHECK(c.mean == d.mean);
  CHECK_THROWS_AS(monte_carlo_s(3, 3, 0, 1), std::invalid_argument);
}

TEST_CASE("pair crossing probability is 1/8") {
  const auto e = pair_crossing_probability(400'000, 13, 2);
  CHECK(std::abs(e.mean - 0.125) < 4 * e.std_error);
}
