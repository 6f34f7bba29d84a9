// Acceptance suite: one PASS/FAIL line per criterion, with its time limit.

#include "crossnum/bounds_search.hpp"
#include "crossnum/constructions.hpp"
#include "crossnum/exact_geom.hpp"
#include "crossnum/formulas.hpp"
#include "crossnum/spherical.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace crossnum;

namespace {

struct Verdict {
  bool passed = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;  // 0: no limit
  std::function<Verdict()> body;
};

Verdict fail(std::string detail) { return {false, std::move(detail)}; }

Verdict identity_a_a3l() {
  for (int a = 1; a <= 50; ++a)
    for (int b = 1; b <= 50; ++b)
      for (int c = 1; c <= 50; ++c)
        if (formulas::bound_A(a, b, c) != formulas::bound_A3L(a, b, c)) {
          return fail("differs at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        }
  return {true, "125000 triples"};
}

Verdict small_cases() {
  const int families[4][2] = {{1, 3}, {2, 3}, {1, 4}, {2, 4}};
  for (std::int64_t n = 1; n <= 1000; ++n) {
    const std::int64_t hp = (n / 2) * ((n - 1) / 2);
    const std::int64_t cited[4] = {2 * hp + n / 2, 4 * hp + n, n * (n - 1), 6 * hp + 2 * n};
    for (int f = 0; f < 4; ++f) {
      const auto [a, b] = families[f];
      if (formulas::bound_A(a, b, n) != cited[f] || formulas::known_small_cr(a, b, n) != cited[f]) {
        return fail("K_{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(n) + "}");
      }
    }
  }
  return {true, "4 families, n <= 1000"};
}

Verdict alternating_drawings() {
  int equal = 0;
  for (int a = 1; a <= 10; ++a)
    for (int b = 1; b <= 10; ++b)
      for (int c = 1; c <= 10; ++c) {
        const auto total = geom::count_crossings(constructions::alternating_3line(a, b, c)).total;
        const Integer bound = formulas::bound_A(a, b, c);
        if (Integer(total) > bound) return fail("count exceeds A at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        if (Integer(total) != bound) return fail("count below A at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
        ++equal;
      }
  const auto k555 = geom::count_crossings(constructions::alternating_3line(5, 5, 5)).total;
  if (k555 != 192) return fail("K_{5,5,5} gave " + std::to_string(k555));
  return {true, std::to_string(equal) + " profiles with count == A; K_{5,5,5} = 192"};
}

Verdict convex_and_two_line() {
  for (int r = 2; r <= 5; ++r)
    for (int n = 1; n <= 4; ++n) {
      if (r * n < 3) continue;
      if (Integer(geom::count_crossings(constructions::convex_max(r, n)).total) != formulas::crmax(r, n)) {
        return fail("convex_max(" + std::to_string(r) + "," + std::to_string(n) + ")");
      }
    }
  for (int n = 1; n <= 15; ++n)
    for (int m = 1; m <= 15; ++m)
      if (Integer(geom::count_crossings(constructions::two_line(n, m)).total) != formulas::zarankiewicz_Z(n, m)) {
        return fail("two_line(" + std::to_string(n) + "," + std::to_string(m) + ")");
      }
  return {true, "convex r<=5,n<=4 (rn>=3); two_line n,m<=15"};
}

Verdict pair_probability() {
  const auto e = sphere::pair_crossing_probability(1'000'000, 20240601, 1);
  std::ostringstream s;
  s.precision(6);
  s << std::fixed << "p = " << e.mean << " +- " << e.std_error << " (seed " << e.seed << ", " << e.resamples << " resamples)";
  return {std::abs(e.mean - 0.125) < 4 * e.std_error, s.str()};
}

Verdict spherical_limit() {
  const Rational tol(1, 1000);
  for (int r = 2; r <= 10; ++r) {
    if (abs(sphere::ratio_to_max(r, 1000) - formulas::zeta(r)) >= tol) return fail("ratio_to_max(" + std::to_string(r) + ",1000)");
  }
  if (formulas::zeta(2) != Rational(1, 4) || formulas::zeta(3) != Rational(1, 4)) return fail("zeta(2), zeta(3)");
  for (int r = 2; r <= 100; ++r) {
    if (formulas::s_asymptotic_ratio(r) != formulas::zeta(r)) return fail("s_asym(" + std::to_string(r) + ")");
  }
  return {true, "r = 2..10 at n = 1000; s_asym == zeta for r <= 100"};
}

Verdict monte_carlo() {
  std::ostringstream s;
  s.precision(3);
  bool ok = true;
  for (int r = 2; r <= 4; ++r)
    for (int n : {2, 3, 5}) {
      const std::uint64_t seed = 1000 + 10 * r + n;
      const auto e = sphere::monte_carlo_s(r, n, 10'000, seed);
      const double exact = sphere::exact_expected_crossings(r, n).to_double();
      const double z = (e.mean - exact) / e.std_error;
      if (!(std::abs(z) < 4)) {
        ok = false;
        s << "(" << r << "," << n << ") z=" << z << " ";
      }
    }
  if (ok) s << "9 cases within 4 standard errors";
  return {ok, s.str()};
}

Verdict counting_bound() {
  const Rational two_thirds(2, 3), tol(1, 100);
  const auto big = search::counting_bound(10'000);
  std::ostringstream s;
  s.precision(6);
  s << std::fixed << "ratio(10^4) = " << big.ratio_to_A.to_double();
  bool ok = abs(big.ratio_to_A - two_thirds) < tol;
  if (!ok) s << " not within 1e-2 of 2/3";
  std::vector<std::int64_t> above;
  for (std::int64_t n = 10; n <= 1000; ++n) {
    if (search::counting_bound(n).ratio_to_A > two_thirds + tol) above.push_back(n);
  }
  if (big.ratio_to_A > two_thirds + tol) above.push_back(10'000);
  if (!above.empty()) {
    ok = false;
    s << "; ratio > 2/3 + 1e-2 at " << above.size() << " sampled n (" << above.front() << ".." << above.back()
      << ", ratio(10) = " << search::counting_bound(10).ratio_to_A.to_double() << ")";
  } else {
    s << "; <= 2/3 + 1e-2 for n in 10..1000 and 10^4";
  }
  return {ok, s.str()};
}

Verdict flag_arithmetic() {
  const Rational v = search::flag_extrapolation(Rational::parse("5.6767"));
  if (!(v > Rational(973, 1000))) return fail("f(5.6767) = " + v.to_string());
  const Rational c = Rational::parse("1419186177261/250000000000");
  const Rational exact = search::flag_extrapolation(c / Rational(1));
  const Rational want(Integer(6) * Integer("1419186177261"), Integer(35) * Integer("250000000000"));
  if (exact != want) return fail("f(c) = " + exact.to_string());
  return {true, "f(5.6767) = " + v.to_string() + "; f(c) = " + exact.to_string()};
}

Verdict search_sanity() {
  search::SearchOptions opt;
  opt.iterations = 50'000;
  opt.restarts = 8;
  opt.seed = 1;
  const auto octa = search::minimize_crossings({2, 2, 2}, opt);
  const auto k223 = search::minimize_crossings({2, 2, 3}, opt);
  const std::string detail = "seed 1: K_{2,2,2} -> " + std::to_string(octa.best_count) + ", K_{2,2,3} -> " +
                             std::to_string(k223.best_count);
  return {octa.best_count == 0 && k223.best_count == 2, detail};
}

Verdict property_suites() {
  Rng rng = make_rng(31337);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7), small(0, 6), size(1, 6);
  auto rat = [&] { return Rational(num(rng), den(rng)); };

  for (int i = 0; i < 5000; ++i) {
    const geom::Point2 p{rat(), rat()}, q{rat(), rat()}, r{rat(), rat()};
    const int o = static_cast<int>(geom::orient(p, q, r));
    if (static_cast<int>(geom::orient(q, p, r)) != -o || static_cast<int>(geom::orient(p, r, q)) != -o ||
        static_cast<int>(geom::orient(r, q, p)) != -o) {
      return fail("orientation antisymmetry");
    }
  }

  for (const auto& d : {constructions::alternating_3line(4, 3, 5), constructions::two_line(5, 6),
                        constructions::convex_max(4, 2)}) {
    const auto base = geom::count_crossings(d).total;
    for (int i = 0; i < 20; ++i) {
      Rational a, b, c, e;
      do {
        a = rat(), b = rat(), c = rat(), e = rat();
      } while (a * e - b * c == Rational(0));
      const Rational tx = rat(), ty = rat();
      std::vector<geom::Point2> mapped;
      for (const auto& p : d.positions()) mapped.push_back({a * p.x + b * p.y + tx, c * p.x + e * p.y + ty});
      if (geom::count_crossings(geom::RectilinearDrawing(d.part_sizes(), mapped)).total != base) {
        return fail("affine invariance");
      }
    }
  }

  std::normal_distribution<double> g;
  for (int i = 0; i < 20'000; ++i) {
    const auto a1 = sphere::sample_uniform_sphere(rng), a2 = sphere::sample_uniform_sphere(rng);
    const auto b1 = sphere::sample_uniform_sphere(rng), b2 = sphere::sample_uniform_sphere(rng);
    double w = g(rng), x = g(rng), y = g(rng), z = g(rng);
    const double len = std::sqrt(w * w + x * x + y * y + z * z);
    w /= len, x /= len, y /= len, z /= len;
    const double m[3][3] = {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                            {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                            {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
    auto rot = [&](const sphere::UnitVector& u) {
      return sphere::UnitVector{m[0][0] * u.x + m[0][1] * u.y + m[0][2] * u.z, m[1][0] * u.x + m[1][1] * u.y + m[1][2] * u.z,
                                m[2][0] * u.x + m[2][1] * u.y + m[2][2] * u.z};
    };
    if (sphere::arcs_cross(a1, a2, b1, b2) != sphere::arcs_cross(rot(a1), rot(a2), rot(b1), rot(b2))) {
      return fail("rotation invariance");
    }
  }

  for (std::int64_t a = 0; a <= 10'000; ++a) {
    if (!formulas::floor_identity_a(a)) return fail("floor identity a = " + std::to_string(a));
    for (std::int64_t b = 0; b <= 10'000; ++b) {
      if (!formulas::floor_identity_ab(a, b)) return fail("floor identity a,b");
    }
  }

  int compared = 0;
  while (compared < 300) {
    const int p0 = size(rng), p1 = size(rng);
    if (p0 + p1 > 7) continue;
    const std::vector<int> sizes{p0, p1, 8 - p0 - p1};
    std::vector<geom::Point2> pts;
    std::set<std::pair<int, int>> used;
    while (pts.size() < 8) {
      const int x = small(rng), y = small(rng);
      if (used.insert({x, y}).second) pts.push_back({Rational(x), Rational(y)});
    }
    const geom::RectilinearDrawing d(sizes, pts);
    geom::CrossingReport got;
    try {
      got = geom::count_crossings(d);
    } catch (const geom::VertexOnEdge&) {
      continue;
    }
    // Parametric intersection solve as the second formulation.
    std::int64_t want = 0;
    const auto edges = d.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        const auto [u, v] = edges[i];
        const auto [s, t] = edges[j];
        if (u == s || u == t || v == s || v == t) continue;
        const auto &a1 = pts[u], &a2 = pts[v], &b1 = pts[s], &b2 = pts[t];
        const Rational dx = a2.x - a1.x, dy = a2.y - a1.y, ex = b2.x - b1.x, ey = b2.y - b1.y;
        const Rational det = ex * dy - dx * ey;
        if (det == Rational(0)) continue;
        const Rational rx = b1.x - a1.x, ry = b1.y - a1.y;
        const Rational lambda = (ex * ry - ey * rx) / det;
        const Rational mu = (dx * ry - dy * rx) / det;
        if (lambda > Rational(0) && lambda < Rational(1) && mu > Rational(0) && mu < Rational(1)) ++want;
      }
    if (want != got.total) return fail("brute-force mismatch");
    ++compared;
  }
  return {true, "orientation, affine, rotation, floor identities a,b <= 10^4, 300 brute-force drawings"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "A = A_3L for n_i <= 50", 10, identity_a_a3l},
      {2, "small-case closed forms, n <= 1000", 1, small_cases},
      {3, "alternating 3-line drawings, n_i <= 10", 60, alternating_drawings},
      {4, "convex_max = CRmax, two_line = Z", 30, convex_and_two_line},
      {5, "pair crossing probability 1/8", 30, pair_probability},
      {6, "spherical ratio limit and zeta", 5, spherical_limit},
      {7, "Monte Carlo vs exact expectation", 60, monte_carlo},
      {8, "counting bound ratio near 2/3", 5, counting_bound},
      {9, "flag extrapolation arithmetic", 1, flag_arithmetic},
      {10, "search finds K_{2,2,2} -> 0, K_{2,2,3} -> 2", 120, search_sanity},
      {11, "property suites", 0, property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.body();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    const bool ok = v.passed && in_time;
    failures += !ok;
    const std::string limit = c.limit_seconds == 0 ? "no limit" : "limit " + std::to_string(static_cast<int>(c.limit_seconds)) + "s";
    std::printf("[%s] %2d  %-45s %8.3fs (%s)  %s%s\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, limit.c_str(),
                v.detail.c_str(), in_time ? "" : "  [over time limit]");
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
