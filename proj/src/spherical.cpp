#include "crossnum/spherical.hpp"

#include "crossnum/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

namespace crossnum::sphere {

namespace {

struct Vec3 {
  double x, y, z;
};

Vec3 vec(const UnitVector& u) { return {u.x, u.y, u.z}; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double dot3(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

double length(const Vec3& a) { return std::sqrt(dot3(a, a)); }

Vec3 scale(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }

// Unit normal of the great circle through a and b.
Vec3 arc_normal(const Vec3& a, const Vec3& b) {
  const Vec3 n = cross(a, b);
  const double len = length(n);
  if (len < kResampleThreshold) throw DegenerateArc("arc endpoints are equal or antipodal");
  return scale(n, 1.0 / len);
}

// p strictly inside the minor arc from a to b with unit normal n.
bool inside_arc(const Vec3& a, const Vec3& b, const Vec3& n, const Vec3& p) {
  return dot3(cross(a, p), n) > kArcTolerance && dot3(cross(p, b), n) > kArcTolerance;
}

struct Arc {
  Vec3 a, b, normal;
};

bool arcs_cross_impl(const Arc& s, const Arc& t) {
  Vec3 d = cross(s.normal, t.normal);
  const double len = length(d);
  if (len < kArcTolerance) throw DegenerateArc("arcs lie on the same great circle");
  d = scale(d, 1.0 / len);
  for (const double sgn : {1.0, -1.0}) {
    const Vec3 p = scale(d, sgn);
    if (inside_arc(s.a, s.b, s.normal, p) && inside_arc(t.a, t.b, t.normal, p)) return true;
  }
  return false;
}

bool near_equal_or_antipodal(const UnitVector& p, const UnitVector& q) {
  const Vec3 a = vec(p), b = vec(q);
  const Vec3 diff{a.x - b.x, a.y - b.y, a.z - b.z};
  const Vec3 sum{a.x + b.x, a.y + b.y, a.z + b.z};
  return length(diff) < kResampleThreshold || length(sum) < kResampleThreshold;
}

struct Moments {
  std::int64_t n = 0;
  double sum = 0;
  double sum_sq = 0;
  std::int64_t resamples = 0;
};

McEstimate finish(const std::vector<Moments>& parts, std::int64_t trials, std::uint64_t seed) {
  Moments m;
  for (const auto& p : parts) {
    m.n += p.n;
    m.sum += p.sum;
    m.sum_sq += p.sum_sq;
    m.resamples += p.resamples;
  }
  McEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.resamples = m.resamples;
  est.mean = m.sum / static_cast<double>(m.n);
  if (m.n > 1) {
    const double var = std::max(0.0, (m.sum_sq - m.sum * est.mean) / static_cast<double>(m.n - 1));
    est.std_error = std::sqrt(var / static_cast<double>(m.n));
  }
  return est;
}

// Runs `trial` over [0, trials) split across workers; trial returns one sample.
McEstimate run_trials(std::int64_t trials, std::uint64_t seed, unsigned workers,
                      const std::function<double(Rng&, std::int64_t&)>& trial) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, trials));
  std::vector<Moments> parts(workers);
  auto work = [&](unsigned w) {
    Rng rng = make_rng(seed, w);
    const std::int64_t begin = trials * w / workers;
    const std::int64_t end = trials * (w + 1) / workers;
    Moments& m = parts[w];
    for (std::int64_t i = begin; i < end; ++i) {
      const double x = trial(rng, m.resamples);
      ++m.n;
      m.sum += x;
      m.sum_sq += x * x;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          work(w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  return finish(parts, trials, seed);
}

}  // namespace

UnitVector UnitVector::normalized(double x, double y, double z) {
  const double len = std::sqrt(x * x + y * y + z * z);
  if (!(len > 0) || !std::isfinite(len)) throw std::domain_error("cannot normalize a zero vector");
  return {x / len, y / len, z / len};
}

double UnitVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double dot(const UnitVector& a, const UnitVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

UnitVector sample_uniform_sphere(Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    const double x = gauss(rng), y = gauss(rng), z = gauss(rng);
    if (x * x + y * y + z * z > 1e-24) return UnitVector::normalized(x, y, z);
  }
}

SphericalDrawing random_drawing(const std::vector<int>& part_sizes, Rng& rng, std::int64_t* resamples) {
  SphericalDrawing d;
  d.part_sizes = part_sizes;
  for (std::size_t p = 0; p < part_sizes.size(); ++p) {
    if (part_sizes[p] < 1) throw std::invalid_argument("part sizes must be positive");
    d.part_of.insert(d.part_of.end(), static_cast<std::size_t>(part_sizes[p]), static_cast<int>(p));
  }
  const std::size_t n = d.part_of.size();
  for (;;) {
    d.positions.clear();
    for (std::size_t i = 0; i < n; ++i) d.positions.push_back(sample_uniform_sphere(rng));
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) ok = !near_equal_or_antipodal(d.positions[i], d.positions[j]);
    }
    if (ok) return d;
    if (resamples) ++*resamples;
  }
}

bool arcs_cross(const UnitVector& a1, const UnitVector& a2, const UnitVector& b1, const UnitVector& b2) {
  const Arc s{vec(a1), vec(a2), arc_normal(vec(a1), vec(a2))};
  const Arc t{vec(b1), vec(b2), arc_normal(vec(b1), vec(b2))};
  return arcs_cross_impl(s, t);
}

geom::CrossingReport classify_geodesic_crossings(const SphericalDrawing& d) {
  if (d.positions.size() != d.part_of.size()) throw std::invalid_argument("part labels and positions differ in length");
  std::vector<std::pair<int, int>> edges;
  std::vector<Arc> arcs;
  const int n = static_cast<int>(d.positions.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const auto uu = static_cast<std::size_t>(u), vv = static_cast<std::size_t>(v);
      if (d.part_of[uu] == d.part_of[vv]) continue;
      edges.emplace_back(u, v);
      const Vec3 a = vec(d.positions[uu]), b = vec(d.positions[vv]);
      arcs.push_back({a, b, arc_normal(a, b)});
    }
  }
  geom::CrossingReport report;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto [a, b] = edges[i];
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto [c, e] = edges[j];
      if (c == a || c == b || e == a || e == b) continue;
      if (arcs_cross_impl(arcs[i], arcs[j])) {
        ++report.total;
        ++report.by_type[geom::classify_quadruple(
            {d.part_of[static_cast<std::size_t>(a)], d.part_of[static_cast<std::size_t>(b)],
             d.part_of[static_cast<std::size_t>(c)], d.part_of[static_cast<std::size_t>(e)]})];
      }
    }
  }
  return report;
}

std::int64_t count_geodesic_crossings(const SphericalDrawing& d) { return classify_geodesic_crossings(d).total; }

Integer disjoint_edge_pairs(std::int64_t r, std::int64_t n) {
  if (r < 2 || n < 1) throw std::invalid_argument("disjoint_edge_pairs needs r >= 2, n >= 1");
  const Integer edges = formulas::binomial(r, 2) * Integer(static_cast<long>(n)) * Integer(static_cast<long>(n));
  const Integer vertices = Integer(static_cast<long>(r)) * Integer(static_cast<long>(n));
  const Integer degree = Integer(static_cast<long>(r - 1)) * Integer(static_cast<long>(n));
  return edges * (edges - 1) / 2 - vertices * (degree * (degree - 1) / 2);
}

Rational exact_expected_crossings(std::int64_t r, std::int64_t n) {
  return Rational(disjoint_edge_pairs(r, n), Integer(8));
}

Rational ratio_to_max(std::int64_t r, std::int64_t n) {
  const Integer cr = formulas::crmax(r, n);
  if (cr == 0) throw DivisionByZero("CRmax is zero; no crossing is possible");
  return exact_expected_crossings(r, n) / Rational(cr);
}

McEstimate monte_carlo_s(std::int64_t r, std::int64_t n, std::int64_t trials, std::uint64_t seed, unsigned workers) {
  if (r < 2 || n < 1) throw std::invalid_argument("monte_carlo_s needs r >= 2, n >= 1");
  const std::vector<int> sizes(static_cast<std::size_t>(r), static_cast<int>(n));
  return run_trials(trials, seed, workers, [&](Rng& rng, std::int64_t& resamples) {
    for (;;) {
      const SphericalDrawing d = random_drawing(sizes, rng, &resamples);
      try {
        return static_cast<double>(count_geodesic_crossings(d));
      } catch (const DegenerateArc&) {
        ++resamples;
      }
    }
  });
}

McEstimate pair_crossing_probability(std::int64_t samples, std::uint64_t seed, unsigned workers) {
  return run_trials(samples, seed, workers, [](Rng& rng, std::int64_t& resamples) {
    for (;;) {
      const UnitVector a1 = sample_uniform_sphere(rng), a2 = sample_uniform_sphere(rng);
      const UnitVector b1 = sample_uniform_sphere(rng), b2 = sample_uniform_sphere(rng);
      try {
        return arcs_cross(a1, a2, b1, b2) ? 1.0 : 0.0;
      } catch (const DegenerateArc&) {
        ++resamples;
      }
    }
  });
}

}  // namespace crossnum::sphere
