#include "crossnum/exact_geom.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

namespace crossnum::geom {

namespace {

using Wide = __int128;

// Grid coordinates at most this large keep every determinant in 128 bits.
constexpr std::int64_t kGridLimit = std::int64_t{1} << 60;

int sign_of(Wide v) { return (v > 0) - (v < 0); }

Orientation to_orientation(int s) {
  return s > 0 ? Orientation::kCounterClockwise : (s < 0 ? Orientation::kClockwise : Orientation::kCollinear);
}

int orient_sign(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
  const Wide det = Wide(q.x - p.x) * Wide(r.y - p.y) - Wide(q.y - p.y) * Wide(r.x - p.x);
  return sign_of(det);
}

int orient_sign(const Point2& p, const Point2& q, const Point2& r) {
  return ((q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)).sign();
}

// For collinear w: strictly between u and v iff (w-u).(w-v) < 0.
bool strictly_between(const GridPoint& u, const GridPoint& v, const GridPoint& w) {
  return Wide(w.x - u.x) * Wide(w.x - v.x) + Wide(w.y - u.y) * Wide(w.y - v.y) < 0;
}

bool strictly_between(const Point2& u, const Point2& v, const Point2& w) {
  return ((w.x - u.x) * (w.x - v.x) + (w.y - u.y) * (w.y - v.y)).sign() < 0;
}

// Orientation of every vertex triple, computed once per drawing.
class OrientationTable {
 public:
  template <class P>
  explicit OrientationTable(std::span<const P> pts) : n_(pts.size()), signs_(n_ * n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) {
          const auto s = static_cast<std::int8_t>(orient_sign(pts[i], pts[j], pts[k]));
          const auto t = static_cast<std::int8_t>(-s);
          signs_[index(i, j, k)] = s;
          signs_[index(j, k, i)] = s;
          signs_[index(k, i, j)] = s;
          signs_[index(j, i, k)] = t;
          signs_[index(i, k, j)] = t;
          signs_[index(k, j, i)] = t;
        }
      }
    }
  }

  int operator()(std::size_t i, std::size_t j, std::size_t k) const { return signs_[index(i, j, k)]; }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }

  std::size_t n_;
  std::vector<std::int8_t> signs_;
};

std::vector<std::pair<int, int>> implicit_edges(std::span<const int> part_of) {
  std::vector<std::pair<int, int>> edges;
  const int n = static_cast<int>(part_of.size());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    }
  }
  return edges;
}

template <class P>
void require_distinct(std::span<const P> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i] == pts[j]) {
        throw InvalidDrawing("vertices " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
      }
    }
  }
}

template <class P>
CrossingReport count_impl(std::span<const int> part_of, std::span<const P> pts, const CountOptions& options) {
  if (part_of.size() != pts.size()) throw InvalidDrawing("part labels and positions differ in length");
  require_distinct(pts);

  const OrientationTable orient_table(pts);
  const auto edges = implicit_edges(part_of);

  for (const auto& [u, v] : edges) {
    for (std::size_t w = 0; w < pts.size(); ++w) {
      const auto uu = static_cast<std::size_t>(u);
      const auto vv = static_cast<std::size_t>(v);
      if (w == uu || w == vv) continue;
      if (orient_table(uu, vv, w) == 0 && strictly_between(pts[uu], pts[vv], pts[w])) {
        throw VertexOnEdge("vertex " + std::to_string(w) + " lies inside edge (" + std::to_string(u) + "," +
                           std::to_string(v) + ")");
      }
    }
  }

  struct Partial {
    std::int64_t total = 0;
    std::map<PartitionType, std::int64_t> by_type;
    std::vector<EdgePairId> pairs;
  };

  auto scan = [&](std::size_t begin, std::size_t end, Partial& out) {
    for (std::size_t e1 = begin; e1 < end; ++e1) {
      const auto a = static_cast<std::size_t>(edges[e1].first);
      const auto b = static_cast<std::size_t>(edges[e1].second);
      for (std::size_t e2 = e1 + 1; e2 < edges.size(); ++e2) {
        const auto c = static_cast<std::size_t>(edges[e2].first);
        const auto d = static_cast<std::size_t>(edges[e2].second);
        if (c == a || c == b || d == a || d == b) continue;
        const int o1 = orient_table(a, b, c);
        const int o2 = orient_table(a, b, d);
        const int o3 = orient_table(c, d, a);
        const int o4 = orient_table(c, d, b);
        if (o1 == 0 && o2 == 0) {
          // Collinear disjoint segments can only overlap if an endpoint sits
          // inside the other segment, which the vertex scan already rejects.
          if (strictly_between(pts[a], pts[b], pts[c]) || strictly_between(pts[a], pts[b], pts[d]) ||
              strictly_between(pts[c], pts[d], pts[a])) {
            throw DegenerateConfiguration("collinear overlapping edges");
          }
          continue;
        }
        if (o1 * o2 < 0 && o3 * o4 < 0) {
          ++out.total;
          ++out.by_type[classify_quadruple({part_of[a], part_of[b], part_of[c], part_of[d]})];
          if (options.record_pairs) out.pairs.push_back({edges[e1], edges[e2]});
        }
      }
    }
  };

  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, edges.size())));

  std::vector<Partial> partials(workers);
  if (workers == 1) {
    scan(0, edges.size(), partials[0]);
  } else {
    // Row e1 costs about (E - e1) pair checks; split the triangle into equal areas.
    std::vector<std::size_t> bounds(workers + 1, edges.size());
    bounds[0] = 0;
    const double rows = static_cast<double>(edges.size());
    for (unsigned w = 1; w < workers; ++w) {
      const double frac = static_cast<double>(w) / workers;
      bounds[w] = static_cast<std::size_t>(rows * (1.0 - std::sqrt(1.0 - frac)));
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          scan(bounds[w], bounds[w + 1], partials[w]);
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

  CrossingReport report;
  for (auto& p : partials) {
    report.total += p.total;
    for (const auto& [k, v] : p.by_type) report.by_type[k] += v;
    report.crossing_list.insert(report.crossing_list.end(), p.pairs.begin(), p.pairs.end());
  }
  return report;
}

}  // namespace

Orientation orient(const Point2& p, const Point2& q, const Point2& r) { return to_orientation(orient_sign(p, q, r)); }

Orientation orient(const GridPoint& p, const GridPoint& q, const GridPoint& r) {
  return to_orientation(orient_sign(p, q, r));
}

bool segments_cross_properly(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2) {
  if (a1 == a2 || b1 == b2) throw std::invalid_argument("segment with coincident endpoints");
  const int o1 = orient_sign(a1, a2, b1);
  const int o2 = orient_sign(a1, a2, b2);
  const int o3 = orient_sign(b1, b2, a1);
  const int o4 = orient_sign(b1, b2, a2);
  if (o1 == 0 && o2 == 0) {
    const bool use_x = a1.x != a2.x;
    auto coord = [use_x](const Point2& p) -> const Rational& { return use_x ? p.x : p.y; };
    const Rational lo = std::max(std::min(coord(a1), coord(a2)), std::min(coord(b1), coord(b2)));
    const Rational hi = std::min(std::max(coord(a1), coord(a2)), std::max(coord(b1), coord(b2)));
    if (lo < hi) throw DegenerateConfiguration("collinear segments overlap");
    return false;
  }
  return o1 * o2 < 0 && o3 * o4 < 0;
}

RectilinearDrawing::RectilinearDrawing(std::vector<int> part_sizes, std::vector<Point2> positions)
    : part_sizes_(std::move(part_sizes)), positions_(std::move(positions)) {
  if (part_sizes_.size() < 2) throw InvalidDrawing("a multipartite drawing needs at least two parts");
  std::size_t total = 0;
  for (int s : part_sizes_) {
    if (s < 1) throw InvalidDrawing("part sizes must be positive");
    total += static_cast<std::size_t>(s);
  }
  if (total != positions_.size()) {
    throw InvalidDrawing("expected " + std::to_string(total) + " positions, got " +
                         std::to_string(positions_.size()));
  }
  part_of_.reserve(total);
  for (std::size_t p = 0; p < part_sizes_.size(); ++p) {
    part_of_.insert(part_of_.end(), static_cast<std::size_t>(part_sizes_[p]), static_cast<int>(p));
  }
  require_distinct(std::span<const Point2>(positions_));
}

std::vector<std::pair<int, int>> RectilinearDrawing::edges() const { return implicit_edges(part_of_); }

const char* to_string(PartitionType t) {
  switch (t) {
    case PartitionType::kFour: return "FOUR";
    case PartitionType::kThreeOne: return "THREE_ONE";
    case PartitionType::kTwoTwo: return "TWO_TWO";
    case PartitionType::kTwoOneOne: return "TWO_ONE_ONE";
    case PartitionType::kOneOneOneOne: return "ONE_ONE_ONE_ONE";
  }
  return "?";
}

PartitionType classify_quadruple(std::array<int, 4> parts) {
  std::sort(parts.begin(), parts.end());
  std::array<int, 4> runs{};
  std::size_t nruns = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (i == 0 || parts[i] != parts[i - 1]) ++nruns;
    ++runs[nruns - 1];
  }
  const int largest = *std::max_element(runs.begin(), runs.end());
  switch (nruns) {
    case 1: return PartitionType::kFour;
    case 2: return largest == 3 ? PartitionType::kThreeOne : PartitionType::kTwoTwo;
    case 3: return PartitionType::kTwoOneOne;
    default: return PartitionType::kOneOneOneOne;
  }
}

int disjoint_pairs_spanned(PartitionType t) {
  switch (t) {
    case PartitionType::kFour:
    case PartitionType::kThreeOne: return 0;
    case PartitionType::kTwoTwo:
    case PartitionType::kTwoOneOne: return 2;
    case PartitionType::kOneOneOneOne: return 3;
  }
  return 0;
}

CrossingReport count_crossings(std::span<const int> part_of, std::span<const GridPoint> points,
                               const CountOptions& options) {
  for (const auto& p : points) {
    if (p.x <= -kGridLimit || p.x >= kGridLimit || p.y <= -kGridLimit || p.y >= kGridLimit) {
      throw std::out_of_range("grid coordinate exceeds the 128-bit predicate range");
    }
  }
  return count_impl(part_of, points, options);
}

CrossingReport count_crossings(const RectilinearDrawing& d, const CountOptions& options) {
  std::vector<GridPoint> grid;
  if (to_grid(d, grid)) return count_impl(std::span<const int>(d.part_of()), std::span<const GridPoint>(grid), options);
  return count_impl(std::span<const int>(d.part_of()), std::span<const Point2>(d.positions()), options);
}

bool to_grid(const RectilinearDrawing& d, std::vector<GridPoint>& out) {
  Integer common = 1;
  for (const auto& p : d.positions()) {
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.x.denominator().get_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), p.y.denominator().get_mpz_t());
  }
  const Integer limit = Integer(static_cast<long>(kGridLimit));
  out.clear();
  out.reserve(d.vertex_count());
  for (const auto& p : d.positions()) {
    const Integer x = p.x.numerator() * (common / p.x.denominator());
    const Integer y = p.y.numerator() * (common / p.y.denominator());
    if (abs(x) >= limit || abs(y) >= limit) return false;
    out.push_back({x.get_si(), y.get_si()});
  }
  return true;
}

RectilinearDrawing from_grid(std::vector<int> part_sizes, std::span<const GridPoint> points) {
  std::vector<Point2> pos;
  pos.reserve(points.size());
  for (const auto& p : points) pos.push_back({Rational(p.x), Rational(p.y)});
  return RectilinearDrawing(std::move(part_sizes), std::move(pos));
}

}  // namespace crossnum::geom
