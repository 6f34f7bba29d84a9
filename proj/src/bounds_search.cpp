#include "crossnum/bounds_search.hpp"

#include "crossnum/constructions.hpp"
#include "crossnum/formulas.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>

namespace crossnum::search {

using formulas::binomial;
using geom::GridPoint;

CountingBound counting_bound(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("counting bound needs n >= 3");
  CountingBound b;
  b.n = n;
  b.copies = Rational(Integer(6 * binomial(n, 2) * binomial(n, 3)));
  b.total_weight = b.copies * Rational(formulas::known_small_cr(2, 3, n));
  // Placements of the K_{2,3,n} parts over the three parts of K_{n,n,n}
  // that contain a fixed crossing, two orientations each.
  b.mult_22 = Rational(Integer(2 * (binomial(n - 2, 0) * binomial(n - 2, 1) * binomial(n, n) +
                            binomial(n - 2, 0) * binomial(n, 3) * binomial(n - 2, n - 2) +
                            binomial(n, 2) * binomial(n - 2, 1) * binomial(n - 2, n - 2))));
  b.mult_211 = Rational(Integer(2 * (binomial(n - 2, 0) * binomial(n - 1, 2) * binomial(n - 1, n - 1) +
                             binomial(n - 1, 1) * binomial(n - 2, 1) * binomial(n - 1, n - 1) +
                             binomial(n - 1, 1) * binomial(n - 1, 2) * binomial(n - 2, n - 2))));
  b.bound = b.total_weight / std::max(b.mult_22, b.mult_211);
  b.ratio_to_A = b.bound / Rational(formulas::bound_A(n, n, n));
  return b;
}

Rational flag_extrapolation(const Rational& c) {
  if (c < Rational(0) || c > Rational(35)) throw std::invalid_argument("average crossing count must lie in [0, 35]");
  return Rational(6) * c / Rational(35);
}

Rational naive_density_bound(std::int64_t min_c) {
  if (min_c < 0 || min_c > 35) throw std::invalid_argument("minimum crossing count must lie in [0, 35]");
  return Rational(6 * min_c, 35);
}

namespace {

struct RestartOutcome {
  std::vector<GridPoint> points;
  std::int64_t count = 0;
  std::int64_t iterations = 0;
  std::int64_t retries = 0;
  std::vector<std::pair<std::int64_t, std::int64_t>> events;  // (local iteration, count)
};

std::vector<int> labels_for(const std::vector<int>& sizes) {
  std::vector<int> part_of;
  for (std::size_t p = 0; p < sizes.size(); ++p) {
    part_of.insert(part_of.end(), static_cast<std::size_t>(sizes[p]), static_cast<int>(p));
  }
  return part_of;
}

// Count, or nullopt for drawings the counter rejects.
std::optional<std::int64_t> try_count(std::span<const int> part_of, std::span<const GridPoint> pts) {
  try {
    return geom::count_crossings(part_of, pts).total;
  } catch (const geom::VertexOnEdge&) {
  } catch (const geom::DegenerateConfiguration&) {
  } catch (const geom::InvalidDrawing&) {
  }
  return std::nullopt;
}

std::optional<std::vector<GridPoint>> seeded_start(const std::vector<int>& sizes) {
  std::optional<geom::RectilinearDrawing> d;
  if (sizes.size() == 3) d = constructions::alternating_3line(sizes[0], sizes[1], sizes[2]);
  if (sizes.size() == 2) d = constructions::two_line(sizes[0], sizes[1]);
  if (!d) return std::nullopt;
  std::vector<GridPoint> pts;
  if (!geom::to_grid(*d, pts)) return std::nullopt;
  return pts;
}

RestartOutcome run_restart(std::span<const int> part_of, std::int64_t iterations,
                           Rng rng, std::optional<std::vector<GridPoint>> start) {
  RestartOutcome out;
  const std::size_t nv = part_of.size();
  const std::int64_t grid = 4 * static_cast<std::int64_t>(nv);

  std::optional<std::int64_t> count;
  if (start) {
    out.points = std::move(*start);
    count = try_count(part_of, out.points);
  }
  std::uniform_int_distribution<std::int64_t> coord(0, grid - 1);
  while (!count) {
    out.points.assign(nv, {});
    for (auto& p : out.points) p = {coord(rng), coord(rng)};
    count = try_count(part_of, out.points);
    if (!count) ++out.retries;
  }
  out.count = *count;
  out.events.emplace_back(0, out.count);

  std::int64_t min_x = out.points[0].x, max_x = min_x, min_y = out.points[0].y, max_y = min_y;
  for (const auto& p : out.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const std::int64_t radius = std::max<std::int64_t>(2, std::max(max_x - min_x, max_y - min_y) / 8);
  std::uniform_int_distribution<std::size_t> pick(0, nv - 1);
  std::uniform_int_distribution<std::int64_t> step(-radius, radius);

  std::vector<GridPoint> trial = out.points;
  for (std::int64_t it = 1; it <= iterations && out.count > 0; ++it) {
    out.iterations = it;
    const std::size_t v = pick(rng);
    const std::int64_t dx = step(rng), dy = step(rng);
    if (dx == 0 && dy == 0) continue;
    trial = out.points;
    trial[v] = {trial[v].x + dx, trial[v].y + dy};
    const auto c = try_count(part_of, trial);
    if (!c) {
      ++out.retries;
      continue;
    }
    if (*c < out.count) {
      out.points = trial;
      out.count = *c;
      out.events.emplace_back(it, out.count);
    }
  }
  return out;
}

}  // namespace

SearchResult minimize_crossings(const std::vector<int>& part_sizes, const SearchOptions& options) {
  if (part_sizes.size() < 2) throw std::invalid_argument("search needs at least two parts");
  const int total = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  if (std::any_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s < 1; })) {
    throw std::invalid_argument("part sizes must be positive");
  }
  if (total > 12) throw std::invalid_argument("search is limited to at most 12 vertices");
  if (options.iterations < 1 || options.restarts < 1) throw std::invalid_argument("iterations and restarts must be >= 1");

  const std::vector<int> part_of = labels_for(part_sizes);
  const auto restarts = static_cast<std::size_t>(options.restarts);
  std::vector<RestartOutcome> outcomes(restarts);
  auto run = [&](std::size_t k) {
    std::optional<std::vector<GridPoint>> start;
    if (k == 0 && options.seeded_restart) start = seeded_start(part_sizes);
    outcomes[k] = run_restart(part_of, options.iterations, make_rng(options.seed, k), std::move(start));
  };

  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, restarts));
  if (workers == 1) {
    for (std::size_t k = 0; k < restarts; ++k) run(k);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < restarts; k += workers) run(k);
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

  SearchResult result;
  result.seed = options.seed;
  std::size_t best = 0;
  std::int64_t running = -1;
  for (std::size_t k = 0; k < restarts; ++k) {
    const auto& o = outcomes[k];
    result.iterations += o.iterations;
    result.degenerate_retries += o.retries;
    if (o.count < outcomes[best].count) best = k;
    const std::int64_t offset = static_cast<std::int64_t>(k) * options.iterations;
    for (const auto& [it, c] : o.events) {
      if (running < 0 || c < running) {
        running = c;
        result.history.emplace_back(offset + it, c);
      }
    }
  }
  result.best_count = outcomes[best].count;
  result.best_drawing = geom::from_grid(part_sizes, outcomes[best].points);
  return result;
}

std::map<std::int64_t, std::int64_t> crossing_distribution(const std::vector<int>& part_sizes, std::int64_t samples,
                                                           std::uint64_t seed, bool include_alternating) {
  const int total = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  if (part_sizes.size() < 2 || std::any_of(part_sizes.begin(), part_sizes.end(), [](int s) { return s < 1; })) {
    throw std::invalid_argument("need at least two positive part sizes");
  }
  if (total > 9) throw std::invalid_argument("crossing distribution is limited to at most 9 vertices");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");

  const std::vector<int> part_of = labels_for(part_sizes);
  const auto nv = part_of.size();
  std::map<std::int64_t, std::int64_t> histogram;
  std::int64_t done = 0;
  if (include_alternating && part_sizes.size() == 3) {
    const auto d = constructions::alternating_3line(part_sizes[0], part_sizes[1], part_sizes[2]);
    ++histogram[geom::count_crossings(d).total];
    ++done;
  }

  Rng rng = make_rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(0, (std::int64_t{1} << 20) - 1);
  std::vector<GridPoint> pts(nv);
  auto general_position = [&] {
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i + 1; j < nv; ++j) {
        if (pts[i] == pts[j]) return false;
        for (std::size_t k = j + 1; k < nv; ++k) {
          if (geom::orient(pts[i], pts[j], pts[k]) == geom::Orientation::kCollinear) return false;
        }
      }
    }
    return true;
  };
  for (; done < samples; ++done) {
    do {
      for (auto& p : pts) p = {coord(rng), coord(rng)};
    } while (!general_position());
    ++histogram[geom::count_crossings(part_of, pts).total];
  }
  return histogram;
}

}  // namespace crossnum::search
