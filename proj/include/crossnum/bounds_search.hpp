#pragma once

// Finite-n lower-bound arithmetic for K_{n,n,n} and a randomized search for
// straight-line drawings with few crossings.

#include "crossnum/exact_geom.hpp"
#include "crossnum/random.hpp"
#include "crossnum/rational.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace crossnum::search {

/// Double counting over copies of K_{2,3,n} inside K_{n,n,n}: every copy
/// has at least cr(K_{2,3,n}) crossings, and each crossing of K_{n,n,n} is
/// seen by mult_22 (type 2,2) or mult_211 (type 2,1,1) copies.
struct CountingBound {
  std::int64_t n = 0;
  Rational copies;        // 6 C(n,2) C(n,3)
  Rational total_weight;  // copies * cr(K_{2,3,n})
  Rational mult_22;
  Rational mult_211;
  Rational bound;       // total_weight / max(mult_22, mult_211)
  Rational ratio_to_A;  // bound / A(n,n,n)
};

CountingBound counting_bound(std::int64_t n);

/// 6c/35: the coefficient of A(n,n,n) implied by an average of c crossings
/// over the 7-vertex K_{3,2,2} sub-drawings (35 four-sets each, and
/// C(3n,4) / A(n,n,n) -> 6).
Rational flag_extrapolation(const Rational& c);

/// Same extrapolation using only the minimum crossing count of a K_{3,2,2}
/// sub-drawing.
Rational naive_density_bound(std::int64_t min_c);

struct SearchOptions {
  std::int64_t iterations = 50'000;  // per restart
  int restarts = 8;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Start restart 0 from the alternating 3-line (3 parts) or 2-line
  /// (2 parts) drawing.
  bool seeded_restart = true;
};

struct SearchResult {
  geom::RectilinearDrawing best_drawing;
  std::int64_t best_count = 0;
  std::int64_t iterations = 0;  // moves proposed over all restarts
  std::uint64_t seed = 0;
  /// (global iteration, count) each time the best count improved.
  std::vector<std::pair<std::int64_t, std::int64_t>> history;
  std::int64_t degenerate_retries = 0;
};

/// Random-restart local search over integer grid drawings: single-vertex
/// moves to nearby grid points, accepted on strict improvement. Restart k
/// draws from stream k of `seed`, so the result does not depend on the
/// worker count. Part sizes must sum to at most 12.
SearchResult minimize_crossings(const std::vector<int>& part_sizes, const SearchOptions& options = {});

/// Histogram {crossings -> samples} over random integer drawings with no
/// three collinear vertices. With `include_alternating` and three parts the
/// first sample is the alternating 3-line drawing. Part sizes must sum to
/// at most 9.
std::map<std::int64_t, std::int64_t> crossing_distribution(const std::vector<int>& part_sizes, std::int64_t samples,
                                                           std::uint64_t seed, bool include_alternating = false);

}  // namespace crossnum::search
