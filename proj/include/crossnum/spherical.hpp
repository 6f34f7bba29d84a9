#pragma once

// Random geodesic drawings on the unit sphere: vertices are uniform random
// points, edges are minor great-circle arcs.

#include "crossnum/exact_geom.hpp"
#include "crossnum/random.hpp"
#include "crossnum/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace crossnum::sphere {

/// Predicate tolerance for the arc tests.
inline constexpr double kArcTolerance = 1e-12;
/// Point pairs closer than this (or to each other's antipode) are resampled.
inline constexpr double kResampleThreshold = 1e-9;

class DegenerateArc : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct UnitVector {
  double x = 0;
  double y = 0;
  double z = 1;

  /// Normalizes (x,y,z); throws std::domain_error on a zero vector.
  static UnitVector normalized(double x, double y, double z);
  double norm() const;
};

double dot(const UnitVector& a, const UnitVector& b);

struct SphericalDrawing {
  std::vector<int> part_sizes;
  std::vector<UnitVector> positions;
  std::vector<int> part_of;
};

/// Normalized standard Gaussian triple.
UnitVector sample_uniform_sphere(Rng& rng);

/// Random drawing of the complete multipartite graph with the given part
/// sizes. Configurations with two (near) equal or antipodal vertices are
/// redrawn; `resamples` counts how often that happened.
SphericalDrawing random_drawing(const std::vector<int>& part_sizes, Rng& rng, std::int64_t* resamples = nullptr);

/// True iff the minor arcs a1a2 and b1b2 share a point interior to both.
/// Throws DegenerateArc if an arc has (near) equal or antipodal endpoints,
/// or both arcs lie on the same great circle.
bool arcs_cross(const UnitVector& a1, const UnitVector& a2, const UnitVector& b1, const UnitVector& b2);

/// Crossing vertex-disjoint edge pairs, classified by partition type.
geom::CrossingReport classify_geodesic_crossings(const SphericalDrawing& d);
std::int64_t count_geodesic_crossings(const SphericalDrawing& d);

/// Unordered vertex-disjoint edge pairs in the balanced complete r-partite
/// graph: C(E,2) - rn C((r-1)n, 2) with E = C(r,2) n^2.
Integer disjoint_edge_pairs(std::int64_t r, std::int64_t n);

/// Each disjoint pair crosses with probability 1/8, so s(r,n) = pairs / 8.
Rational exact_expected_crossings(std::int64_t r, std::int64_t n);

/// exact_expected_crossings / crmax; throws DivisionByZero when crmax is 0.
Rational ratio_to_max(std::int64_t r, std::int64_t n);

struct McEstimate {
  double mean = 0;
  double std_error = 0;  // sample standard deviation / sqrt(trials)
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t resamples = 0;  // degenerate configurations redrawn
};

/// Mean crossing count over `trials` random drawings. Trials are split
/// across `workers` threads; worker w draws from make_rng(seed, w), so the
/// result is reproducible for a fixed worker count.
McEstimate monte_carlo_s(std::int64_t r, std::int64_t n, std::int64_t trials, std::uint64_t seed,
                         unsigned workers = 1);

/// Fraction of random pairs of arcs (four independent uniform endpoints)
/// that cross.
McEstimate pair_crossing_probability(std::int64_t samples, std::uint64_t seed, unsigned workers = 1);

}  // namespace crossnum::sphere
