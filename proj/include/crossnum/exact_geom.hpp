#pragma once

// Exact planar predicates and the crossing counter for straight-line
// drawings of complete multipartite graphs.

#include "crossnum/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crossnum::geom {

class DegenerateConfiguration : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VertexOnEdge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDrawing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Integer lattice point; the search and sampling code works on these.
struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

Orientation orient(const Point2& p, const Point2& q, const Point2& r);
Orientation orient(const GridPoint& p, const GridPoint& q, const GridPoint& r);

/// True iff the two closed segments meet in exactly one point interior to
/// both. Touching at an endpoint or a shared endpoint is not a crossing.
/// Throws DegenerateConfiguration when the segments are collinear and
/// overlap in more than a point.
bool segments_cross_properly(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2);

/// Vertices with coordinates and a part label; the edge set is implicit
/// ({u,v} is an edge iff the parts differ).
class RectilinearDrawing {
 public:
  RectilinearDrawing() = default;
  /// Vertices of part 0 come first, then part 1, and so on.
  RectilinearDrawing(std::vector<int> part_sizes, std::vector<Point2> positions);

  const std::vector<int>& part_sizes() const { return part_sizes_; }
  const std::vector<Point2>& positions() const { return positions_; }
  const std::vector<int>& part_of() const { return part_of_; }
  std::size_t vertex_count() const { return positions_.size(); }
  int part(std::size_t v) const { return part_of_[v]; }

  /// Edges (u < v, parts differ) in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<int> part_sizes_;
  std::vector<Point2> positions_;
  std::vector<int> part_of_;
};

enum class PartitionType { kFour, kThreeOne, kTwoTwo, kTwoOneOne, kOneOneOneOne };

const char* to_string(PartitionType t);

/// Multiset shape of four part labels.
PartitionType classify_quadruple(std::array<int, 4> parts);

/// Number of vertex-disjoint edge pairs spanned by four vertices of the given type.
int disjoint_pairs_spanned(PartitionType t);

struct EdgePairId {
  std::pair<int, int> first;
  std::pair<int, int> second;

  friend bool operator==(const EdgePairId&, const EdgePairId&) = default;
};

struct CrossingReport {
  std::int64_t total = 0;
  std::map<PartitionType, std::int64_t> by_type;
  std::vector<EdgePairId> crossing_list;
};

struct CountOptions {
  bool record_pairs = false;
  /// Threads used for the pair scan; 0 picks hardware concurrency.
  unsigned workers = 1;
};

/// Counts properly crossing pairs of vertex-disjoint edges, each classified
/// by the parts of its four endpoints. Throws VertexOnEdge if a vertex lies
/// strictly inside a non-incident edge, DegenerateConfiguration on
/// collinear overlaps.
CrossingReport count_crossings(const RectilinearDrawing& d, const CountOptions& options = {});

/// Same contract on integer coordinates, used by hot loops.
CrossingReport count_crossings(std::span<const int> part_of, std::span<const GridPoint> points,
                               const CountOptions& options = {});

/// Clears denominators: returns integer points that are the image of the
/// drawing under a uniform positive scaling (crossings are preserved).
/// Returns false if any coordinate does not fit the fast path.
bool to_grid(const RectilinearDrawing& d, std::vector<GridPoint>& out);

RectilinearDrawing from_grid(std::vector<int> part_sizes, std::span<const GridPoint> points);

}  // namespace crossnum::geom
