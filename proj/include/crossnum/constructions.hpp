#pragma once

// Explicit drawings: alternating 3-line, 2-line (Zarankiewicz) and the
// convex maximum-crossing drawing, plus SVG rendering.

#include "crossnum/exact_geom.hpp"

#include <array>
#include <string>
#include <vector>

namespace crossnum::constructions {

/// Rational unit vectors standing in for directions 120 degrees apart:
/// (1,0), (-3/5,4/5), (-3/5,-4/5). Pairwise angles are about 126.9, 106.3
/// and 126.9 degrees; only which rays can see each other matters.
const std::array<geom::Point2, 3>& three_line_directions();

/// Per-part ray split of an alternating 3-line drawing.
struct RayAssignment {
  std::array<int, 3> large{};  // ceil(n_i/2) points at distances k/(large+1)
  std::array<int, 3> small{};  // floor(n_i/2) points at distances 3..small+2
  /// true if the vertex sits on its part's large ray (vertex order matches
  /// alternating_3line: part-major, large ray first).
  std::vector<bool> on_large_ray;
};

RayAssignment ray_assignment(int n1, int n2, int n3);

geom::RectilinearDrawing alternating_3line(int n1, int n2, int n3);

/// Part 0 on the x-axis at +1..+ceil(n/2) and -1..-floor(n/2); part 1 on the
/// y-axis likewise. Realizes Z(n,m) crossings.
geom::RectilinearDrawing two_line(int n, int m);

/// rn rational points on the unit circle near the regular rn-gon, parts in
/// consecutive blocks of n. Every 4-set spanning a disjoint edge pair
/// contributes exactly one crossing.
geom::RectilinearDrawing convex_max(int r, int n);

struct SvgOptions {
  double size = 640.0;  // viewport side in px
  double margin = 24.0;
  double node_radius = 5.0;
  bool crossing_markers = true;
  int precision = 3;  // decimals written to the document
};

/// Deterministic SVG rendering. Coordinates are converted to decimals for
/// display only.
std::string export_svg(const geom::RectilinearDrawing& d, const SvgOptions& options = {});

/// Exact intersection point of two properly crossing segments.
geom::Point2 crossing_point(const geom::Point2& a1, const geom::Point2& a2, const geom::Point2& b1,
                            const geom::Point2& b2);

}  // namespace crossnum::constructions
