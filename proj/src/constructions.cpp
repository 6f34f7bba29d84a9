#include "crossnum/constructions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace crossnum::constructions {

using geom::Point2;
using geom::RectilinearDrawing;

namespace {

Point2 scaled(const Point2& dir, const Rational& s) { return {dir.x * s, dir.y * s}; }

}  // namespace

const std::array<Point2, 3>& three_line_directions() {
  static const std::array<Point2, 3> dirs = {
      Point2{Rational(1), Rational(0)},
      Point2{Rational(-3, 5), Rational(4, 5)},
      Point2{Rational(-3, 5), Rational(-4, 5)},
  };
  return dirs;
}

RayAssignment ray_assignment(int n1, int n2, int n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) throw std::invalid_argument("alternating 3-line drawing needs n_i >= 1");
  RayAssignment rays;
  const std::array<int, 3> n = {n1, n2, n3};
  for (std::size_t i = 0; i < 3; ++i) {
    rays.large[i] = (n[i] + 1) / 2;
    rays.small[i] = n[i] / 2;
    rays.on_large_ray.insert(rays.on_large_ray.end(), static_cast<std::size_t>(rays.large[i]), true);
    rays.on_large_ray.insert(rays.on_large_ray.end(), static_cast<std::size_t>(rays.small[i]), false);
  }
  return rays;
}

RectilinearDrawing alternating_3line(int n1, int n2, int n3) {
  const RayAssignment rays = ray_assignment(n1, n2, n3);
  const auto& dirs = three_line_directions();
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < 3; ++i) {
    const int a = rays.large[i];
    for (int k = 1; k <= a; ++k) pts.push_back(scaled(dirs[i], Rational(k, a + 1)));
    for (int k = 3; k <= rays.small[i] + 2; ++k) pts.push_back(scaled(dirs[i], Rational(-k)));
  }
  return RectilinearDrawing({n1, n2, n3}, std::move(pts));
}

RectilinearDrawing two_line(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("2-line drawing needs n, m >= 1");
  std::vector<Point2> pts;
  auto place = [&pts](int count, bool on_x_axis) {
    const int positive = (count + 1) / 2;
    const int negative = count / 2;
    auto put = [&](int c) {
      pts.push_back(on_x_axis ? Point2{Rational(c), Rational(0)} : Point2{Rational(0), Rational(c)});
    };
    for (int k = 1; k <= positive; ++k) put(k);
    for (int k = 1; k <= negative; ++k) put(-k);
  };
  place(n, true);
  place(m, false);
  return RectilinearDrawing({n, m}, std::move(pts));
}

RectilinearDrawing convex_max(int r, int n) {
  if (r < 2 || n < 1 || r * n < 3) throw std::invalid_argument("convex drawing needs r >= 2, n >= 1, rn >= 3");
  const int total = r * n;
  // Rational parametrisation of the circle: t -> ((1-t^2), 2t) / (1+t^2),
  // with t = tan(theta/2) rounded to 1e-6. Angle order equals t order.
  constexpr std::int64_t kDen = 1'000'000;
  std::vector<Point2> pts;
  pts.reserve(static_cast<std::size_t>(total));
  for (int k = 0; k < total; ++k) {
    const double theta = -std::numbers::pi + (2.0 * k + 1.0) * std::numbers::pi / total;
    const auto t_num = static_cast<std::int64_t>(std::llround(std::tan(theta / 2.0) * kDen));
    const Rational t(t_num, kDen);
    const Rational t2 = t * t;
    const Rational denom = Rational(1) + t2;
    pts.push_back({(Rational(1) - t2) / denom, Rational(2) * t / denom});
  }
  return RectilinearDrawing(std::vector<int>(static_cast<std::size_t>(r), n), std::move(pts));
}

Point2 crossing_point(const Point2& a1, const Point2& a2, const Point2& b1, const Point2& b2) {
  // a1 + s (a2 - a1) with s = cross(b1 - a1, db) / cross(da, db)
  const Rational dax = a2.x - a1.x, day = a2.y - a1.y;
  const Rational dbx = b2.x - b1.x, dby = b2.y - b1.y;
  const Rational denom = dax * dby - day * dbx;
  const Rational s = ((b1.x - a1.x) * dby - (b1.y - a1.y) * dbx) / denom;
  return {a1.x + s * dax, a1.y + s * day};
}

}  // namespace crossnum::constructions
