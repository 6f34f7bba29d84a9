#include "crossnum/constructions.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace crossnum::constructions {

namespace {

constexpr const char* kPalette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string fmt(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  std::string s(buf);
  if (s == "-0" || s.find_first_not_of("-0.") == std::string::npos) return std::string("0");
  return s;
}

}  // namespace

std::string export_svg(const geom::RectilinearDrawing& d, const SvgOptions& options) {
  const auto& pos = d.positions();
  double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    const double x = pos[i].x.to_double(), y = pos[i].y.to_double();
    if (i == 0) {
      min_x = max_x = x;
      min_y = max_y = y;
    }
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
  const double scale = (options.size - 2 * options.margin) / span;
  const double off_x = options.margin + ((options.size - 2 * options.margin) - (max_x - min_x) * scale) / 2;
  const double off_y = options.margin + ((options.size - 2 * options.margin) - (max_y - min_y) * scale) / 2;
  auto sx = [&](const Rational& x) { return fmt(off_x + (x.to_double() - min_x) * scale, options.precision); };
  auto sy = [&](const Rational& y) { return fmt(off_y + (max_y - y.to_double()) * scale, options.precision); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(options.size, 0) << "\" height=\""
      << fmt(options.size, 0) << "\" viewBox=\"0 0 " << fmt(options.size, 0) << " " << fmt(options.size, 0)
      << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "  <g id=\"edges\" stroke=\"#444444\" stroke-width=\"0.6\" stroke-opacity=\"0.7\">\n";
  for (const auto& [u, v] : d.edges()) {
    const auto& p = pos[static_cast<std::size_t>(u)];
    const auto& q = pos[static_cast<std::size_t>(v)];
    out << "    <line x1=\"" << sx(p.x) << "\" y1=\"" << sy(p.y) << "\" x2=\"" << sx(q.x) << "\" y2=\"" << sy(q.y)
        << "\"/>\n";
  }
  out << "  </g>\n";

  if (options.crossing_markers) {
    geom::CountOptions count_opts;
    count_opts.record_pairs = true;
    const auto report = geom::count_crossings(d, count_opts);
    out << "  <g id=\"crossings\" fill=\"none\" stroke=\"black\" stroke-width=\"1\">\n";
    for (const auto& pair : report.crossing_list) {
      const auto c = crossing_point(pos[static_cast<std::size_t>(pair.first.first)],
                                    pos[static_cast<std::size_t>(pair.first.second)],
                                    pos[static_cast<std::size_t>(pair.second.first)],
                                    pos[static_cast<std::size_t>(pair.second.second)]);
      out << "    <circle class=\"crossing\" cx=\"" << sx(c.x) << "\" cy=\"" << sy(c.y) << "\" r=\"2\"/>\n";
    }
    out << "  </g>\n";
  }

  out << "  <g id=\"vertices\" stroke=\"black\" stroke-width=\"0.8\">\n";
  for (std::size_t v = 0; v < pos.size(); ++v) {
    const int part = d.part(v);
    out << "    <circle class=\"vertex part" << part << "\" cx=\"" << sx(pos[v].x) << "\" cy=\"" << sy(pos[v].y)
        << "\" r=\"" << fmt(options.node_radius, 1) << "\" fill=\"" << kPalette[part % 10] << "\"/>\n";
  }
  out << "  </g>\n</svg>\n";
  return out.str();
}

}  // namespace crossnum::constructions
