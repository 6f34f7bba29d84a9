#include "crossnum/drawing_io.hpp"

#include <fstream>
#include <sstream>

namespace crossnum::io {

using nlohmann::json;

json drawing_to_json(const geom::RectilinearDrawing& d) {
  json points = json::array();
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    const auto& p = d.positions()[v];
    points.push_back({{"x", p.x.to_string()}, {"y", p.y.to_string()}, {"part", d.part(v)}});
  }
  return {{"schema", 1}, {"part_sizes", d.part_sizes()}, {"points", std::move(points)}};
}

geom::RectilinearDrawing drawing_from_json(const json& j) {
  try {
    const auto sizes = j.at("part_sizes").get<std::vector<int>>();
    const auto& points = j.at("points");
    if (!points.is_array()) throw FormatError("\"points\" must be an array");
    std::vector<std::vector<geom::Point2>> by_part(sizes.size());
    for (const auto& p : points) {
      const int part = p.at("part").get<int>();
      if (part < 0 || static_cast<std::size_t>(part) >= sizes.size()) {
        throw FormatError("part label " + std::to_string(part) + " out of range");
      }
      auto coord = [&](const char* key) {
        const auto& v = p.at(key);
        if (v.is_string()) return Rational::parse(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
        throw FormatError(std::string("coordinate \"") + key + "\" must be a \"p/q\" string");
      };
      by_part[static_cast<std::size_t>(part)].push_back({coord("x"), coord("y")});
    }
    std::vector<geom::Point2> positions;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (static_cast<int>(by_part[k].size()) != sizes[k]) {
        throw FormatError("part " + std::to_string(k) + " declares " + std::to_string(sizes[k]) + " vertices but has " +
                          std::to_string(by_part[k].size()));
      }
      positions.insert(positions.end(), by_part[k].begin(), by_part[k].end());
    }
    return geom::RectilinearDrawing(sizes, std::move(positions));
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed drawing: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed drawing: ") + e.what());
  } catch (const DivisionByZero& e) {
    throw FormatError(std::string("malformed drawing: ") + e.what());
  }
}

json report_to_json(const geom::CrossingReport& r) {
  json by_type = json::object();
  for (const auto& [t, n] : r.by_type) by_type[geom::to_string(t)] = n;
  json out = {{"schema", 1}, {"total", r.total}, {"by_type", std::move(by_type)}};
  if (!r.crossing_list.empty()) {
    json pairs = json::array();
    for (const auto& p : r.crossing_list) {
      pairs.push_back({{p.first.first, p.first.second}, {p.second.first, p.second.second}});
    }
    out["crossing_list"] = std::move(pairs);
  }
  return out;
}

geom::RectilinearDrawing read_drawing(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return drawing_from_json(j);
}

void write_drawing(const std::filesystem::path& path, const geom::RectilinearDrawing& d) {
  write_text(path, drawing_to_json(d).dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("cannot write " + path.string());
  out << text;
}

}  // namespace crossnum::io
