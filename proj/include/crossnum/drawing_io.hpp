#pragma once

// Drawing JSON format shared by every tool:
//   {"schema":1,"part_sizes":[...],"points":[{"x":"p/q","y":"p/q","part":k},...]}
// Coordinates are exact rational strings.

#include "crossnum/exact_geom.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace crossnum::io {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json drawing_to_json(const geom::RectilinearDrawing& d);

/// Points may be listed in any order; they are regrouped by part.
geom::RectilinearDrawing drawing_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const geom::CrossingReport& r);

geom::RectilinearDrawing read_drawing(const std::filesystem::path& path);
void write_drawing(const std::filesystem::path& path, const geom::RectilinearDrawing& d);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace crossnum::io
