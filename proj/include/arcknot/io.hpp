#pragma once

#include "arcknot/arc.hpp"
#include "arcknot/geom.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arcknot {

/// Reads `{"vertices": [["0","0","0"], ...]}`. Coordinates are rational
/// strings; JSON integers are also accepted. Throws Error(Parse) naming the
/// vertex and coordinate at fault. The vertices are not validated.
std::vector<Vec3> parse_arc_json(std::string_view text);

/// The inverse of parse_arc_json, coordinates as rational strings.
std::string arc_to_json(const std::vector<Vec3>& vertices);

/// Reads the file and validates the arc. Throws Error(Io) when unreadable.
SpatialArc load_arc(const std::string& path);

/// "x,y,z" with rational components. Throws Error(Parse).
Direction parse_direction(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace arcknot
