#pragma once

#include <string>

#include "srrf/point_cloud.hpp"

namespace srrf {

/// Reads a point cloud, dispatching on the file extension:
/// ".ply" parses ASCII PLY (requires float/double properties x, y, z and
/// optionally a "label" property); anything else is treated as XYZ text
/// (one whitespace-separated "x y z" triple per line, '#' comments ignored).
PointCloud read_cloud(const std::string& path);

/// Writes XYZ text with 9 significant digits per coordinate.
void write_xyz(const std::string& path, const PointCloud& cloud);

/// Writes ASCII PLY with 9 significant digits; when the cloud carries
/// labels a "uchar label" property is emitted alongside x, y, z.
void write_ply(const std::string& path, const PointCloud& cloud);

/// Dispatches on extension: ".ply" -> write_ply, otherwise write_xyz.
void write_cloud(const std::string& path, const PointCloud& cloud);

}  // namespace srrf
