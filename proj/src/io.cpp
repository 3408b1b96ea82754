#include "srrf/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace srrf {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string format_coord(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

PointCloud read_xyz(std::istream& in, const std::string& path) {
  PointCloud cloud;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    double x, y, z;
    if (row >> x >> y >> z) {
      cloud.points.emplace_back(x, y, z);
    } else {
      row.clear();
      std::string leftover;
      if (row >> leftover) {
        throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                 ": malformed XYZ line");
      }
    }
  }
  return cloud;
}

PointCloud read_ply(std::istream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("ply", 0) != 0) {
    throw std::runtime_error(path + ": not a PLY file");
  }

  std::size_t vertex_count = 0;
  std::vector<std::string> vertex_props;
  bool in_vertex_element = false;
  bool ascii = false;

  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string keyword;
    row >> keyword;
    if (keyword == "format") {
      std::string kind;
      row >> kind;
      ascii = kind == "ascii";
    } else if (keyword == "element") {
      std::string name;
      std::size_t count;
      row >> name >> count;
      in_vertex_element = name == "vertex";
      if (in_vertex_element) vertex_count = count;
    } else if (keyword == "property" && in_vertex_element) {
      std::string type, name;
      row >> type >> name;
      if (type == "list") {
        throw std::runtime_error(path + ": list properties on vertices unsupported");
      }
      vertex_props.push_back(name);
    } else if (keyword == "end_header") {
      break;
    }
  }
  if (!ascii) {
    throw std::runtime_error(path + ": only ASCII PLY is supported");
  }

  int ix = -1, iy = -1, iz = -1, ilabel = -1;
  for (std::size_t i = 0; i < vertex_props.size(); ++i) {
    if (vertex_props[i] == "x") ix = static_cast<int>(i);
    if (vertex_props[i] == "y") iy = static_cast<int>(i);
    if (vertex_props[i] == "z") iz = static_cast<int>(i);
    if (vertex_props[i] == "label") ilabel = static_cast<int>(i);
  }
  if (ix < 0 || iy < 0 || iz < 0) {
    throw std::runtime_error(path + ": PLY vertex element lacks x/y/z properties");
  }

  PointCloud cloud;
  cloud.points.reserve(vertex_count);
  std::vector<double> row_values(vertex_props.size());
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!std::getline(in, line)) {
      throw std::runtime_error(path + ": truncated PLY vertex data");
    }
    std::istringstream row(line);
    for (auto& value : row_values) {
      if (!(row >> value)) {
        throw std::runtime_error(path + ": malformed PLY vertex row");
      }
    }
    cloud.points.emplace_back(row_values[ix], row_values[iy], row_values[iz]);
    if (ilabel >= 0) {
      cloud.labels.push_back(static_cast<PointLabel>(
          static_cast<int>(row_values[ilabel])));
    }
  }
  return cloud;
}

}  // namespace

PointCloud read_cloud(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(path + ": cannot open for reading");
  }
  if (ends_with(path, ".ply")) return read_ply(in, path);
  return read_xyz(in, path);
}

void write_xyz(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  for (const auto& p : cloud.points) {
    out << format_coord(p.x()) << ' ' << format_coord(p.y()) << ' '
        << format_coord(p.z()) << '\n';
  }
}

void write_ply(const std::string& path, const PointCloud& cloud) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(path + ": cannot open for writing");
  }
  const bool with_labels = cloud.has_labels();
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << cloud.size() << '\n';
  out << "property float x\nproperty float y\nproperty float z\n";
  if (with_labels) out << "property uchar label\n";
  out << "end_header\n";
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const auto& p = cloud.points[i];
    out << format_coord(p.x()) << ' ' << format_coord(p.y()) << ' '
        << format_coord(p.z());
    if (with_labels) out << ' ' << static_cast<int>(cloud.labels[i]);
    out << '\n';
  }
}

void write_cloud(const std::string& path, const PointCloud& cloud) {
  if (ends_with(path, ".ply")) {
    write_ply(path, cloud);
  } else {
    write_xyz(path, cloud);
  }
}

}  // namespace srrf
