#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace srrf {

/// Per-point provenance assigned by the corruption generators.
enum class PointLabel : std::uint8_t {
  kClean = 0,      ///< untouched original point
  kAdded = 1,      ///< synthesized by a generator
  kPerturbed = 2,  ///< original point whose coordinates were modified
};

const char* to_string(PointLabel label);

/// Ordered list of 3D points in model units, with optional per-point
/// provenance labels. Labels are either empty (all points implicitly clean)
/// or exactly one per point.
struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  std::vector<PointLabel> labels;

  PointCloud() = default;
  explicit PointCloud(std::vector<Eigen::Vector3d> pts) : points(std::move(pts)) {}

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool has_labels() const { return !labels.empty(); }

  PointLabel label(std::size_t i) const {
    return labels.empty() ? PointLabel::kClean : labels[i];
  }

  /// Allocates a label vector (all clean) if none is present.
  void ensure_labels();

  Eigen::Vector3d centroid() const;
  void bounding_box(Eigen::Vector3d& lo, Eigen::Vector3d& hi) const;

  /// True when every coordinate is finite.
  bool all_finite() const;
};

/// Inverse of the normalization mapping: original = normalized * scale + offset.
struct NormalizationRecord {
  Eigen::Vector3d offset = Eigen::Vector3d::Zero();
  double scale = 1.0;

  Eigen::Vector3d denormalize(const Eigen::Vector3d& p) const {
    return p * scale + offset;
  }
};

/// Centers the cloud at its centroid and scales it so the largest absolute
/// coordinate is exactly 1 (origin-centered unit cube). Throws
/// std::invalid_argument("zero extent") when all points coincide.
std::pair<PointCloud, NormalizationRecord> normalize_cloud(const PointCloud& cloud);

}  // namespace srrf
