#include "srrf/point_cloud.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace srrf {

const char* to_string(PointLabel label) {
  switch (label) {
    case PointLabel::kClean:
      return "clean";
    case PointLabel::kAdded:
      return "added";
    case PointLabel::kPerturbed:
      return "perturbed";
  }
  return "unknown";
}

void PointCloud::ensure_labels() {
  if (labels.empty()) {
    labels.assign(points.size(), PointLabel::kClean);
  }
}

Eigen::Vector3d PointCloud::centroid() const {
  Eigen::Vector3d sum = Eigen::Vector3d::Zero();
  for (const auto& p : points) sum += p;
  return points.empty() ? sum : Eigen::Vector3d(sum / static_cast<double>(points.size()));
}

void PointCloud::bounding_box(Eigen::Vector3d& lo, Eigen::Vector3d& hi) const {
  lo.setConstant(std::numeric_limits<double>::max());
  hi.setConstant(std::numeric_limits<double>::lowest());
  for (const auto& p : points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
}

bool PointCloud::all_finite() const {
  for (const auto& p : points) {
    if (!p.allFinite()) return false;
  }
  return true;
}

std::pair<PointCloud, NormalizationRecord> normalize_cloud(const PointCloud& cloud) {
  if (cloud.empty()) {
    throw std::invalid_argument("normalize_cloud: empty cloud");
  }
  if (!cloud.all_finite()) {
    throw std::invalid_argument("normalize_cloud: non-finite coordinates");
  }

  NormalizationRecord record;
  record.offset = cloud.centroid();

  double extent = 0.0;
  for (const auto& p : cloud.points) {
    extent = std::max(extent, (p - record.offset).cwiseAbs().maxCoeff());
  }
  if (extent <= 0.0) {
    throw std::invalid_argument("normalize_cloud: zero extent");
  }
  record.scale = extent;

  PointCloud out;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) {
    out.points.push_back((p - record.offset) / record.scale);
  }
  out.labels = cloud.labels;
  return {std::move(out), record};
}

}  // namespace srrf
