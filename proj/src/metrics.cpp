#include "srrf/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "srrf/kdtree.hpp"

namespace srrf {

namespace {

double directional_nn_sum(const PointCloud& from, const KdTree& to_index, bool squared) {
  double sum = 0.0;
  for (const auto& p : from.points) {
    const double d2 = to_index.nearest(p).squared_distance;
    sum += squared ? d2 : std::sqrt(d2);
  }
  return sum;
}

}  // namespace

double chamfer_distance(const PointCloud& s1, const PointCloud& s2) {
  if (s1.empty() || s2.empty()) {
    throw std::invalid_argument("chamfer_distance: empty cloud");
  }
  const KdTree index1(s1);
  const KdTree index2(s2);
  return 1e-4 * (directional_nn_sum(s1, index2, true) +
                 directional_nn_sum(s2, index1, true));
}

double l_ddl(const PointCloud& s1, const PointCloud& s2) {
  if (s1.empty() || s2.empty()) {
    throw std::invalid_argument("l_ddl: empty cloud");
  }
  const KdTree index1(s1);
  const KdTree index2(s2);
  return directional_nn_sum(s1, index2, false) + directional_nn_sum(s2, index1, false);
}

Eigen::Vector3d euler_zyx(const Eigen::Matrix3d& r, bool* gimbal_lock) {
  // R = Rz(a) Ry(b) Rx(c):
  //   R(2,0) = -sin b, R(1,0)/R(0,0) = tan a, R(2,1)/R(2,2) = tan c.
  const double sin_b = -r(2, 0);
  const double clamped = std::clamp(sin_b, -1.0, 1.0);
  const double b = std::asin(clamped);

  const bool locked = std::abs(std::abs(b) - M_PI / 2.0) < 1e-6;
  if (gimbal_lock != nullptr) *gimbal_lock = locked;

  if (locked) {
    // a and c are coupled; report the combined angle on a with c = 0.
    return {std::atan2(-r(0, 1), r(1, 1)), b, 0.0};
  }
  return {std::atan2(r(1, 0), r(0, 0)), b, std::atan2(r(2, 1), r(2, 2))};
}

RotationError rotation_error_degrees(const RigidTransform& estimated,
                                     const RigidTransform& ground_truth) {
  const Eigen::Matrix3d relative =
      estimated.rotation * ground_truth.rotation.transpose();

  RotationError error;
  const Eigen::Vector3d angles = euler_zyx(relative, &error.gimbal_lock);
  for (int i = 0; i < 3; ++i) {
    double deg = std::abs(angles[i]) * 180.0 / M_PI;
    deg = std::fmod(deg, 360.0);
    if (deg > 180.0) deg = 360.0 - deg;
    error.degrees[i] = deg;
  }
  return error;
}

ErrorMetrics aggregate_errors(const std::vector<double>& rotation_axis_errors_deg,
                              const std::vector<double>& translation_component_errors) {
  ErrorMetrics m;
  if (!rotation_axis_errors_deg.empty()) {
    double sq = 0.0, ab = 0.0;
    for (double e : rotation_axis_errors_deg) {
      sq += e * e;
      ab += std::abs(e);
    }
    const double n = static_cast<double>(rotation_axis_errors_deg.size());
    m.mse_r = sq / n;
    m.mae_r = ab / n;
    m.rmse_r = std::sqrt(m.mse_r);
  }
  if (!translation_component_errors.empty()) {
    double sq = 0.0, ab = 0.0;
    for (double e : translation_component_errors) {
      sq += e * e;
      ab += std::abs(e);
    }
    const double n = static_cast<double>(translation_component_errors.size());
    m.mse_t = sq / n;
    m.mae_t = ab / n;
    m.rmse_t = std::sqrt(m.mse_t);
  }
  return m;
}

ErrorMetrics transform_errors(const RigidTransform& estimated,
                              const RigidTransform& ground_truth) {
  const RotationError rot = rotation_error_degrees(estimated, ground_truth);
  const Eigen::Vector3d dt = estimated.translation - ground_truth.translation;
  std::vector<double> rot_errors{rot.degrees[0], rot.degrees[1], rot.degrees[2]};
  std::vector<double> trans_errors{std::abs(dt[0]), std::abs(dt[1]), std::abs(dt[2])};
  return aggregate_errors(rot_errors, trans_errors);
}

}  // namespace srrf
