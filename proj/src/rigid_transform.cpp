#include "srrf/rigid_transform.hpp"

#include <cmath>

#include <Eigen/Geometry>

namespace srrf {

double orthogonality_error(const Eigen::Matrix3d& rotation) {
  const Eigen::Matrix3d gram = rotation.transpose() * rotation;
  return (gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
}

bool is_rotation(const Eigen::Matrix3d& rotation, double tol) {
  if (!rotation.allFinite()) return false;
  if (orthogonality_error(rotation) > tol) return false;
  return std::abs(rotation.determinant() - 1.0) <= tol;
}

Eigen::Matrix3d rotation_about_axis(const Eigen::Vector3d& axis, double angle_rad) {
  return Eigen::AngleAxisd(angle_rad, axis.normalized()).toRotationMatrix();
}

PointCloud apply_transform(const PointCloud& cloud, const RigidTransform& tf) {
  PointCloud out;
  out.points.reserve(cloud.size());
  for (const auto& p : cloud.points) {
    out.points.push_back(tf.apply(p));
  }
  out.labels = cloud.labels;
  return out;
}

}  // namespace srrf
