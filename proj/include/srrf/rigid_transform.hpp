#pragma once

#include <Eigen/Core>

#include "srrf/point_cloud.hpp"

namespace srrf {

/// Rigid motion: rotation in SO(3) plus translation.
struct RigidTransform {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidTransform identity() { return {}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const {
    return rotation * p + translation;
  }

  /// Inverse motion: (R^T, -R^T t).
  RigidTransform inverse() const {
    RigidTransform inv;
    inv.rotation = rotation.transpose();
    inv.translation = -(inv.rotation * translation);
    return inv;
  }

  /// Composition: this applied after other, (this * other)(p) = this(other(p)).
  RigidTransform compose(const RigidTransform& other) const {
    RigidTransform out;
    out.rotation = rotation * other.rotation;
    out.translation = rotation * other.translation + translation;
    return out;
  }
};

/// Max absolute deviation of R^T R from the identity.
double orthogonality_error(const Eigen::Matrix3d& rotation);

/// True when R^T R = I and det R = +1, both within tol.
bool is_rotation(const Eigen::Matrix3d& rotation, double tol = 1e-9);

/// Rotation of `angle_rad` about a (not necessarily unit) axis.
Eigen::Matrix3d rotation_about_axis(const Eigen::Vector3d& axis, double angle_rad);

/// Maps every point through the transform; labels are preserved.
PointCloud apply_transform(const PointCloud& cloud, const RigidTransform& tf);

}  // namespace srrf
