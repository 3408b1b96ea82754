#pragma once

#include <vector>

#include <Eigen/Core>

#include "srrf/point_cloud.hpp"
#include "srrf/rigid_transform.hpp"

namespace srrf {

/// Chamfer distance d_CD: 1e-4 * (sum of squared nearest-neighbor distances
/// in both directions). The 1e-4 prefactor follows the reporting convention
/// of the benchmark tables. Symmetric in its arguments; throws on empty input.
double chamfer_distance(const PointCloud& s1, const PointCloud& s2);

/// Distribution distance: bidirectional sum of unsquared nearest-neighbor
/// distances, no prefactor. Distinct from chamfer_distance above.
double l_ddl(const PointCloud& s1, const PointCloud& s2);

/// Per-axis rotation error between two rotations.
struct RotationError {
  Eigen::Vector3d degrees = Eigen::Vector3d::Zero();  ///< abs errors, z, y, x
  bool gimbal_lock = false;  ///< pitch within 1e-6 rad of +/-90 degrees
};

/// Intrinsic z-y-x Euler angles (radians) of a rotation matrix:
/// R = Rz(a) * Ry(b) * Rx(c), returned as (a, b, c).
Eigen::Vector3d euler_zyx(const Eigen::Matrix3d& rotation, bool* gimbal_lock = nullptr);

/// Per-axis angular error in degrees between an estimate and the ground
/// truth, computed from the relative rotation R_est * R_gt^T decomposed into
/// intrinsic z-y-x Euler angles. Each component is wrapped to [0, 180].
/// The relative formulation makes the error invariant to composing both
/// inputs with the same rotation on the right.
RotationError rotation_error_degrees(const RigidTransform& estimated,
                                     const RigidTransform& ground_truth);

/// MSE / RMSE / MAE for the rotation block (degrees) and translation block
/// (model units), aggregated over axes and trials.
struct ErrorMetrics {
  double mse_r = 0.0;
  double rmse_r = 0.0;
  double mae_r = 0.0;
  double mse_t = 0.0;
  double rmse_t = 0.0;
  double mae_t = 0.0;
};

/// Pools per-axis rotation errors (degrees) and per-component translation
/// errors into the six aggregate metrics; rmse is defined as sqrt(mse).
ErrorMetrics aggregate_errors(const std::vector<double>& rotation_axis_errors_deg,
                              const std::vector<double>& translation_component_errors);

/// Metrics of a single transform estimate against the ground truth.
ErrorMetrics transform_errors(const RigidTransform& estimated,
                              const RigidTransform& ground_truth);

}  // namespace srrf
