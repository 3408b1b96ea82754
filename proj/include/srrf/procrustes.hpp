#pragma once

#include <vector>

#include <Eigen/Core>

#include "srrf/rigid_transform.hpp"

namespace srrf {

/// Closed-form least-squares rigid alignment (Kabsch). Finds the rotation
/// and translation minimizing the mean squared residual between the mapped
/// source points and their matched targets.
///
/// The cross-covariance H = sum (x_i - xbar)(y_i - ybar)^T is decomposed as
/// H = U S V^T; the rotation is R = V U^T with the sign of the last column
/// of V flipped when det(V U^T) = -1, and t = ybar - R xbar.
///
/// Throws std::invalid_argument on size mismatch or fewer than 3 points, and
/// std::runtime_error("rank-deficient covariance") when the matched
/// configuration is collinear or coincident (rank of H below 2).
RigidTransform procrustes_solve(const std::vector<Eigen::Vector3d>& source,
                                const std::vector<Eigen::Vector3d>& matched);

/// Mean squared residual of Eq-style alignment error at a given transform,
/// averaged over the source count.
double alignment_error(const std::vector<Eigen::Vector3d>& source,
                       const std::vector<Eigen::Vector3d>& matched,
                       const RigidTransform& tf);

}  // namespace srrf
