#include "srrf/procrustes.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/SVD>

namespace srrf {

namespace {

// Fixed sign convention: the largest-magnitude entry of every left singular
// vector is made non-negative, flipping the paired column of V. Leaves
// U S V^T (and therefore V U^T) unchanged.
void fix_singular_vector_signs(Eigen::Matrix3d& u, Eigen::Matrix3d& v) {
  for (int c = 0; c < 3; ++c) {
    int row = 0;
    u.col(c).cwiseAbs().maxCoeff(&row);
    if (u(row, c) < 0.0) {
      u.col(c) = -u.col(c);
      v.col(c) = -v.col(c);
    }
  }
}

}  // namespace

RigidTransform procrustes_solve(const std::vector<Eigen::Vector3d>& source,
                                const std::vector<Eigen::Vector3d>& matched) {
  if (source.size() != matched.size()) {
    throw std::invalid_argument("procrustes_solve: size mismatch");
  }
  if (source.size() < 3) {
    throw std::invalid_argument("procrustes_solve: need at least 3 points");
  }

  const double n = static_cast<double>(source.size());
  Eigen::Vector3d source_mean = Eigen::Vector3d::Zero();
  Eigen::Vector3d matched_mean = Eigen::Vector3d::Zero();
  for (std::size_t i = 0; i < source.size(); ++i) {
    source_mean += source[i];
    matched_mean += matched[i];
  }
  source_mean /= n;
  matched_mean /= n;

  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
  for (std::size_t i = 0; i < source.size(); ++i) {
    covariance += (source[i] - source_mean) * (matched[i] - matched_mean).transpose();
  }

  Eigen::JacobiSVD<Eigen::Matrix3d> svd(covariance,
                                        Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector3d sigma = svd.singularValues();
  if (!(sigma(1) > 1e-12 * std::max(sigma(0), 1e-300))) {
    throw std::runtime_error("rank-deficient covariance");
  }

  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  fix_singular_vector_signs(u, v);

  Eigen::Matrix3d rotation = v * u.transpose();
  if (rotation.determinant() < 0.0) {
    v.col(2) = -v.col(2);
    rotation = v * u.transpose();
  }

  RigidTransform tf;
  tf.rotation = rotation;
  tf.translation = matched_mean - rotation * source_mean;
  return tf;
}

double alignment_error(const std::vector<Eigen::Vector3d>& source,
                       const std::vector<Eigen::Vector3d>& matched,
                       const RigidTransform& tf) {
  if (source.size() != matched.size() || source.empty()) {
    throw std::invalid_argument("alignment_error: size mismatch");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < source.size(); ++i) {
    sum += (tf.apply(source[i]) - matched[i]).squaredNorm();
  }
  return sum / static_cast<double>(source.size());
}

}  // namespace srrf
