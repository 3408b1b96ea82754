#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "srrf/point_cloud.hpp"
#include "srrf/rigid_transform.hpp"

namespace srrf {

/// Skeletal abstraction of a cloud: skeleton points expressed as convex
/// combinations of a sampled subset, with per-point sphere radii.
///
/// Structural identities (all enforced by construction):
///   - every weight column lies on the probability simplex,
///   - points = W^T * samples,
///   - radii  = W^T * D, where D holds each sample's distance to its
///     nearest skeleton point.
struct Skeleton {
  Eigen::MatrixXd weights;                // |samples| x n_skeleton
  std::vector<Eigen::Vector3d> points;    // n_skeleton
  Eigen::VectorXd radii;                  // n_skeleton
  PointCloud samples;

  PointCloud points_as_cloud() const {
    return PointCloud(points);
  }
};

struct SkeletonConfig {
  int n_samples = 256;
  int n_skeleton = 64;
  double lambda1 = 0.3;       // weight of the point-to-sphere loss
  double lambda2 = 0.4;       // weight of the radius regularizer
  double lambda_ddl = 1.0;    // weight of the skeleton consistency loss
  int steps = 500;
  double step_size = 0.01;
  std::uint64_t seed = 0;

  double softmin_temperature = 0.01;  // smoothing of the nearest-distance min
  double init_temperature = 0.1;      // sharpness of the one-hot initialization
  int max_backoff = 10;               // step halvings before a block stalls
};

/// Convex combination of the samples: W^T * samples. Throws when a weight
/// column deviates from the simplex by more than 1e-6.
std::vector<Eigen::Vector3d> skeleton_points(const Eigen::MatrixXd& weights,
                                             const std::vector<Eigen::Vector3d>& samples);

/// Exact minimum Euclidean distance from a sample to the skeleton points.
double nearest_skeleton_distance(const Eigen::Vector3d& sample,
                                 const std::vector<Eigen::Vector3d>& skeleton_pts);

/// Linear combination of nearest distances: W^T * D.
Eigen::VectorXd skeleton_radii(const Eigen::MatrixXd& weights,
                               const Eigen::VectorXd& distances);

/// Components of the basic skeleton loss.
struct BspLoss {
  double total = 0.0;
  double sampling = 0.0;         // L_s
  double point_to_sphere = 0.0;  // L_p
  double radius_reg = 0.0;       // L_r
};

/// L_bsp = L_s + lambda1 * L_p + lambda2 * L_r evaluated on a skeleton as
/// stored (hard minima, stored radii).
///   L_s: bidirectional unsquared nearest-neighbor sum between the samples
///        and 8 fixed surface points per skeletal sphere;
///   L_p: mean squared surface mismatch in both directions (sample to its
///        nearest sphere, sphere to its nearest sample);
///   L_r: negative mean radius.
BspLoss loss_bsp(const PointCloud& samples, const Skeleton& skeleton,
                 double lambda1 = 0.3, double lambda2 = 0.4);

/// Registration loss ||R^T R_gt - I||_F^2 + ||t - t_gt||^2.
double loss_registration(const RigidTransform& estimated, const RigidTransform& gt);

/// The 8 fixed unit directions used to place sphere-surface samples
/// (cube-corner directions; antipodally symmetric).
const std::vector<Eigen::Vector3d>& sphere_surface_directions();

/// Differentiable skeleton objective for one cloud. Holds the sampled
/// subset; evaluates loss terms and analytic gradients with respect to the
/// weight logits (weights are the column-wise softmax of the logits, so the
/// simplex constraint holds at every iterate by construction).
class SkeletonObjective {
 public:
  SkeletonObjective(std::vector<Eigen::Vector3d> samples, int n_skeleton,
                    double softmin_temperature);

  int sample_count() const { return static_cast<int>(samples_.size()); }
  int skeleton_count() const { return n_skeleton_; }
  const std::vector<Eigen::Vector3d>& samples() const { return samples_; }

  /// Column-wise softmax of the logits.
  Eigen::MatrixXd weights(const Eigen::MatrixXd& logits) const;

  /// Skeleton positions implied by the logits.
  Eigen::MatrixXd skeleton(const Eigen::MatrixXd& logits) const;

  /// Weighted loss  w_s*L_s + w_p*L_p + w_r*L_r. Individual components are
  /// reported through `components` and the gradient with respect to the
  /// logits through `grad` (either may be null).
  double evaluate(const Eigen::MatrixXd& logits, const Eigen::Vector3d& term_weights,
                  Eigen::MatrixXd* grad, BspLoss* components) const;

  /// Skeleton consistency term between two clouds' skeletons (bidirectional
  /// unsquared nearest-neighbor sum), with gradients into both logit sets.
  static double evaluate_ddl(const SkeletonObjective& x, const Eigen::MatrixXd& logits_x,
                             const SkeletonObjective& y, const Eigen::MatrixXd& logits_y,
                             Eigen::MatrixXd* grad_x, Eigen::MatrixXd* grad_y);

  /// Finalized skeleton at the given logits (hard-min radii).
  Skeleton finalize(const Eigen::MatrixXd& logits, const PointCloud& sample_cloud) const;

 private:
  struct Forward;
  Forward run_forward(const Eigen::MatrixXd& logits) const;
  void backward_through_w(const Eigen::MatrixXd& logits, const Eigen::MatrixXd& grad_w,
                          Eigen::MatrixXd& grad_logits) const;

  std::vector<Eigen::Vector3d> samples_;
  Eigen::MatrixXd sample_matrix_;  // n x 3
  int n_skeleton_;
  double softmin_temperature_;
};

/// One row of the optimization trace. Loss components are summed over the
/// pair (source + target).
struct LossTraceRow {
  int step = 0;
  double l_s = 0.0;
  double l_p = 0.0;
  double l_r = 0.0;
  double l_ddl = 0.0;
  double total = 0.0;
};

struct SkeletonPairResult {
  Skeleton source;
  Skeleton target;
  std::vector<LossTraceRow> trace;
};

/// Joint skeleton extraction for a registration pair. Samples both clouds
/// by farthest-point sampling, then minimizes
///   L_bsp(source) + L_bsp(target) + lambda_ddl * L_ddl(S_x, S_y)
/// by block gradient descent on the weight logits with step-halving
/// backoff. A block update is accepted only if it lowers the objective, so
/// the trace is non-increasing. Throws std::runtime_error("diverged ...")
/// if the loss leaves the finite range.
SkeletonPairResult extract_skeleton_pair(const PointCloud& source,
                                         const PointCloud& target,
                                         const SkeletonConfig& cfg);

/// JSON serialization: {points, radii, n_samples, config}.
void write_skeleton_json(const std::string& path, const Skeleton& skeleton,
                         const SkeletonConfig& cfg);

/// CSV serialization of a loss trace: step,l_s,l_p,l_r,l_ddl,total.
void write_loss_trace_csv(const std::string& path,
                          const std::vector<LossTraceRow>& trace);

}  // namespace srrf
