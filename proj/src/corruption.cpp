#include "srrf/corruption.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "srrf/kdtree.hpp"
#include "srrf/rng.hpp"
#include "srrf/sampling.hpp"

namespace srrf {

namespace {

void check_severity(int severity) {
  if (severity < 1 || severity > 5) {
    throw std::invalid_argument("corruption: severity must be in 1..5");
  }
}

std::size_t level(int severity) { return static_cast<std::size_t>(severity - 1); }

PointCloud labeled_copy(const PointCloud& cloud) {
  PointCloud out = cloud;
  out.ensure_labels();
  return out;
}

double clamp_unit(double v) { return std::clamp(v, -1.0, 1.0); }

// Indices covered by the k-NN neighborhoods of `cluster_count` random
// anchors; k is capped at the cloud size. Shared by density_dec and cutout.
std::vector<bool> neighborhood_union(const PointCloud& cloud, int cluster_count,
                                     int knn, Rng& rng, double removal_fraction) {
  const std::size_t n = cloud.size();
  const std::size_t k = std::min<std::size_t>(knn, n);
  const KdTree index(cloud);
  const auto anchors = rds_indices(n, std::min<std::size_t>(cluster_count, n), rng);

  std::vector<bool> removed(n, false);
  for (std::size_t anchor : anchors) {
    const auto nbrs = index.knn(cloud.points[anchor], k);
    if (removal_fraction >= 1.0) {
      for (const auto& nb : nbrs) removed[nb.index] = true;
    } else {
      const auto m = static_cast<std::size_t>(
          std::lround(removal_fraction * static_cast<double>(nbrs.size())));
      if (m == 0) continue;
      const auto picks = rds_indices(nbrs.size(), m, rng);
      for (std::size_t pick : picks) removed[nbrs[pick].index] = true;
    }
  }
  return removed;
}

PointCloud drop_removed(const PointCloud& cloud, const std::vector<bool>& removed,
                        const char* op) {
  PointCloud out;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    if (removed[i]) continue;
    out.points.push_back(cloud.points[i]);
    out.labels.push_back(cloud.label(i));
  }
  if (out.size() < 3) {
    throw std::runtime_error(std::string(op) + ": fewer than 3 points would remain");
  }
  return out;
}

// Degree-4 Bernstein basis weights at t in [0,1].
std::array<double, 5> bernstein4(double t) {
  const double s = 1.0 - t;
  return {s * s * s * s, 4.0 * s * s * s * t, 6.0 * s * s * t * t,
          4.0 * s * t * t * t, t * t * t * t};
}

struct Lattice {
  Eigen::Vector3d lo;
  Eigen::Vector3d extent;  // floored away from zero
  std::vector<Eigen::Vector3d> nodes;  // 125 nodes, lexicographic in (i,j,k)

  explicit Lattice(const PointCloud& cloud) {
    Eigen::Vector3d hi;
    cloud.bounding_box(lo, hi);
    extent = (hi - lo).cwiseMax(1e-12);
    nodes.reserve(125);
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        for (int k = 0; k < 5; ++k) {
          nodes.emplace_back(lo.x() + extent.x() * i / 4.0,
                             lo.y() + extent.y() * j / 4.0,
                             lo.z() + extent.z() * k / 4.0);
        }
      }
    }
  }

  double mean_spacing() const { return (extent / 4.0).mean(); }
};

}  // namespace

const char* to_string(CorruptionKind kind) {
  switch (kind) {
    case CorruptionKind::kDensityInc: return "density_inc";
    case CorruptionKind::kDensityDec: return "density_dec";
    case CorruptionKind::kCutout: return "cutout";
    case CorruptionKind::kUniform: return "uniform";
    case CorruptionKind::kGaussian: return "gaussian";
    case CorruptionKind::kImpulse: return "impulse";
    case CorruptionKind::kUpsampling: return "upsampling";
    case CorruptionKind::kBackground: return "background";
    case CorruptionKind::kShear: return "shear";
    case CorruptionKind::kDistortion: return "distortion";
    case CorruptionKind::kDistortionRbf: return "distortion_rbf";
    case CorruptionKind::kDistortionRbfInv: return "distortion_rbf_inv";
  }
  return "unknown";
}

CorruptionKind corruption_kind_from_string(const std::string& name) {
  for (CorruptionKind kind : all_corruption_kinds()) {
    if (name == to_string(kind)) return kind;
  }
  throw std::invalid_argument("unknown corruption kind: " + name);
}

const SeverityTable& severity_table() {
  static const SeverityTable table;
  return table;
}

PointCloud corrupt(const PointCloud& cloud, const CorruptionSpec& spec) {
  switch (spec.kind) {
    case CorruptionKind::kDensityInc: return density_inc(cloud, spec.severity, spec.seed);
    case CorruptionKind::kDensityDec: return density_dec(cloud, spec.severity, spec.seed);
    case CorruptionKind::kCutout: return cutout(cloud, spec.severity, spec.seed);
    case CorruptionKind::kUniform: return noise_uniform(cloud, spec.severity, spec.seed);
    case CorruptionKind::kGaussian: return noise_gaussian(cloud, spec.severity, spec.seed);
    case CorruptionKind::kImpulse: return noise_impulse(cloud, spec.severity, spec.seed);
    case CorruptionKind::kUpsampling:
      return noise_upsampling(cloud, spec.severity, spec.seed);
    case CorruptionKind::kBackground:
      return noise_background(cloud, spec.severity, spec.seed);
    case CorruptionKind::kShear: return transform_shear(cloud, spec.severity, spec.seed);
    case CorruptionKind::kDistortion:
      return transform_distortion(cloud, spec.severity, spec.seed);
    case CorruptionKind::kDistortionRbf:
      return transform_distortion_rbf(cloud, spec.severity, spec.seed, false);
    case CorruptionKind::kDistortionRbfInv:
      return transform_distortion_rbf(cloud, spec.severity, spec.seed, true);
  }
  throw std::invalid_argument("corrupt: unknown corruption kind");
}

PointCloud density_inc(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const auto& table = severity_table();
  const std::size_t k = static_cast<std::size_t>(table.density_inc_knn);
  if (cloud.size() < k) {
    throw std::invalid_argument("density_inc: cloud smaller than the KNN window");
  }

  Rng rng(seed);
  PointCloud out = labeled_copy(cloud);
  const KdTree index(cloud);
  const int clusters = table.cluster_count[level(severity)];
  const auto anchors = rds_indices(cloud.size(), clusters, rng);
  const double jitter = table.density_inc_jitter;

  for (std::size_t anchor : anchors) {
    for (const auto& nb : index.knn(cloud.points[anchor], k)) {
      const Eigen::Vector3d offset(rng.uniform(-jitter, jitter),
                                   rng.uniform(-jitter, jitter),
                                   rng.uniform(-jitter, jitter));
      out.points.push_back(cloud.points[nb.index] + offset);
      out.labels.push_back(PointLabel::kAdded);
    }
  }
  return out;
}

PointCloud density_dec(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const auto& table = severity_table();
  Rng rng(seed);
  const PointCloud labeled = labeled_copy(cloud);
  const auto removed =
      neighborhood_union(labeled, table.cluster_count[level(severity)],
                         table.density_dec_knn, rng,
                         table.density_dec_fraction[level(severity)]);
  return drop_removed(labeled, removed, "density_dec");
}

PointCloud cutout(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const auto& table = severity_table();
  Rng rng(seed);
  const PointCloud labeled = labeled_copy(cloud);
  const auto removed = neighborhood_union(
      labeled, table.cluster_count[level(severity)], table.cutout_knn, rng, 1.0);
  return drop_removed(labeled, removed, "cutout");
}

PointCloud noise_gaussian(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const double sigma = severity_table().gaussian_sigma[level(severity)];
  Rng rng(seed);
  PointCloud out = labeled_copy(cloud);
  for (auto& p : out.points) {
    for (int c = 0; c < 3; ++c) {
      p[c] = clamp_unit(p[c] + rng.normal(0.0, sigma));
    }
  }
  std::fill(out.labels.begin(), out.labels.end(), PointLabel::kPerturbed);
  return out;
}

PointCloud noise_uniform(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const double bound = severity_table().uniform_bound[level(severity)];
  Rng rng(seed);
  PointCloud out = labeled_copy(cloud);
  for (auto& p : out.points) {
    for (int c = 0; c < 3; ++c) {
      p[c] = clamp_unit(p[c] + rng.uniform(-bound, bound));
    }
  }
  std::fill(out.labels.begin(), out.labels.end(), PointLabel::kPerturbed);
  return out;
}

PointCloud noise_impulse(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const auto& table = severity_table();
  const auto count = static_cast<std::size_t>(
      std::floor(table.impulse_fraction[level(severity)] *
                 static_cast<double>(cloud.size())));
  Rng rng(seed);
  PointCloud out = labeled_copy(cloud);
  if (count == 0) return out;

  const double bound = table.impulse_linf;
  for (std::size_t idx : rds_indices(cloud.size(), count, rng)) {
    for (int c = 0; c < 3; ++c) {
      out.points[idx][c] += rng.uniform(-bound, bound);
    }
    out.labels[idx] = PointLabel::kPerturbed;
  }
  return out;
}

PointCloud noise_upsampling(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const auto& table = severity_table();
  const auto count = static_cast<std::size_t>(
      std::floor(table.upsampling_fraction[level(severity)] *
                 static_cast<double>(cloud.size())));
  Rng rng(seed);
  PointCloud out = labeled_copy(cloud);
  if (count == 0) return out;

  const double bound = table.upsampling_linf;
  for (std::size_t anchor : rds_indices(cloud.size(), count, rng)) {
    const Eigen::Vector3d offset(rng.uniform(-bound, bound),
                                 rng.uniform(-bound, bound),
                                 rng.uniform(-bound, bound));
    out.points.push_back(cloud.points[anchor] + offset);
    out.labels.push_back(PointLabel::kAdded);
  }
  return out;
}

PointCloud noise_background(const PointCloud& cloud, int severity, std::uint64_t seed) {
  check_severity(severity);
  const auto& table = severity_table();
  const auto count = static_cast<std::size_t>(
      std::floor(table.background_fraction[level(severity)] *
                 static_cast<double>(cloud.size())));
  Rng rng(seed);
  PointCloud out = labeled_copy(cloud);

  Eigen::Vector3d lo, hi;
  cloud.bounding_box(lo, hi);
  for (std::size_t i = 0; i < count; ++i) {
    out.points.emplace_back(rng.uniform(lo.x(), hi.x()), rng.uniform(lo.y(), hi.y()),
                            rng.uniform(lo.z(), hi.z()));
    out.labels.push_back(PointLabel::kAdded);
  }
  return out;
}

PointCloud shear_apply(const PointCloud& cloud, double a, double b, int driving_axis) {
  if (driving_axis < 0 || driving_axis > 2) {
    throw std::invalid_argument("shear_apply: axis must be 0, 1 or 2");
  }
  const int axis_a = (driving_axis + 1) % 3;
  const int axis_b = (driving_axis + 2) % 3;
  PointCloud out = labeled_copy(cloud);
  for (auto& p : out.points) {
    const double drive = p[driving_axis];
    p[axis_a] += a * drive;
    p[axis_b] += b * drive;
  }
  std::fill(out.labels.begin(), out.labels.end(), PointLabel::kPerturbed);
  return out;
}

PointCloud transform_shear(const PointCloud& cloud, int severity, std::uint64_t seed,
                           int driving_axis) {
  check_severity(severity);
  const double bound = severity_table().shear_bound[level(severity)];
  Rng rng(seed);
  const double a = rng.uniform(-bound, bound);
  const double b = rng.uniform(-bound, bound);
  return shear_apply(cloud, a, b, driving_axis);
}

PointCloud transform_distortion(const PointCloud& cloud, int severity,
                                std::uint64_t seed) {
  check_severity(severity);
  if (cloud.empty()) {
    throw std::invalid_argument("transform_distortion: empty cloud");
  }
  const double gain = severity_table().distortion_gain[level(severity)];
  Rng rng(seed);
  const Lattice lattice(cloud);

  std::vector<Eigen::Vector3d> displacement(125);
  for (auto& d : displacement) {
    d = {rng.uniform(-gain, gain), rng.uniform(-gain, gain), rng.uniform(-gain, gain)};
  }

  PointCloud out = labeled_copy(cloud);
  for (auto& p : out.points) {
    const double u = std::clamp((p.x() - lattice.lo.x()) / lattice.extent.x(), 0.0, 1.0);
    const double v = std::clamp((p.y() - lattice.lo.y()) / lattice.extent.y(), 0.0, 1.0);
    const double w = std::clamp((p.z() - lattice.lo.z()) / lattice.extent.z(), 0.0, 1.0);
    const auto bu = bernstein4(u);
    const auto bv = bernstein4(v);
    const auto bw = bernstein4(w);
    Eigen::Vector3d offset = Eigen::Vector3d::Zero();
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        const double wij = bu[i] * bv[j];
        for (int k = 0; k < 5; ++k) {
          offset += (wij * bw[k]) * displacement[(i * 5 + j) * 5 + k];
        }
      }
    }
    p += offset;
  }
  std::fill(out.labels.begin(), out.labels.end(), PointLabel::kPerturbed);
  return out;
}

PointCloud transform_distortion_rbf(const PointCloud& cloud, int severity,
                                    std::uint64_t seed, bool inverse) {
  check_severity(severity);
  if (cloud.empty()) {
    throw std::invalid_argument("transform_distortion_rbf: empty cloud");
  }
  const double magnitude = severity_table().rbf_magnitude[level(severity)];
  Rng rng(seed);
  const Lattice lattice(cloud);
  const double shape = lattice.mean_spacing();

  const auto basis = [&](double dist) {
    const double q = dist * dist + shape * shape;
    return inverse ? 1.0 / std::sqrt(q) : std::sqrt(q);
  };

  Eigen::MatrixXd targets(125, 3);
  for (int i = 0; i < 125; ++i) {
    targets.row(i) = (magnitude * rng.unit_sphere()).transpose();
  }

  Eigen::MatrixXd system(125, 125);
  for (int i = 0; i < 125; ++i) {
    for (int j = 0; j < 125; ++j) {
      system(i, j) = basis((lattice.nodes[i] - lattice.nodes[j]).norm());
    }
  }

  const auto solve_weights = [&](const Eigen::MatrixXd& mat) {
    Eigen::MatrixXd weights = mat.colPivHouseholderQr().solve(targets);
    // One refinement pass tightens the interpolation residual.
    weights += mat.colPivHouseholderQr().solve(targets - mat * weights);
    return weights;
  };
  const auto residual = [&](const Eigen::MatrixXd& weights) {
    return (system * weights - targets).cwiseAbs().maxCoeff();
  };

  Eigen::MatrixXd weights = solve_weights(system);
  if (!weights.allFinite() || residual(weights) > 1e-8) {
    Eigen::MatrixXd ridged =
        system + 1e-10 * Eigen::MatrixXd::Identity(125, 125);
    weights = solve_weights(ridged);
    if (!weights.allFinite() || residual(weights) > 1e-6) {
      throw std::runtime_error("RBF system singular");
    }
  }

  PointCloud out = labeled_copy(cloud);
  for (auto& p : out.points) {
    Eigen::RowVector3d offset = Eigen::RowVector3d::Zero();
    for (int j = 0; j < 125; ++j) {
      offset += basis((p - lattice.nodes[j]).norm()) * weights.row(j);
    }
    p += offset.transpose();
  }
  std::fill(out.labels.begin(), out.labels.end(), PointLabel::kPerturbed);
  return out;
}

}  // namespace srrf
