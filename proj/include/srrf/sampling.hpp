#pragma once

#include <cstdint>
#include <vector>

#include "srrf/point_cloud.hpp"
#include "srrf/rng.hpp"

namespace srrf {

/// Farthest-point sampling order: the first index is drawn uniformly from
/// the seed, every following index maximizes the minimum distance to the
/// already-chosen set (ties broken by lowest index). Deterministic in
/// (points, k, seed).
std::vector<std::size_t> fps_indices(const std::vector<Eigen::Vector3d>& points,
                                     std::size_t k, std::uint64_t seed);

/// Uniform sample of k distinct indices out of n, without replacement.
std::vector<std::size_t> rds_indices(std::size_t n, std::size_t k, Rng& rng);

/// Subset of the cloud at the given indices, labels carried along.
PointCloud select_points(const PointCloud& cloud, const std::vector<std::size_t>& indices);

/// Farthest-point sampling of k points; output in selection order.
PointCloud fps_sample(const PointCloud& cloud, std::size_t k, std::uint64_t seed);

/// Random downsampling of k points, uniform without replacement.
PointCloud rds_sample(const PointCloud& cloud, std::size_t k, std::uint64_t seed);

}  // namespace srrf
