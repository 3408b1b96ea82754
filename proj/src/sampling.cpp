#include "srrf/sampling.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace srrf {

std::vector<std::size_t> fps_indices(const std::vector<Eigen::Vector3d>& points,
                                     std::size_t k, std::uint64_t seed) {
  const std::size_t n = points.size();
  if (k < 1 || k > n) {
    throw std::invalid_argument("fps_indices: k out of range");
  }

  std::vector<std::size_t> chosen;
  chosen.reserve(k);
  std::vector<double> min_sq(n, std::numeric_limits<double>::infinity());
  std::vector<bool> picked(n, false);

  Rng rng(seed);
  std::size_t current = static_cast<std::size_t>(rng.uniform_index(n));
  chosen.push_back(current);
  picked[current] = true;

  while (chosen.size() < k) {
    std::size_t best = n;
    double best_sq = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d2 = (points[i] - points[current]).squaredNorm();
      if (d2 < min_sq[i]) min_sq[i] = d2;
      if (!picked[i] && min_sq[i] > best_sq) {
        best_sq = min_sq[i];
        best = i;
      }
    }
    current = best;
    chosen.push_back(current);
    picked[current] = true;
  }
  return chosen;
}

std::vector<std::size_t> rds_indices(std::size_t n, std::size_t k, Rng& rng) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("rds_indices: k out of range");
  }
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.uniform_index(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

PointCloud select_points(const PointCloud& cloud, const std::vector<std::size_t>& indices) {
  PointCloud out;
  out.points.reserve(indices.size());
  for (std::size_t idx : indices) out.points.push_back(cloud.points[idx]);
  if (cloud.has_labels()) {
    out.labels.reserve(indices.size());
    for (std::size_t idx : indices) out.labels.push_back(cloud.labels[idx]);
  }
  return out;
}

PointCloud fps_sample(const PointCloud& cloud, std::size_t k, std::uint64_t seed) {
  return select_points(cloud, fps_indices(cloud.points, k, seed));
}

PointCloud rds_sample(const PointCloud& cloud, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return select_points(cloud, rds_indices(cloud.size(), k, rng));
}

}  // namespace srrf
