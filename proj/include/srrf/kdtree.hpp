#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "srrf/point_cloud.hpp"

namespace srrf {

/// Result of a nearest-neighbor query.
struct Neighbor {
  std::size_t index = 0;
  double squared_distance = 0.0;
};

/// Immutable k-d tree over a point set. Queries return exactly what a
/// brute-force linear scan would: distances are compared exactly and ties
/// are broken by the lowest point index.
class KdTree {
 public:
  explicit KdTree(const std::vector<Eigen::Vector3d>& points);
  explicit KdTree(const PointCloud& cloud) : KdTree(cloud.points) {}

  std::size_t size() const { return points_.size(); }

  /// Single nearest neighbor. Cloud must be non-empty.
  Neighbor nearest(const Eigen::Vector3d& query) const;

  /// k nearest neighbors, sorted by (squared distance, index) ascending.
  /// Requires 1 <= k <= size().
  std::vector<Neighbor> knn(const Eigen::Vector3d& query, std::size_t k) const;

 private:
  struct Node {
    int left = -1;
    int right = -1;
    std::uint32_t begin = 0;  // leaf payload range into order_
    std::uint32_t end = 0;
    std::uint8_t axis = 0;
    double split = 0.0;
    bool leaf = false;
  };

  int build(std::uint32_t begin, std::uint32_t end);

  template <typename Visitor>
  void search(int node_id, const Eigen::Vector3d& query, double& worst,
              Visitor&& visit) const;

  std::vector<Eigen::Vector3d> points_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
  int root_ = -1;

  static constexpr std::uint32_t kLeafSize = 16;
};

}  // namespace srrf
