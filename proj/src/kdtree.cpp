#include "srrf/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace srrf {

KdTree::KdTree(const std::vector<Eigen::Vector3d>& points) : points_(points) {
  order_.resize(points_.size());
  for (std::uint32_t i = 0; i < order_.size(); ++i) order_[i] = i;
  if (!points_.empty()) {
    nodes_.reserve(2 * points_.size() / kLeafSize + 2);
    root_ = build(0, static_cast<std::uint32_t>(order_.size()));
  }
}

int KdTree::build(std::uint32_t begin, std::uint32_t end) {
  const int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();

  if (end - begin <= kLeafSize) {
    nodes_[id].leaf = true;
    nodes_[id].begin = begin;
    nodes_[id].end = end;
    return id;
  }

  Eigen::Vector3d lo = Eigen::Vector3d::Constant(std::numeric_limits<double>::max());
  Eigen::Vector3d hi = Eigen::Vector3d::Constant(std::numeric_limits<double>::lowest());
  for (std::uint32_t i = begin; i < end; ++i) {
    lo = lo.cwiseMin(points_[order_[i]]);
    hi = hi.cwiseMax(points_[order_[i]]);
  }
  int axis = 0;
  (hi - lo).maxCoeff(&axis);

  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double ca = points_[a][axis];
                     const double cb = points_[b][axis];
                     return ca < cb || (ca == cb && a < b);
                   });

  nodes_[id].axis = static_cast<std::uint8_t>(axis);
  nodes_[id].split = points_[order_[mid]][axis];
  const int left = build(begin, mid);
  const int right = build(mid, end);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

template <typename Visitor>
void KdTree::search(int node_id, const Eigen::Vector3d& query, double& worst,
                    Visitor&& visit) const {
  const Node& node = nodes_[node_id];
  if (node.leaf) {
    for (std::uint32_t i = node.begin; i < node.end; ++i) {
      const std::uint32_t idx = order_[i];
      visit(idx, (query - points_[idx]).squaredNorm());
    }
    return;
  }

  const double diff = query[node.axis] - node.split;
  const int near = diff < 0.0 ? node.left : node.right;
  const int far = diff < 0.0 ? node.right : node.left;

  search(near, query, worst, visit);
  // The far side may still hold an equal-distance neighbor with a lower
  // index, so it is pruned only when strictly farther than the bound.
  if (diff * diff <= worst) {
    search(far, query, worst, visit);
  }
}

Neighbor KdTree::nearest(const Eigen::Vector3d& query) const {
  if (points_.empty()) {
    throw std::invalid_argument("KdTree::nearest: empty point set");
  }
  Neighbor best;
  best.index = 0;
  best.squared_distance = std::numeric_limits<double>::infinity();
  double worst = best.squared_distance;
  search(root_, query, worst, [&](std::uint32_t idx, double d2) {
    if (d2 < best.squared_distance ||
        (d2 == best.squared_distance && idx < best.index)) {
      best.index = idx;
      best.squared_distance = d2;
      worst = d2;
    }
  });
  return best;
}

std::vector<Neighbor> KdTree::knn(const Eigen::Vector3d& query, std::size_t k) const {
  if (k < 1 || k > points_.size()) {
    throw std::invalid_argument("KdTree::knn: k out of range");
  }
  std::vector<Neighbor> heap;  // kept sorted by (squared distance, index)
  heap.reserve(k + 1);

  const auto comes_before = [](const Neighbor& a, const Neighbor& b) {
    return a.squared_distance < b.squared_distance ||
           (a.squared_distance == b.squared_distance && a.index < b.index);
  };

  double worst = std::numeric_limits<double>::infinity();
  search(root_, query, worst, [&](std::uint32_t idx, double d2) {
    const Neighbor cand{idx, d2};
    if (heap.size() == k && !comes_before(cand, heap.back())) {
      return;
    }
    auto pos = std::upper_bound(heap.begin(), heap.end(), cand, comes_before);
    heap.insert(pos, cand);
    if (heap.size() > k) heap.pop_back();
    if (heap.size() == k) worst = heap.back().squared_distance;
  });
  return heap;
}

}  // namespace srrf
