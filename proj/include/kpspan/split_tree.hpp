#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "kpspan/geometry.hpp"

namespace kpspan {

using NodeId = std::int32_t;
inline constexpr NodeId kNoNode = -1;

struct SplitNode {
  BoundingBox bbox;
  std::size_t begin = 0;  // range into SplitTree::point_order()
  std::size_t end = 0;
  NodeId parent = kNoNode;
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  int depth = 0;
  int split_dim = -1;  // -1 for leaves

  std::size_t size() const { return end - begin; }
  bool is_leaf() const { return left == kNoNode; }
};

/// Fair split tree: every internal node halves the longest side of its
/// (tight) bounding box.
///
/// Node ids are assigned in preorder with the lower child first, so the
/// subtree of `u` occupies ids [u, u + 2*size(u) - 1) and its points occupy
/// point_order()[begin, end) in left-to-right leaf order.
class SplitTree {
 public:
  explicit SplitTree(const ColoredPointSet& points);

  NodeId root() const { return 0; }
  std::size_t num_nodes() const { return nodes_.size(); }
  const SplitNode& node(NodeId id) const { return nodes_[static_cast<std::size_t>(id)]; }
  const std::vector<SplitNode>& nodes() const { return nodes_; }

  const std::vector<std::size_t>& point_order() const { return order_; }
  /// Point indices stored below `id`, in leaf order.
  std::span<const std::size_t> points_of(NodeId id) const;
  NodeId leaf_of(std::size_t point) const { return leaf_of_[point]; }
  std::size_t dim() const { return dim_; }

  /// Leftmost point of the subtree.
  std::size_t first_point(NodeId id) const { return order_[node(id).begin]; }

  bool is_ancestor(NodeId ancestor, NodeId descendant) const;

  void dump(std::ostream& out) const;

 private:
  std::vector<SplitNode> nodes_;
  std::vector<std::size_t> order_;
  std::vector<NodeId> leaf_of_;
  std::size_t dim_ = 0;
};

inline SplitTree build_split_tree(const ColoredPointSet& points) { return SplitTree(points); }

}  // namespace kpspan
