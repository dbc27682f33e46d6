#include "kpspan/split_tree.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "kpspan/point_io.hpp"

namespace kpspan {

namespace {

int longest_dimension(const BoundingBox& box) {
  int best = 0;
  for (std::size_t i = 1; i < box.dim(); ++i)
    if (box.hi[i] - box.lo[i] > box.hi[best] - box.lo[best]) best = static_cast<int>(i);
  return best;
}

struct Pending {
  NodeId parent;
  bool is_left;
  std::size_t begin, end;
  int depth;
};

}  // namespace

SplitTree::SplitTree(const ColoredPointSet& points) : dim_(points.dim()) {
  if (points.empty()) throw InputError("empty point set");
  const std::size_t n = points.size();
  order_.resize(n);
  std::iota(order_.begin(), order_.end(), 0);
  leaf_of_.assign(n, kNoNode);
  nodes_.reserve(2 * n - 1);

  std::vector<Pending> stack{{kNoNode, true, 0, n, 0}};
  while (!stack.empty()) {
    const Pending job = stack.back();
    stack.pop_back();

    const auto id = static_cast<NodeId>(nodes_.size());
    SplitNode node;
    node.begin = job.begin;
    node.end = job.end;
    node.parent = job.parent;
    node.depth = job.depth;
    node.bbox = bounding_box(points, std::span(order_).subspan(job.begin, job.end - job.begin));
    if (job.parent != kNoNode) {
      auto& parent = nodes_[static_cast<std::size_t>(job.parent)];
      (job.is_left ? parent.left : parent.right) = id;
    }

    if (node.size() == 1) {
      leaf_of_[order_[node.begin]] = id;
      nodes_.push_back(std::move(node));
      continue;
    }

    const int dim = longest_dimension(node.bbox);
    const double mid = 0.5 * (node.bbox.lo[dim] + node.bbox.hi[dim]);
    const auto first = order_.begin() + static_cast<std::ptrdiff_t>(node.begin);
    const auto last = order_.begin() + static_cast<std::ptrdiff_t>(node.end);
    auto cut = std::stable_partition(
        first, last, [&](std::size_t p) { return points[p].coords[dim] <= mid; });
    if (cut == first || cut == last) {
      // Rounding put every point on one side of the plane; fall back to a
      // median split along the same dimension.
      std::stable_sort(first, last, [&](std::size_t a, std::size_t b) {
        return points[a].coords[dim] < points[b].coords[dim];
      });
      cut = first + (last - first) / 2;
    }
    node.split_dim = dim;
    const std::size_t cut_pos = static_cast<std::size_t>(cut - order_.begin());
    nodes_.push_back(std::move(node));

    stack.push_back({id, false, cut_pos, job.end, job.depth + 1});
    stack.push_back({id, true, job.begin, cut_pos, job.depth + 1});
  }
}

std::span<const std::size_t> SplitTree::points_of(NodeId id) const {
  const SplitNode& n = node(id);
  return std::span(order_).subspan(n.begin, n.size());
}

bool SplitTree::is_ancestor(NodeId ancestor, NodeId descendant) const {
  const auto span = static_cast<NodeId>(2 * node(ancestor).size() - 1);
  return descendant >= ancestor && descendant < ancestor + span;
}

void SplitTree::dump(std::ostream& out) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const SplitNode& n = nodes_[i];
    out << std::string(static_cast<std::size_t>(2 * n.depth), ' ') << i << " [" << n.begin
        << ',' << n.end << ")";
    out << " lo=(";
    for (std::size_t d = 0; d < dim_; ++d) out << (d ? "," : "") << format_double(n.bbox.lo[d]);
    out << ") hi=(";
    for (std::size_t d = 0; d < dim_; ++d) out << (d ? "," : "") << format_double(n.bbox.hi[d]);
    out << ")";
    if (n.is_leaf())
      out << " point=" << order_[n.begin];
    else
      out << " split=" << n.split_dim << " children=" << n.left << ',' << n.right;
    out << '\n';
  }
}

}  // namespace kpspan
