#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "kpspan/split_tree.hpp"
#include "test_support.hpp"

using namespace kpspan;

namespace {

void expect_tree_invariants(const SplitTree& tree, const ColoredPointSet& pts) {
  ASSERT_EQ(tree.num_nodes(), 2 * pts.size() - 1);
  std::vector<int> leaf_hits(pts.size(), 0);
  for (std::size_t i = 0; i < tree.num_nodes(); ++i) {
    const auto id = static_cast<NodeId>(i);
    const SplitNode& n = tree.node(id);
    const BoundingBox tight = bounding_box(pts, tree.points_of(id));
    EXPECT_EQ(n.bbox.lo, tight.lo);
    EXPECT_EQ(n.bbox.hi, tight.hi);
    if (n.is_leaf()) {
      ASSERT_EQ(n.size(), 1u);
      ++leaf_hits[tree.first_point(id)];
      EXPECT_EQ(tree.leaf_of(tree.first_point(id)), id);
      continue;
    }
    const SplitNode& l = tree.node(n.left);
    const SplitNode& r = tree.node(n.right);
    EXPECT_GT(l.size(), 0u);
    EXPECT_GT(r.size(), 0u);
    EXPECT_EQ(l.begin, n.begin);
    EXPECT_EQ(l.end, r.begin);
    EXPECT_EQ(r.end, n.end);
    EXPECT_EQ(l.parent, id);
    EXPECT_EQ(r.parent, id);
    EXPECT_EQ(l.depth, n.depth + 1);
    EXPECT_TRUE(n.bbox.contains(l.bbox));
    EXPECT_TRUE(n.bbox.contains(r.bbox));
    // Split dimension: a longest side, smallest index on ties.
    std::size_t longest = 0;
    for (std::size_t k = 1; k < pts.dim(); ++k)
      if (n.bbox.hi[k] - n.bbox.lo[k] > n.bbox.hi[longest] - n.bbox.lo[longest]) longest = k;
    EXPECT_EQ(static_cast<std::size_t>(n.split_dim), longest);
  }
  for (int h : leaf_hits) EXPECT_EQ(h, 1);
}

}  // namespace

TEST(SplitTree, SinglePointIsOneLeaf) {
  const ColoredPointSet pts({{2.5, -1}}, {1});
  const SplitTree tree(pts);
  ASSERT_EQ(tree.num_nodes(), 1u);
  EXPECT_TRUE(tree.node(0).is_leaf());
  EXPECT_EQ(tree.first_point(0), 0u);
}

TEST(SplitTree, EmptySetThrows) {
  EXPECT_THROW(SplitTree(ColoredPointSet{}), InputError);
}

TEST(SplitTree, HandExampleThreePoints) {
  const ColoredPointSet pts({{0, 0}, {4, 0}, {4, 1}}, {1, 1, 1});
  const SplitTree tree(pts);
  ASSERT_EQ(tree.num_nodes(), 5u);
  const SplitNode& root = tree.node(0);
  EXPECT_EQ(root.bbox.lo, (std::vector<double>{0, 0}));
  EXPECT_EQ(root.bbox.hi, (std::vector<double>{4, 1}));
  EXPECT_EQ(root.split_dim, 0);

  const SplitNode& lower = tree.node(root.left);
  ASSERT_TRUE(lower.is_leaf());
  EXPECT_EQ(tree.first_point(root.left), 0u);

  const SplitNode& upper = tree.node(root.right);
  EXPECT_EQ(upper.size(), 2u);
  EXPECT_EQ(upper.bbox.lo, (std::vector<double>{4, 0}));
  EXPECT_EQ(upper.bbox.hi, (std::vector<double>{4, 1}));
  EXPECT_EQ(upper.split_dim, 1);
  EXPECT_EQ(tree.first_point(upper.left), 1u);
  EXPECT_EQ(tree.first_point(upper.right), 2u);
}

TEST(SplitTree, CollinearDepthIsCeilLog2) {
  for (std::size_t n = 1; n <= 70; ++n) {
    std::vector<std::vector<double>> coords;
    for (std::size_t i = 0; i < n; ++i) coords.push_back({static_cast<double>(i), 0.0});
    const ColoredPointSet pts(coords, std::vector<Color>(n, 1));
    const SplitTree tree(pts);
    int depth = 0;
    for (const SplitNode& node : tree.nodes()) {
      depth = std::max(depth, node.depth);
      if (!node.is_leaf()) {
        const auto a = tree.node(node.left).size(), b = tree.node(node.right).size();
        EXPECT_LE(std::max(a, b) - std::min(a, b), 1u) << "n=" << n;
      }
    }
    EXPECT_EQ(depth, static_cast<int>(std::ceil(std::log2(static_cast<double>(n))))) << "n=" << n;
  }
}

TEST(SplitTree, PointOnPlaneGoesLower) {
  const ColoredPointSet pts({{0}, {1}, {2}}, {1, 1, 1});
  const SplitTree tree(pts);
  EXPECT_EQ(tree.node(tree.node(0).left).size(), 2u);
}

TEST(SplitTree, AdjacentFloatsStillSplit) {
  const double a = 1.0, b = std::nextafter(1.0, 2.0);
  const ColoredPointSet pts({{a, 0}, {b, 0}}, {1, 2});
  const SplitTree tree(pts);
  ASSERT_EQ(tree.num_nodes(), 3u);
  EXPECT_EQ(tree.node(1).size(), 1u);
  EXPECT_EQ(tree.node(2).size(), 1u);
}

TEST(SplitTree, RandomInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t d = 1 + seed % 4;
    const auto dist = seed % 2 ? Distribution::Clustered : Distribution::UniformCube;
    const ColoredPointSet pts = kpspan::testing::random_set(50 + 23 * seed, 3, d, seed, dist);
    expect_tree_invariants(SplitTree(pts), pts);
  }
}

TEST(SplitTree, LongestSideHalvesEveryDLevels) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::size_t d = 1 + seed % 3;
    const ColoredPointSet pts = kpspan::testing::random_set(500, 2, d, 100 + seed,
                                                            seed % 2 ? Distribution::Clustered : Distribution::UniformCube);
    const SplitTree tree(pts);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < tree.num_nodes(); ++i) {
      const SplitNode& below = tree.node(static_cast<NodeId>(i));
      NodeId up = below.parent;
      for (int steps = 1; up != kNoNode; ++steps, up = tree.node(up).parent) {
        if (steps < static_cast<int>(d)) continue;
        ++checked;
        EXPECT_LE(l_max(below.bbox), 0.5 * l_max(tree.node(up).bbox));
      }
    }
    EXPECT_GT(checked, 0u);
  }
}

TEST(SplitTree, IsAncestorMatchesParentWalk) {
  const ColoredPointSet pts = kpspan::testing::random_set(90, 2, 2, 4);
  const SplitTree tree(pts);
  for (std::size_t j = 0; j < tree.num_nodes(); ++j) {
    const auto v = static_cast<NodeId>(j);
    std::vector<bool> above(tree.num_nodes(), false);
    for (NodeId w = v; w != kNoNode; w = tree.node(w).parent) above[static_cast<std::size_t>(w)] = true;
    for (std::size_t i = 0; i < tree.num_nodes(); ++i)
      EXPECT_EQ(tree.is_ancestor(static_cast<NodeId>(i), v), above[i]);
  }
}

TEST(SplitTree, Deterministic) {
  const ColoredPointSet pts = kpspan::testing::random_set(200, 3, 3, 77);
  std::ostringstream a, b;
  SplitTree(pts).dump(a);
  SplitTree(pts).dump(b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_FALSE(a.str().empty());
}
