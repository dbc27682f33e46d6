#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "kpspan/verify.hpp"
#include "test_support.hpp"

using namespace kpspan;
using kpspan::testing::random_set;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Shortest path lengths by enumerating every simple path from `source`.
std::vector<double> enumerate_paths(const SpannerGraph& g, std::size_t source) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.i].push_back({e.j, e.weight});
    adj[e.j].push_back({e.i, e.weight});
  }
  std::vector<double> best(n, kInf);
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, double)> walk = [&](std::size_t v, double len) {
    best[v] = std::min(best[v], len);
    on_path[v] = true;
    for (auto [w, wt] : adj[v])
      if (!on_path[w]) walk(w, len + wt);
    on_path[v] = false;
  };
  walk(source, 0.0);
  return best;
}

ColoredPointSet scaled(const ColoredPointSet& pts, double factor) {
  std::vector<std::vector<double>> coords;
  for (const Point& p : pts.points()) {
    coords.push_back(p.coords);
    for (double& x : coords.back()) x *= factor;
  }
  return ColoredPointSet(coords, pts.colors());
}

}  // namespace

TEST(Stretch, CompleteGraphIsOne) {
  const ColoredPointSet pts = random_set(40, 3, 2, 1);
  const StretchReport r = exact_stretch(complete_k_partite(pts), pts);
  EXPECT_EQ(r.max_stretch, 1.0);
  EXPECT_TRUE(r.connected());
  EXPECT_EQ(r.cross_pairs, 40u * 39u / 2u - 2u * (13u * 12u / 2u) - 14u * 13u / 2u);
}

TEST(Stretch, DetourThroughThirdColour) {
  const ColoredPointSet pts({{0, 0}, {2, 0}, {1, 1}}, {1, 2, 3});
  SpannerGraph g(3);
  g.add_edge(0, 2, pts.distance(0, 2), kExternal);
  g.add_edge(2, 1, pts.distance(2, 1), kExternal);
  const StretchReport r = exact_stretch(g, pts);
  EXPECT_NEAR(r.max_stretch, std::sqrt(2.0), 1e-15);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (std::pair<std::size_t, std::size_t>{0, 1}));
}

TEST(Stretch, EmptyGraphIsDisconnected) {
  const ColoredPointSet pts({{0, 0}, {1, 0}, {0, 1}}, {1, 2, 2});
  const StretchReport r = exact_stretch(SpannerGraph(3), pts);
  EXPECT_FALSE(r.connected());
  EXPECT_EQ(r.disconnected_count, 2u);
  EXPECT_TRUE(std::isinf(r.max_stretch));
}

TEST(Stretch, VertexMismatchThrows) {
  const ColoredPointSet pts({{0, 0}, {1, 0}}, {1, 2});
  EXPECT_THROW(exact_stretch(SpannerGraph(3), pts), InputError);
}

TEST(Stretch, ShortestPathsMatchExhaustiveEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 11;
    const ColoredPointSet pts = random_set(n, 1, 2, 500 + trial);
    std::bernoulli_distribution keep(0.35);
    SpannerGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (keep(rng)) g.add_edge(i, j, pts.distance(i, j), kExternal);
    for (std::size_t s = 0; s < n; ++s) {
      const auto fast = shortest_path_lengths(g, s);
      const auto slow = enumerate_paths(g, s);
      for (std::size_t v = 0; v < n; ++v) {
        if (std::isinf(slow[v])) {
          EXPECT_TRUE(std::isinf(fast[v]));
        } else {
          EXPECT_LE(std::abs(fast[v] - slow[v]), 1e-12 * slow[v]);
        }
      }
    }
  }
}

TEST(Stretch, MatchesFloydWarshallOnSpanners) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const ColoredPointSet pts = random_set(90, 2 + seed % 3, 2, seed);
    const SpannerGraph g = build_spanner_alg1(pts, 4).graph;
    EXPECT_NEAR(exact_stretch(g, pts).max_stretch, kpspan::testing::brute_stretch(g, pts), 1e-12);
  }
}

TEST(Stretch, ScaleInvariant) {
  const ColoredPointSet pts = random_set(120, 3, 2, 6);
  const SpannerGraph g = build_spanner_alg1(pts, 6).graph;
  const double base = exact_stretch(g, pts).max_stretch;
  for (double f : {1024.0, 1.0 / 64.0}) {
    const ColoredPointSet big = scaled(pts, f);
    std::stringstream buf;
    write_edge_list(buf, g);
    EXPECT_EQ(exact_stretch(read_edge_list(buf, big), big).max_stretch, base);
  }
  const ColoredPointSet odd = scaled(pts, 3.7);
  std::stringstream buf;
  write_edge_list(buf, g);
  EXPECT_NEAR(exact_stretch(read_edge_list(buf, odd), odd).max_stretch, base, 1e-12 * base);
}

TEST(Stretch, ThreadCountDoesNotChangeReport) {
  const ColoredPointSet pts = random_set(250, 3, 2, 10);
  SpannerGraph g = build_spanner_alg2(pts, heuristic_params(6, 2)).graph;
  g.remove_edge(g.edges()[0].i, g.edges()[0].j);
  const StretchReport a = exact_stretch(g, pts, 1);
  for (unsigned t : {2u, 4u, 7u}) {
    const StretchReport b = exact_stretch(g, pts, t);
    EXPECT_EQ(a.max_stretch, b.max_stretch);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.p50, b.p50);
    EXPECT_EQ(a.p99, b.p99);
    EXPECT_EQ(a.disconnected, b.disconnected);
  }
}

TEST(Coverage, ValidWspdPasses) {
  const ColoredPointSet pts = random_set(50, 2, 2, 50);
  const SplitTree tree(pts);
  const CoverageResult r = check_wspd_coverage(tree, compute_wspd(tree, 3.0));
  EXPECT_TRUE(r.pass) << r.message;
  EXPECT_EQ(r.point_pairs, 50u * 49u / 2u);
}

TEST(Coverage, DeletedPairLeavesAGap) {
  const ColoredPointSet pts = random_set(50, 2, 2, 51);
  const SplitTree tree(pts);
  WspdPairList w = compute_wspd(tree, 3.0);
  const WspdPair gone = w.pairs[w.size() / 2];
  w.pairs.erase(w.pairs.begin() + static_cast<long>(w.size() / 2));
  const CoverageResult r = check_wspd_coverage(tree, w);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.count, 0u);
  ASSERT_TRUE(r.counterexample);
  const auto [p, q] = *r.counterexample;
  const auto in = [&](NodeId u, std::size_t x) { return tree.is_ancestor(u, tree.leaf_of(x)); };
  EXPECT_TRUE((in(gone.u, p) && in(gone.v, q)) || (in(gone.u, q) && in(gone.v, p)));
}

TEST(Coverage, DuplicatedPairCountsTwice) {
  const ColoredPointSet pts = random_set(50, 2, 2, 52);
  const SplitTree tree(pts);
  WspdPairList w = compute_wspd(tree, 3.0);
  w.pairs.push_back(w.pairs.front());
  const CoverageResult r = check_wspd_coverage(tree, w);
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.count, 2u);
}

TEST(Coverage, CapEnforced) {
  const ColoredPointSet pts = random_set(60, 2, 2, 53);
  const SplitTree tree(pts);
  EXPECT_THROW(check_wspd_coverage(tree, compute_wspd(tree, 2.0), 59), InputError);
}

TEST(Lemmas, ValidWspdPasses) {
  for (double s : {2.0, 8.0, 32.0}) {
    const ColoredPointSet pts = random_set(200, 2, 2, static_cast<std::uint64_t>(s));
    const SplitTree tree(pts);
    const LemmaReport r = check_lemma_bounds(tree, compute_wspd(tree, s), pts);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.pass());
    for (const LemmaCheck& c : r.checks) {
      EXPECT_GT(c.checked, 0u) << c.name;
      EXPECT_LE(c.worst_ratio, 1.0 + kRelativeSlack) << c.name;
    }
  }
}

TEST(Lemmas, SampledModeOnLargeInputs) {
  const ColoredPointSet pts = random_set(800, 2, 3, 3);
  const SplitTree tree(pts);
  const LemmaReport r = check_lemma_bounds(tree, compute_wspd(tree, 4.0), pts, 300);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_TRUE(r.pass());
}

TEST(Lemmas, InjectedUnseparatedPairDetected) {
  const ColoredPointSet pts({{0, 0}, {1, 0}, {1.5, 0}}, {1, 1, 2});
  const LemmaReport r = check_pair_lemmas(pts, {0, 1}, {2}, 10.0);
  EXPECT_FALSE(r.pass());
  EXPECT_GT(r.checks[0].violations, 0u);
  EXPECT_GT(r.checks[0].worst_ratio, 1.0);
}

TEST(Lemmas, SingletonSidesTriviallyPass) {
  const ColoredPointSet pts({{0, 0}, {5, 0}, {11, 3}}, {1, 2, 1});
  const LemmaReport r = check_pair_lemmas(pts, {0}, {2}, 10.0);
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checks[0].worst_ratio, 0.0);
}

TEST(Lemmas, UnseparatedPairsCounted) {
  const ColoredPointSet pts = random_set(60, 2, 2, 54);
  const SplitTree tree(pts);
  WspdPairList w = compute_wspd(tree, 2.0);
  EXPECT_EQ(count_unseparated_pairs(tree, w), 0u);
  w.s = 1e6;
  EXPECT_GT(count_unseparated_pairs(tree, w), 0u);
}

TEST(Audit, Ratios) {
  const ColoredPointSet pts({{0, 0}, {1, 0}}, {1, 2});
  const EdgeAudit a = audit_edge_count(build_spanner_alg1(pts, 8).graph, 2, Algorithm::Alg1);
  EXPECT_EQ(a.edges, 1u);
  EXPECT_EQ(a.ratio, 0.5);
  SpannerGraph g(8);
  for (std::size_t i = 1; i < 8; ++i) g.add_edge(0, i, 1.0, kExternal);
  EXPECT_EQ(audit_edge_count(g, 8, Algorithm::Alg3).ratio, 7.0 / 24.0);
}
