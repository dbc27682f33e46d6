#include "kpspan/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <thread>
#include <unordered_map>

namespace kpspan {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kMaxListedDisconnected = 32;

struct Adjacency {
  std::vector<std::size_t> offset;
  std::vector<std::size_t> target;
  std::vector<double> weight;

  explicit Adjacency(const SpannerGraph& g) {
    const std::size_t n = g.num_vertices();
    const auto edges = g.edges();
    offset.assign(n + 1, 0);
    for (const Edge& e : edges) {
      ++offset[e.i + 1];
      ++offset[e.j + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
    target.resize(offset[n]);
    weight.resize(offset[n]);
    std::vector<std::size_t> fill(offset.begin(), offset.end() - 1);
    for (const Edge& e : edges) {
      target[fill[e.i]] = e.j;
      weight[fill[e.i]++] = e.weight;
      target[fill[e.j]] = e.i;
      weight[fill[e.j]++] = e.weight;
    }
  }
};

void dijkstra(const Adjacency& adj, std::size_t source, std::vector<double>& dist) {
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::fill(dist.begin(), dist.end(), kInf);
  dist[source] = 0.0;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d > dist[v]) continue;
    for (std::size_t k = adj.offset[v]; k < adj.offset[v + 1]; ++k) {
      const double nd = d + adj.weight[k];
      const std::size_t w = adj.target[k];
      if (nd < dist[w]) {
        dist[w] = nd;
        heap.emplace(nd, w);
      }
    }
  }
}

// Per-source contribution to the stretch report.
struct SourceResult {
  double max_stretch = 0.0;
  std::size_t witness = 0;
  std::vector<double> ratios;
  std::vector<std::size_t> unreachable;
};

double percentile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) return 0.0;
  const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(sorted.size())));
  return sorted[std::min(sorted.size(), std::max<std::size_t>(rank, 1)) - 1];
}

bool within(double lhs, double rhs) { return lhs <= rhs * (1.0 + kRelativeSlack); }

void record(LemmaCheck& check, double lhs, double rhs) {
  ++check.checked;
  if (lhs == 0.0) return;
  const double ratio = rhs > 0.0 ? lhs / rhs : kInf;
  check.worst_ratio = std::max(check.worst_ratio, ratio);
  if (!within(lhs, rhs)) ++check.violations;
}

// Distances between two point lists: min and max.
std::pair<double, double> cross_extremes(const ColoredPointSet& points,
                                         std::span<const std::size_t> x,
                                         std::span<const std::size_t> y) {
  double lo = kInf, hi = 0.0;
  for (std::size_t p : x)
    for (std::size_t q : y) {
      const double d = points.distance(p, q);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
  return {lo, hi};
}

double diameter(const ColoredPointSet& points, std::span<const std::size_t> x) {
  double best = 0.0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b) best = std::max(best, points.distance(x[a], x[b]));
  return best;
}

void lemma21(LemmaCheck& part1, LemmaCheck& part2, const ColoredPointSet& points,
             std::span<const std::size_t> x, std::span<const std::size_t> y, double dx, double dy,
             double s) {
  const auto [lo, hi] = cross_extremes(points, x, y);
  record(part1, dx, (2.0 / s) * lo);
  record(part1, dy, (2.0 / s) * lo);
  record(part2, hi, (1.0 + 4.0 / s) * lo);
}

std::vector<std::size_t> sample(std::span<const std::size_t> ids, std::size_t m, std::mt19937_64& rng) {
  if (ids.size() <= m) return {ids.begin(), ids.end()};
  std::vector<std::size_t> out;
  std::sample(ids.begin(), ids.end(), std::back_inserter(out), m, rng);
  return out;
}

}  // namespace

std::vector<double> shortest_path_lengths(const SpannerGraph& graph, std::size_t source) {
  if (source >= graph.num_vertices()) throw std::out_of_range("source vertex out of range");
  const Adjacency adj(graph);
  std::vector<double> dist(graph.num_vertices());
  dijkstra(adj, source, dist);
  return dist;
}

StretchReport exact_stretch(const SpannerGraph& graph, const ColoredPointSet& points,
                            unsigned threads) {
  const std::size_t n = points.size();
  if (graph.num_vertices() != n)
    throw InputError("graph has " + std::to_string(graph.num_vertices()) +
                     " vertices but the point set has " + std::to_string(n));
  const Adjacency adj(graph);
  std::vector<SourceResult> per_source(n);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<double> dist(n);
    for (std::size_t p = next++; p < n; p = next++) {
      dijkstra(adj, p, dist);
      SourceResult& r = per_source[p];
      for (std::size_t q = p + 1; q < n; ++q) {
        if (points.color_of(p) == points.color_of(q)) continue;
        if (dist[q] == kInf) {
          r.unreachable.push_back(q);
          continue;
        }
        const double ratio = dist[q] / points.distance(p, q);
        r.ratios.push_back(ratio);
        if (ratio > r.max_stretch) {
          r.max_stretch = ratio;
          r.witness = q;
        }
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  StretchReport report;
  report.max_stretch = 0.0;
  std::vector<double> all;
  for (std::size_t p = 0; p < n; ++p) {
    const SourceResult& r = per_source[p];
    report.cross_pairs += r.ratios.size() + r.unreachable.size();
    if (r.max_stretch > report.max_stretch) {
      report.max_stretch = r.max_stretch;
      report.witness = std::pair(p, r.witness);
    }
    for (std::size_t q : r.unreachable) {
      if (report.disconnected.size() < kMaxListedDisconnected) report.disconnected.emplace_back(p, q);
      ++report.disconnected_count;
    }
    all.insert(all.end(), r.ratios.begin(), r.ratios.end());
  }
  if (report.disconnected_count > 0) {
    report.max_stretch = kInf;
    report.witness = report.disconnected.front();
  } else if (report.cross_pairs == 0) {
    report.max_stretch = 1.0;
  }
  if (!all.empty()) {
    double sum = 0.0;
    for (double r : all) sum += r;
    report.mean = sum / static_cast<double>(all.size());
    std::sort(all.begin(), all.end());
    report.p50 = percentile(all, 0.50);
    report.p90 = percentile(all, 0.90);
    report.p99 = percentile(all, 0.99);
  }
  return report;
}

CoverageResult check_wspd_coverage(const SplitTree& tree, const WspdPairList& wspd,
                                   std::size_t cap) {
  const std::size_t n = tree.point_order().size();
  if (n > cap)
    throw InputError("coverage check is brute force: n=" + std::to_string(n) + " exceeds the cap of " +
                     std::to_string(cap) + "; lower n or raise the cap");
  std::vector<std::uint32_t> count(n * n, 0);
  for (const WspdPair& pair : wspd.pairs)
    for (std::size_t p : tree.points_of(pair.u))
      for (std::size_t q : tree.points_of(pair.v)) ++count[std::min(p, q) * n + std::max(p, q)];

  CoverageResult result;
  result.point_pairs = n * (n - 1) / 2;
  for (std::size_t p = 0; p < n && result.pass; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      const std::uint32_t c = count[p * n + q];
      if (c == 1) continue;
      result.pass = false;
      result.counterexample = std::pair(p, q);
      result.count = c;
      result.message = "points " + std::to_string(p) + " and " + std::to_string(q) + " are covered " +
                       std::to_string(c) + " times";
      break;
    }
  if (result.pass) result.message = "every point pair covered exactly once";
  return result;
}

std::size_t count_unseparated_pairs(const SplitTree& tree, const WspdPairList& wspd) {
  return static_cast<std::size_t>(std::count_if(wspd.pairs.begin(), wspd.pairs.end(), [&](const WspdPair& p) {
    return !is_well_separated(tree.node(p.u).bbox, tree.node(p.v).bbox, wspd.s);
  }));
}

bool LemmaReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.pass(); });
}

LemmaReport check_lemma_bounds(const SplitTree& tree, const WspdPairList& wspd,
                               const ColoredPointSet& points, std::size_t cap) {
  const double s = wspd.s;
  const std::size_t d = tree.dim();
  LemmaReport report;
  report.exhaustive = points.size() <= cap;
  report.checks = {{"wspd intra-set diameter <= (2/s)|pq|"},
                   {"wspd pair spread <= (1+4/s)|pq|"},
                   {"l_max halves every d levels"},
                   {"parent l_max >= 2l/(sqrt(d)(s+4))"}};
  LemmaCheck& part1 = report.checks[0];
  LemmaCheck& part2 = report.checks[1];
  LemmaCheck& halving = report.checks[2];
  LemmaCheck& parent = report.checks[3];

  if (report.exhaustive) {
    std::unordered_map<NodeId, double> diam;
    auto diam_of = [&](NodeId u) {
      auto it = diam.find(u);
      if (it == diam.end()) it = diam.emplace(u, diameter(points, tree.points_of(u))).first;
      return it->second;
    };
    for (const WspdPair& pair : wspd.pairs)
      lemma21(part1, part2, points, tree.points_of(pair.u), tree.points_of(pair.v), diam_of(pair.u),
              diam_of(pair.v), s);
  } else {
    constexpr std::size_t kSamples = 24;
    std::mt19937_64 rng(0x5eed);
    for (const WspdPair& pair : wspd.pairs) {
      const auto x = sample(tree.points_of(pair.u), kSamples, rng);
      const auto y = sample(tree.points_of(pair.v), kSamples, rng);
      lemma21(part1, part2, points, x, y, diameter(points, x), diameter(points, y), s);
    }
  }

  for (std::size_t i = 0; i < tree.num_nodes(); ++i) {
    const SplitNode& below = tree.node(static_cast<NodeId>(i));
    const double lb = l_max(below.bbox);
    for (NodeId a = below.parent; a != kNoNode; a = tree.node(a).parent) {
      if (static_cast<std::size_t>(below.depth - tree.node(a).depth) < d) continue;
      record(halving, lb, 0.5 * l_max(tree.node(a).bbox));
    }
  }

  if (wspd.variant == WspdVariant::Standard) {
    const double scale = 2.0 / (std::sqrt(static_cast<double>(d)) * (s + 4.0));
    for (const WspdPair& pair : wspd.pairs)
      for (NodeId side : {pair.u, pair.v}) {
        const NodeId up = tree.node(side).parent;
        if (up == kNoNode) continue;
        record(parent, scale * pair.dist, l_max(tree.node(up).bbox));
      }
  } else {
    parent.skipped = true;
  }
  return report;
}

LemmaReport check_pair_lemmas(const ColoredPointSet& points, const std::vector<std::size_t>& x,
                              const std::vector<std::size_t>& y, double s) {
  LemmaReport report;
  report.checks = {{"wspd intra-set diameter <= (2/s)|pq|"}, {"wspd pair spread <= (1+4/s)|pq|"}};
  lemma21(report.checks[0], report.checks[1], points, x, y, diameter(points, x), diameter(points, y), s);
  return report;
}

EdgeAudit audit_edge_count(const SpannerGraph& graph, std::size_t n, Algorithm alg) {
  EdgeAudit audit;
  audit.n = n;
  audit.edges = graph.num_edges();
  double denom = static_cast<double>(n);
  if (alg == Algorithm::Alg3) denom *= std::log2(static_cast<double>(n));
  audit.ratio = denom > 0.0 ? static_cast<double>(audit.edges) / denom : 0.0;
  return audit;
}

}  // namespace kpspan
