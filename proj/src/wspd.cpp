#include "kpspan/wspd.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "kpspan/point_io.hpp"

namespace kpspan {

namespace {

WspdPair make_pair(const SplitTree& tree, NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return {a, b, center_distance(tree.node(a).bbox, tree.node(b).bbox)};
}

void sort_pairs(std::vector<WspdPair>& pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const WspdPair& x, const WspdPair& y) {
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
  });
}

// True if `a` should be split before `b`.
bool split_first(const SplitTree& tree, NodeId a, NodeId b) {
  const double la = l_max(tree.node(a).bbox);
  const double lb = l_max(tree.node(b).bbox);
  if (la != lb) return la > lb;
  const std::size_t na = tree.node(a).size();
  const std::size_t nb = tree.node(b).size();
  if (na != nb) return na > nb;
  return a < b;
}

}  // namespace

bool is_well_separated(const BoundingBox& a, const BoundingBox& b, double s) {
  const double ra = a.half_diagonal();
  const double rb = b.half_diagonal();
  const double rho = std::max(ra, rb);
  return center_distance(a, b) - ra - rb >= s * rho;
}

WspdPairList compute_wspd(const SplitTree& tree, double s) {
  if (!(s > 0.0)) throw InputError("separation constant must be positive");
  WspdPairList result;
  result.s = s;
  result.variant = WspdVariant::Standard;

  std::vector<std::pair<NodeId, NodeId>> stack;
  for (std::size_t i = 0; i < tree.num_nodes(); ++i) {
    const SplitNode& w = tree.node(static_cast<NodeId>(i));
    if (w.is_leaf()) continue;
    stack.emplace_back(w.left, w.right);
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      if (is_well_separated(tree.node(a).bbox, tree.node(b).bbox, s)) {
        result.pairs.push_back(make_pair(tree, a, b));
        continue;
      }
      if (!split_first(tree, a, b)) std::swap(a, b);
      // Distinct points never leave two leaves unseparated, so `a` is internal.
      const SplitNode& big = tree.node(a);
      stack.emplace_back(big.right, b);
      stack.emplace_back(big.left, b);
    }
  }
  sort_pairs(result.pairs);
  return result;
}

WspdPairList make_singleton(const SplitTree& tree, const WspdPairList& standard) {
  WspdPairList result;
  result.s = standard.s;
  result.variant = WspdVariant::Singleton;
  for (const WspdPair& pair : standard.pairs) {
    NodeId small = pair.u;
    NodeId large = pair.v;
    if (tree.node(large).size() < tree.node(small).size()) std::swap(small, large);
    if (tree.node(small).is_leaf()) {
      result.pairs.push_back(pair);
      continue;
    }
    for (std::size_t p : tree.points_of(small))
      result.pairs.push_back(make_pair(tree, tree.leaf_of(p), large));
  }
  sort_pairs(result.pairs);
  return result;
}

WspdPairList compute_singleton_wspd(const SplitTree& tree, double s) {
  return make_singleton(tree, compute_wspd(tree, s));
}

void write_wspd(std::ostream& out, const SplitTree& tree, const WspdPairList& wspd) {
  out << "# wspd s=" << format_double(wspd.s) << " variant="
      << (wspd.variant == WspdVariant::Standard ? "standard" : "singleton")
      << " pairs=" << wspd.size() << '\n';
  for (const WspdPair& p : wspd.pairs)
    out << p.u << ' ' << p.v << ' ' << tree.node(p.u).size() << ' ' << tree.node(p.v).size()
        << ' ' << format_double(p.dist) << '\n';
}

WspdPairList read_wspd(std::istream& in, const SplitTree& tree, double default_s) {
  WspdPairList result;
  result.s = default_s;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::istringstream header(line.substr(1));
      std::string token;
      while (header >> token) {
        if (token.rfind("s=", 0) == 0) result.s = parse_double(token.substr(2));
        if (token == "variant=singleton") result.variant = WspdVariant::Singleton;
      }
      continue;
    }
    std::istringstream fields(line);
    long long u = 0, v = 0;
    std::size_t su = 0, sv = 0;
    std::string dist;
    if (!(fields >> u >> v >> su >> sv >> dist))
      throw InputError("wspd line " + std::to_string(lineno) + ": expected 'u v |S_u| |S_v| dist'");
    const auto count = static_cast<long long>(tree.num_nodes());
    if (u < 0 || v < 0 || u >= count || v >= count || u == v)
      throw InputError("wspd line " + std::to_string(lineno) + ": bad node id");
    WspdPair pair = make_pair(tree, static_cast<NodeId>(u), static_cast<NodeId>(v));
    if (tree.node(static_cast<NodeId>(u)).size() != su ||
        tree.node(static_cast<NodeId>(v)).size() != sv)
      throw InputError("wspd line " + std::to_string(lineno) +
                       ": set sizes do not match the split tree of the points");
    result.pairs.push_back(pair);
  }
  if (!(result.s > 0.0)) throw InputError("wspd separation constant unknown; pass --sep");
  sort_pairs(result.pairs);
  return result;
}

}  // namespace kpspan
