#include "kpspan/spanner.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "kpspan/point_io.hpp"

namespace kpspan {

WspdPairList compute_mwspd(const WspdPairList& wspd, const SplitTree& tree,
                           const ColoredPointSet& points) {
  // Colour shared by a whole subtree, 0 if mixed; children have larger ids.
  std::vector<Color> mono(tree.num_nodes(), 0);
  for (std::size_t i = tree.num_nodes(); i-- > 0;) {
    const SplitNode& n = tree.node(static_cast<NodeId>(i));
    if (n.is_leaf()) {
      mono[i] = points.color_of(tree.point_order()[n.begin]);
    } else {
      const Color l = mono[static_cast<std::size_t>(n.left)];
      mono[i] = l == mono[static_cast<std::size_t>(n.right)] ? l : 0;
    }
  }
  WspdPairList result;
  result.s = wspd.s;
  result.variant = wspd.variant;
  for (const WspdPair& p : wspd.pairs) {
    const Color a = mono[static_cast<std::size_t>(p.u)];
    if (a == 0 || a != mono[static_cast<std::size_t>(p.v)]) result.pairs.push_back(p);
  }
  return result;
}

NodeClassification classify_nodes(const SplitTree& tree, const WspdPairList& mwspd,
                                  const ColoredPointSet& points) {
  const std::size_t count = tree.num_nodes();
  NodeClassification cls;
  cls.nodes.resize(count);
  cls.pairs_of.resize(count);
  for (std::size_t idx = 0; idx < mwspd.pairs.size(); ++idx) {
    const WspdPair& p = mwspd.pairs[idx];
    cls.pairs_of[static_cast<std::size_t>(p.u)].push_back(idx);
    cls.pairs_of[static_cast<std::size_t>(p.v)].push_back(idx);
  }

  // Bottom-up: colour status and representatives.
  std::vector<char> has_cnode_below(count, 0);
  for (std::size_t i = count; i-- > 0;) {
    const SplitNode& n = tree.node(static_cast<NodeId>(i));
    NodeInfo& info = cls.nodes[i];
    info.rep = tree.first_point(static_cast<NodeId>(i));
    info.in_pair = !cls.pairs_of[i].empty();
    if (n.is_leaf()) {
      info.mono_color = points.color_of(info.rep);
    } else {
      const NodeInfo& l = cls.nodes[static_cast<std::size_t>(n.left)];
      const NodeInfo& r = cls.nodes[static_cast<std::size_t>(n.right)];
      info.mono_color = l.mono_color == r.mono_color ? l.mono_color : 0;
      if (info.mono_color == 0) {
        const Color c = points.color_of(info.rep);
        if (l.mono_color == 0)
          info.rep_prime = l.rep_prime;
        else if (points.color_of(r.rep) != c)
          info.rep_prime = r.rep;
        else
          info.rep_prime = r.rep_prime;
      }
      has_cnode_below[i] = has_cnode_below[static_cast<std::size_t>(n.left)] ||
                           has_cnode_below[static_cast<std::size_t>(n.right)] ||
                           cls.nodes[static_cast<std::size_t>(n.left)].is_cnode ||
                           cls.nodes[static_cast<std::size_t>(n.right)].is_cnode;
    }
    info.is_cnode = info.mono_color != 0 && info.in_pair;
    info.is_multichromatic = info.mono_color == 0 && info.in_pair;
    info.is_cleaf = info.is_cnode && !has_cnode_below[i];
  }

  // Top-down: nearest c-node ancestor.
  for (std::size_t i = 1; i < count; ++i) {
    const auto parent = static_cast<std::size_t>(tree.node(static_cast<NodeId>(i)).parent);
    cls.nodes[i].c_parent =
        cls.nodes[parent].is_cnode ? static_cast<NodeId>(parent) : cls.nodes[parent].c_parent;
    cls.nodes[i].is_croot = cls.nodes[i].is_cnode && cls.nodes[i].c_parent == kNoNode;
  }
  cls.nodes[0].is_croot = cls.nodes[0].is_cnode;
  return cls;
}

std::size_t other_color_rep(const NodeClassification& cls, NodeId node, Color c,
                            const ColoredPointSet& points) {
  const NodeInfo& info = cls[node];
  if (points.color_of(info.rep) != c) return info.rep;
  if (info.rep_prime != kNoPoint && points.color_of(info.rep_prime) != c) return info.rep_prime;
  throw std::logic_error("node " + std::to_string(node) + " has no representative of a colour other than " +
                         std::to_string(c));
}

ClosestPairAssignment compute_cl(const SplitTree& tree, const WspdPairList& mwspd,
                                 const NodeClassification& cls) {
  const std::size_t count = tree.num_nodes();
  ClosestPairAssignment cl;
  cl.target.assign(count, kNoNode);
  cl.anchor.assign(count, kNoNode);
  cl.dist.assign(count, 0.0);

  // Ordered by distance, then deeper anchor, then smaller partner id.
  auto better = [&](double d1, NodeId a1, NodeId w1, double d2, NodeId a2, NodeId w2) {
    const int depth1 = tree.node(a1).depth;
    const int depth2 = tree.node(a2).depth;
    return std::tuple(d1, -depth1, w1) < std::tuple(d2, -depth2, w2);
  };

  // Preorder ids: a c-parent is always finalised before its c-children.
  for (std::size_t i = 0; i < count; ++i) {
    const NodeInfo& info = cls.nodes[i];
    if (!info.is_cnode) continue;
    const auto u = static_cast<NodeId>(i);
    if (info.c_parent != kNoNode) {
      const auto p = static_cast<std::size_t>(info.c_parent);
      cl.target[i] = cl.target[p];
      cl.anchor[i] = cl.anchor[p];
      cl.dist[i] = cl.dist[p];
    }
    for (std::size_t idx : cls.pairs_of[i]) {
      const WspdPair& pair = mwspd.pairs[idx];
      const NodeId w = pair.partner(u);
      if (cl.target[i] == kNoNode ||
          better(pair.dist, u, w, cl.dist[i], cl.anchor[i], cl.target[i])) {
        cl.target[i] = w;
        cl.anchor[i] = u;
        cl.dist[i] = pair.dist;
      }
    }
    if (cl.target[i] == kNoNode)
      throw std::logic_error("c-node " + std::to_string(i) + " has no candidate pair");
  }
  return cl;
}

int compute_mu(double s, std::size_t d) {
  const double rd = std::sqrt(static_cast<double>(d));
  return static_cast<int>(std::ceil(std::log2(rd * (1.0 + 4.0 / s)))) + 1;
}

double compute_t_prime(double s, std::size_t d) {
  const double rd = std::sqrt(static_cast<double>(d));
  const double mu = compute_mu(s, d);
  const double f = 1.0 + 4.0 / s;
  return 4.0 * rd * (mu * static_cast<double>(d) + 1.0) * f * f * f;
}

double compute_t_alg1(double s, std::size_t d) {
  return 2.0 * compute_t_prime(s, d) + 1.0 + 4.0 / s;
}

bool alg1_bound_certified(double s, std::size_t d) {
  const double t = compute_t_alg1(s, d);
  const double f = 1.0 + 4.0 / s;
  return compute_t_prime(s, d) + f + 4.0 * t / s <= t && f + 8.0 * t / s <= t;
}

namespace {

SpannerParams fill_params(double s, std::size_t d, int delta) {
  SpannerParams p;
  p.s = s;
  p.d = d;
  p.mu = compute_mu(s, d);
  p.delta = delta;
  p.zeta = 2 * delta * (p.mu * static_cast<int>(d) + 1);
  p.t_prime = compute_t_prime(s, d);
  p.t_alg1 = compute_t_alg1(s, d);
  return p;
}

bool s_meets(double s, double eps) {
  const double f = 1.0 + 4.0 / s;
  return s >= 12.0 / eps && f * f <= 1.0 + eps / 36.0;
}

bool delta_meets(int delta, double eps) {
  const double pow2 = std::ldexp(1.0, delta);
  return pow2 / (pow2 - 1.0) <= 1.0 + eps / 36.0;
}

}  // namespace

SpannerParams derive_params(double epsilon, std::size_t d) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InputError("epsilon must lie in (0, 1)");
  if (d < 1) throw InputError("dimension must be >= 1");
  double s = std::ceil(12.0 / epsilon);
  while (!s_meets(s, epsilon)) s += 1.0;
  int delta = 1;
  while (!delta_meets(delta, epsilon)) ++delta;
  SpannerParams p = fill_params(s, d, delta);
  p.epsilon = epsilon;
  return p;
}

SpannerParams heuristic_params(double s, std::size_t d, int delta) {
  if (!(s > 0.0)) throw InputError("separation constant must be positive");
  if (d < 1) throw InputError("dimension must be >= 1");
  if (delta < 1) throw InputError("delta must be >= 1");
  return fill_params(s, d, delta);
}

bool params_certified(const SpannerParams& p) {
  if (!p.epsilon) return false;
  const double eps = *p.epsilon;
  return eps > 0.0 && eps < 1.0 && s_meets(p.s, eps) && delta_meets(p.delta, eps) &&
         p.mu == compute_mu(p.s, p.d) && p.zeta >= 2 * p.delta * (p.mu * static_cast<int>(p.d) + 1);
}

std::string to_string(Algorithm alg) {
  switch (alg) {
    case Algorithm::Alg1: return "alg1";
    case Algorithm::Alg2: return "alg2";
    case Algorithm::Alg3: return "alg3";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "alg1") return Algorithm::Alg1;
  if (name == "alg2") return Algorithm::Alg2;
  if (name == "alg3") return Algorithm::Alg3;
  throw InputError("unknown algorithm '" + name + "' (expected alg1, alg2 or alg3)");
}

namespace {

constexpr const char* kTagNames[kNumEdgeTags] = {"star",   "closest", "pair",  "child",
                                                 "zdown",  "zup",     "multi", "external"};

}  // namespace

std::string tag_names(std::uint8_t tags) {
  std::string out;
  for (int b = 0; b < kNumEdgeTags; ++b) {
    if (!(tags & (1u << b))) continue;
    if (!out.empty()) out += '+';
    out += kTagNames[b];
  }
  return out.empty() ? "-" : out;
}

std::uint8_t parse_tags(const std::string& text) {
  std::uint8_t tags = 0;
  std::istringstream in(text);
  std::string name;
  while (std::getline(in, name, '+')) {
    if (name == "-" || name.empty()) continue;
    auto it = std::find_if(std::begin(kTagNames), std::end(kTagNames),
                           [&](const char* t) { return name == t; });
    if (it == std::end(kTagNames)) throw InputError("unknown edge provenance '" + name + "'");
    tags |= static_cast<std::uint8_t>(1u << (it - std::begin(kTagNames)));
  }
  return tags;
}

void SpannerGraph::add_edge(std::size_t i, std::size_t j, double weight, std::uint8_t tags) {
  if (i == j) throw std::logic_error("self-loop on vertex " + std::to_string(i));
  if (i >= n_ || j >= n_) throw std::out_of_range("edge endpoint out of range");
  if (i > j) std::swap(i, j);
  auto [it, inserted] = edges_.try_emplace({i, j}, Data{weight, tags});
  if (!inserted) it->second.tags |= tags;
}

bool SpannerGraph::remove_edge(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return edges_.erase({i, j}) > 0;
}

bool SpannerGraph::has_edge(std::size_t i, std::size_t j) const {
  if (i > j) std::swap(i, j);
  return edges_.count({i, j}) > 0;
}

std::vector<Edge> SpannerGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [key, data] : edges_) out.push_back({key.first, key.second, data.weight, data.tags});
  return out;
}

SpannerGraph complete_k_partite(const ColoredPointSet& points) {
  SpannerGraph g(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points.color_of(i) != points.color_of(j))
        g.add_edge(i, j, points.distance(i, j), kExternal);
  return g;
}

namespace {

class Construction {
 public:
  Construction(const ColoredPointSet& points, const SplitTree& tree, const WspdPairList& wspd)
      : points_(points),
        tree_(tree),
        mwspd_(compute_mwspd(wspd, tree, points)),
        cls_(classify_nodes(tree, mwspd_, points)),
        cl_(compute_cl(tree, mwspd_, cls_)),
        graph_(points.size()) {}

  // zeta == 0 selects the alg1 c-child linking; otherwise
  // every zeta-level c-child is linked in both directions.
  void run(int zeta) {
    for (std::size_t i = 0; i < tree_.num_nodes(); ++i) {
      const NodeInfo& info = cls_.nodes[i];
      if (!info.is_cnode) continue;
      const auto u = static_cast<NodeId>(i);
      const Color c = info.mono_color;
      const std::size_t cl_rep = cl_rep_of(u, c);

      if (info.is_cleaf)
        for (std::size_t p : tree_.points_of(u)) add(p, cl_rep, kStar);
      add(info.rep, cl_rep, kClosest);
      for (std::size_t idx : cls_.pairs_of[i]) {
        const NodeId v = mwspd_.pairs[idx].partner(u);
        add(info.rep, other_color_rep(cls_, v, c, points_), kPair);
      }

      if (zeta == 0) {
        if (info.c_parent != kNoNode) add(info.rep, cl_rep_of(info.c_parent, c), kChild);
        continue;
      }
      NodeId above = info.c_parent;
      for (int level = 1; level <= zeta && above != kNoNode; ++level) {
        add(info.rep, cl_rep_of(above, c), kZetaDown);
        add(cl_rep, cls_[above].rep, kZetaUp);
        above = cls_[above].c_parent;
      }
    }

    for (const WspdPair& pair : mwspd_.pairs) {
      const NodeInfo& a = cls_[pair.u];
      const NodeInfo& b = cls_[pair.v];
      if (!a.is_multichromatic || !b.is_multichromatic) continue;
      if (points_.color_of(a.rep) != points_.color_of(b.rep))
        add(a.rep, b.rep, kMulti);
      else
        add(a.rep, b.rep_prime, kMulti);
    }
  }

  void fill(SpannerResult& result, std::size_t wspd_pairs) {
    result.wspd_pairs = wspd_pairs;
    result.mwspd_pairs = mwspd_.size();
    result.c_nodes = static_cast<std::size_t>(std::count_if(
        cls_.nodes.begin(), cls_.nodes.end(), [](const NodeInfo& n) { return n.is_cnode; }));
    result.tag_counts.assign(kNumEdgeTags, 0);
    for (const Edge& e : graph_.edges())
      for (int b = 0; b < kNumEdgeTags; ++b)
        if (e.tags & (1u << b)) ++result.tag_counts[static_cast<std::size_t>(b)];
    result.graph = std::move(graph_);
  }

 private:
  std::size_t cl_rep_of(NodeId u, Color c) const {
    return other_color_rep(cls_, cl_[u], c, points_);
  }

  void add(std::size_t p, std::size_t q, EdgeTag tag) {
    if (points_.color_of(p) == points_.color_of(q))
      throw std::logic_error("monochromatic edge " + std::to_string(p) + "-" + std::to_string(q));
    graph_.add_edge(p, q, points_.distance(p, q), tag);
  }

  const ColoredPointSet& points_;
  const SplitTree& tree_;
  WspdPairList mwspd_;
  NodeClassification cls_;
  ClosestPairAssignment cl_;
  SpannerGraph graph_;
};

SpannerResult construct(const ColoredPointSet& points, Algorithm alg, const SpannerParams& params) {
  const SplitTree tree(points);
  const WspdPairList wspd = alg == Algorithm::Alg3 ? compute_singleton_wspd(tree, params.s)
                                                   : compute_wspd(tree, params.s);
  Construction c(points, tree, wspd);
  c.run(alg == Algorithm::Alg1 ? 0 : params.zeta);

  SpannerResult result;
  result.algorithm = alg;
  result.params = params;
  c.fill(result, wspd.size());
  switch (alg) {
    case Algorithm::Alg1:
      result.bound = params.t_alg1;
      result.certified = alg1_bound_certified(params.s, params.d);
      break;
    case Algorithm::Alg2:
    case Algorithm::Alg3:
      result.certified = params_certified(params);
      if (params.epsilon)
        result.bound = (alg == Algorithm::Alg2 ? 5.0 : 3.0) + *params.epsilon;
      break;
  }
  return result;
}

}  // namespace

SpannerResult build_spanner_alg1(const ColoredPointSet& points, double sep) {
  return construct(points, Algorithm::Alg1, heuristic_params(sep, points.dim()));
}

SpannerResult build_spanner_alg2(const ColoredPointSet& points, const SpannerParams& params) {
  return construct(points, Algorithm::Alg2, params);
}

SpannerResult build_spanner_alg3(const ColoredPointSet& points, const SpannerParams& params) {
  return construct(points, Algorithm::Alg3, params);
}

SpannerResult build_spanner(const ColoredPointSet& points, Algorithm alg,
                            const SpannerParams& params) {
  if (params.d != points.dim())
    throw InputError("parameters were derived for d=" + std::to_string(params.d) +
                     " but the points have d=" + std::to_string(points.dim()));
  if (alg == Algorithm::Alg1) return build_spanner_alg1(points, params.s);
  return construct(points, alg, params);
}

void write_edge_list(std::ostream& out, const SpannerGraph& graph) {
  for (const Edge& e : graph.edges())
    out << e.i << ' ' << e.j << ' ' << format_double(e.weight) << ' ' << tag_names(e.tags) << '\n';
}

SpannerGraph read_edge_list(std::istream& in, const ColoredPointSet& points) {
  SpannerGraph g(points.size());
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    long long i = -1, j = -1;
    std::string weight, tags = "-";
    if (!(fields >> i >> j)) throw InputError("edge line " + std::to_string(lineno) + ": expected 'i j'");
    fields >> weight >> tags;
    const auto n = static_cast<long long>(points.size());
    if (i < 0 || j < 0 || i >= n || j >= n || i == j)
      throw InputError("edge line " + std::to_string(lineno) + ": vertex out of range");
    const auto a = static_cast<std::size_t>(i);
    const auto b = static_cast<std::size_t>(j);
    g.add_edge(a, b, points.distance(a, b), parse_tags(tags));
  }
  return g;
}

}  // namespace kpspan
