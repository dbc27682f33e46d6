#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kpspan/split_tree.hpp"
#include "kpspan/wspd.hpp"

namespace kpspan {

/// Pairs whose union holds at least two colours.
WspdPairList compute_mwspd(const WspdPairList& wspd, const SplitTree& tree,
                           const ColoredPointSet& points);

inline constexpr std::size_t kNoPoint = static_cast<std::size_t>(-1);

struct NodeInfo {
  Color mono_color = 0;  // colour shared by all points below, 0 if mixed
  bool in_pair = false;  // appears in some MWSPD pair
  bool is_cnode = false;
  bool is_multichromatic = false;
  bool is_croot = false;
  bool is_cleaf = false;
  std::size_t rep = kNoPoint;
  std::size_t rep_prime = kNoPoint;  // set for nodes with >= 2 colours
  NodeId c_parent = kNoNode;         // nearest proper c-node ancestor
};

struct NodeClassification {
  std::vector<NodeInfo> nodes;
  /// Indices into the MWSPD pair list, per node.
  std::vector<std::vector<std::size_t>> pairs_of;

  const NodeInfo& operator[](NodeId id) const { return nodes[static_cast<std::size_t>(id)]; }
};

NodeClassification classify_nodes(const SplitTree& tree, const WspdPairList& mwspd,
                                  const ColoredPointSet& points);

/// The representative of `node` whose colour differs from `c`.
/// Throws std::logic_error if there is none.
std::size_t other_color_rep(const NodeClassification& cls, NodeId node, Color c,
                            const ColoredPointSet& points);

/// cl(S_u) for every c-node u: the partner of the closest MWSPD pair
/// anchored at a c-node on the path from u to the root.
struct ClosestPairAssignment {
  std::vector<NodeId> target;  // kNoNode for nodes that are not c-nodes
  std::vector<NodeId> anchor;
  std::vector<double> dist;

  NodeId operator[](NodeId u) const { return target[static_cast<std::size_t>(u)]; }
};

ClosestPairAssignment compute_cl(const SplitTree& tree, const WspdPairList& mwspd,
                                 const NodeClassification& cls);

struct SpannerParams {
  double s = 0.0;
  std::optional<double> epsilon;  // set when derived from a target slack
  std::size_t d = 0;
  int mu = 0;
  int delta = 0;
  int zeta = 0;
  double t_prime = 0.0;
  double t_alg1 = 0.0;
};

int compute_mu(double s, std::size_t d);
double compute_t_prime(double s, std::size_t d);
/// Stretch bound of the first construction, 2 t' + 1 + 4/s.
double compute_t_alg1(double s, std::size_t d);
/// Whether the induction cases for mixed pairs close with t = t_alg1:
/// t' + (1 + 4/s) + 4t/s <= t and (1 + 4/s) + 8t/s <= t.
bool alg1_bound_certified(double s, std::size_t d);

/// Smallest integer s and delta meeting the (5 + eps) constraints.
SpannerParams derive_params(double epsilon, std::size_t d);
/// Caller-chosen separation; guarantees are not certified.
SpannerParams heuristic_params(double s, std::size_t d, int delta = 1);
/// True if `p` carries an epsilon and meets its constraints.
bool params_certified(const SpannerParams& p);

enum class Algorithm { Alg1, Alg2, Alg3 };
std::string to_string(Algorithm alg);
Algorithm parse_algorithm(const std::string& name);

/// Which algorithm step produced an edge.
enum EdgeTag : std::uint8_t {
  kStar = 1 << 0,       // c-leaf star
  kClosest = 1 << 1,    // rep(S_u) to cl(S_u)
  kPair = 1 << 2,       // c-node pair edge
  kChild = 1 << 3,      // c-child to cl(c-parent)
  kZetaDown = 1 << 4,   // zeta-level c-child to cl(ancestor)
  kZetaUp = 1 << 5,     // cl(zeta-level c-child) to ancestor
  kMulti = 1 << 6,      // both sides multichromatic
  kExternal = 1 << 7,   // read from a file or added by hand
};
inline constexpr int kNumEdgeTags = 8;
std::string tag_names(std::uint8_t tags);
std::uint8_t parse_tags(const std::string& text);

struct Edge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double weight = 0.0;
  std::uint8_t tags = 0;
};

/// Undirected geometric graph with set semantics on edges.
class SpannerGraph {
 public:
  explicit SpannerGraph(std::size_t n = 0) : n_(n) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Adds {i, j} or merges `tags` into the existing edge.
  void add_edge(std::size_t i, std::size_t j, double weight, std::uint8_t tags);
  bool remove_edge(std::size_t i, std::size_t j);
  bool has_edge(std::size_t i, std::size_t j) const;
  /// Edges sorted by (i, j).
  std::vector<Edge> edges() const;

  friend bool operator==(const SpannerGraph&, const SpannerGraph&) = default;

 private:
  struct Data {
    double weight;
    std::uint8_t tags;
    friend bool operator==(const Data&, const Data&) = default;
  };
  std::size_t n_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Data> edges_;
};

/// The complete k-partite graph on `points`.
SpannerGraph complete_k_partite(const ColoredPointSet& points);

struct SpannerResult {
  Algorithm algorithm = Algorithm::Alg1;
  SpannerParams params;
  SpannerGraph graph;
  bool certified = false;
  std::optional<double> bound;  // stretch bound claimed for this construction
  std::size_t wspd_pairs = 0;
  std::size_t mwspd_pairs = 0;
  std::size_t c_nodes = 0;
  /// Distinct edges carrying each tag, indexed by bit position.
  std::vector<std::size_t> tag_counts;
};

SpannerResult build_spanner_alg1(const ColoredPointSet& points, double sep);
SpannerResult build_spanner_alg2(const ColoredPointSet& points, const SpannerParams& params);
SpannerResult build_spanner_alg3(const ColoredPointSet& points, const SpannerParams& params);

/// Dispatch on `alg`. For Alg1 only `params.s` is used.
SpannerResult build_spanner(const ColoredPointSet& points, Algorithm alg,
                            const SpannerParams& params);

/// `i j weight provenance` per line.
void write_edge_list(std::ostream& out, const SpannerGraph& graph);
SpannerGraph read_edge_list(std::istream& in, const ColoredPointSet& points);

}  // namespace kpspan
