#pragma once

#include <iosfwd>
#include <vector>

#include "kpspan/split_tree.hpp"

namespace kpspan {

/// Decides whether two boxes are well-separated with respect to `s`.
///
/// Both boxes get enclosing balls of the common radius
/// rho = max(half_diagonal(a), half_diagonal(b)). A ball of radius rho
/// still contains its box when its centre is moved up to rho - r away from
/// the box centre (r = the box's own half-diagonal), so the witness balls are
/// pushed apart along the centre line and the test becomes
///
///   |c_a - c_b| - r_a - r_b >= s * rho.
///
/// For boxes with equal half-diagonals this is the plain centred-ball test
/// |c_a - c_b| - 2 rho >= s * rho.
bool is_well_separated(const BoundingBox& a, const BoundingBox& b, double s);

struct WspdPair {
  NodeId u = kNoNode;  // u < v
  NodeId v = kNoNode;
  double dist = 0.0;  // centre distance of the two boxes

  NodeId partner(NodeId x) const { return x == u ? v : u; }
  friend bool operator==(const WspdPair&, const WspdPair&) = default;
};

enum class WspdVariant { Standard, Singleton };

struct WspdPairList {
  std::vector<WspdPair> pairs;  // sorted by (u, v)
  double s = 0.0;
  WspdVariant variant = WspdVariant::Standard;

  std::size_t size() const { return pairs.size(); }
};

WspdPairList compute_wspd(const SplitTree& tree, double s);

/// Replaces each standard pair {X, Y} with |X| <= |Y| by the pairs {{x}, Y}
/// for x in X. Ties in size pick the node with the smaller id as X.
WspdPairList compute_singleton_wspd(const SplitTree& tree, double s);
WspdPairList make_singleton(const SplitTree& tree, const WspdPairList& standard);

/// One pair per line: `u v |S_u| |S_v| dist`, preceded by a '#' header line.
void write_wspd(std::ostream& out, const SplitTree& tree, const WspdPairList& wspd);
/// Parses write_wspd output. Set sizes are checked against `tree`; the
/// distance column is ignored and recomputed.
WspdPairList read_wspd(std::istream& in, const SplitTree& tree, double default_s);

}  // namespace kpspan
