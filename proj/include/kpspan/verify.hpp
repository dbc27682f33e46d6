#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kpspan/spanner.hpp"

namespace kpspan {

/// Relative slack applied to every floating-point bound check.
inline constexpr double kRelativeSlack = 1e-9;

/// Single-source shortest path lengths over `graph` (infinity if unreachable).
std::vector<double> shortest_path_lengths(const SpannerGraph& graph, std::size_t source);

struct StretchReport {
  double max_stretch = 1.0;  // infinity if a cross-colour pair is disconnected
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  std::size_t cross_pairs = 0;
  double mean = 0.0;
  double p50 = 0.0;
  double p90 = 0.0;
  double p99 = 0.0;
  std::size_t disconnected_count = 0;
  /// First few disconnected pairs in (p, q) order.
  std::vector<std::pair<std::size_t, std::size_t>> disconnected;

  bool connected() const { return disconnected_count == 0; }
};

/// Exact stretch of `graph` against the complete k-partite graph on `points`.
/// Runs one shortest-path search per vertex, optionally on `threads` workers;
/// the report does not depend on the thread count.
StretchReport exact_stretch(const SpannerGraph& graph, const ColoredPointSet& points,
                            unsigned threads = 1);

struct CoverageResult {
  bool pass = true;
  std::size_t point_pairs = 0;
  /// First point pair (p < q) covered a number of times other than once.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  std::size_t count = 0;  // how often the counterexample is covered
  std::string message;
};

inline constexpr std::size_t kDefaultBruteForceCap = 300;

/// Brute-force check that each point pair is covered by exactly one WSPD pair.
/// Throws InputError when n exceeds `cap`.
CoverageResult check_wspd_coverage(const SplitTree& tree, const WspdPairList& wspd,
                                   std::size_t cap = kDefaultBruteForceCap);

/// Number of pairs failing is_well_separated at the list's s.
std::size_t count_unseparated_pairs(const SplitTree& tree, const WspdPairList& wspd);

struct LemmaCheck {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst_ratio = 0.0;  // max of lhs / rhs; <= 1 means the bound held
  bool skipped = false;

  bool pass() const { return violations == 0; }
};

struct LemmaReport {
  bool exhaustive = true;
  std::vector<LemmaCheck> checks;  // diameter, spread, halving, parent bound

  bool pass() const;
};

/// Checks the WSPD separation inequalities (intra-set diameter, pair distance
/// spread), the halving of l_max every d tree levels, and the parent size
/// lower bound for pair nodes. Exhaustive for n <= `cap`, otherwise sampled
/// with a fixed seed. The parent bound is only asserted for the standard
/// variant.
LemmaReport check_lemma_bounds(const SplitTree& tree, const WspdPairList& wspd,
                               const ColoredPointSet& points,
                               std::size_t cap = kDefaultBruteForceCap);

/// Same inequalities for one explicit pair of point sets.
LemmaReport check_pair_lemmas(const ColoredPointSet& points, const std::vector<std::size_t>& x,
                              const std::vector<std::size_t>& y, double s);

struct EdgeAudit {
  std::size_t n = 0;
  std::size_t edges = 0;
  double ratio = 0.0;  // edges / n, or edges / (n log2 n) for alg3
};

EdgeAudit audit_edge_count(const SpannerGraph& graph, std::size_t n, Algorithm alg);

}  // namespace kpspan
