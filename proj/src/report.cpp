#include "kpspan/report.hpp"

#include <cmath>

namespace kpspan {

namespace {

Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json pair_json(const std::pair<std::size_t, std::size_t>& p) { return Json::array({p.first, p.second}); }

constexpr const char* kFamilyNames[kNumEdgeTags] = {"star",  "closest", "pair",  "child",
                                                    "zdown", "zup",     "multi", "external"};

}  // namespace

Json to_json(const SpannerParams& params) {
  Json j;
  j["s"] = params.s;
  j["epsilon"] = params.epsilon ? Json(*params.epsilon) : Json(nullptr);
  j["d"] = params.d;
  j["mu"] = params.mu;
  j["delta"] = params.delta;
  j["zeta"] = params.zeta;
  j["t_prime"] = params.t_prime;
  j["t_alg1"] = params.t_alg1;
  return j;
}

Json to_json(const SpannerResult& result, const ColoredPointSet& points) {
  Json j;
  j["algorithm"] = to_string(result.algorithm);
  j["n"] = points.size();
  j["k"] = points.num_colors();
  j["d"] = points.dim();
  j["params"] = to_json(result.params);
  if (result.algorithm == Algorithm::Alg1) {
    j["mode"] = "separation";
    j["certification"] = result.certified ? "case inequalities hold for t_alg1"
                                          : "case inequalities fail for t_alg1; bound not certified";
  } else {
    j["mode"] = result.params.epsilon ? "certified" : "heuristic";
    j["certification"] = result.certified ? "parameters meet the epsilon constraints"
                                          : "heuristic parameters; bound not certified";
  }
  j["certified"] = result.certified;
  j["bound"] = result.bound ? Json(*result.bound) : Json(nullptr);
  j["wspd_pairs"] = result.wspd_pairs;
  j["mwspd_pairs"] = result.mwspd_pairs;
  j["c_nodes"] = result.c_nodes;
  j["edges"] = result.graph.num_edges();
  Json families = Json::object();
  for (int b = 0; b < kNumEdgeTags; ++b)
    if (result.tag_counts.size() > static_cast<std::size_t>(b) && result.tag_counts[static_cast<std::size_t>(b)] > 0)
      families[kFamilyNames[b]] = result.tag_counts[static_cast<std::size_t>(b)];
  j["edges_by_family"] = families;
  const EdgeAudit audit = audit_edge_count(result.graph, points.size(), result.algorithm);
  j[result.algorithm == Algorithm::Alg3 ? "edges_per_n_log2n" : "edges_per_n"] = audit.ratio;
  return j;
}

Json to_json(const StretchReport& report) {
  Json j;
  j["connected"] = report.connected();
  j["cross_pairs"] = report.cross_pairs;
  j["max_stretch"] = number_or_null(report.max_stretch);
  j["witness"] = report.witness ? pair_json(*report.witness) : Json(nullptr);
  j["mean"] = report.mean;
  j["p50"] = report.p50;
  j["p90"] = report.p90;
  j["p99"] = report.p99;
  j["disconnected_count"] = report.disconnected_count;
  Json listed = Json::array();
  for (const auto& p : report.disconnected) listed.push_back(pair_json(p));
  j["disconnected"] = listed;
  return j;
}

Json to_json(const LemmaReport& report) {
  Json j;
  j["pass"] = report.pass();
  j["exhaustive"] = report.exhaustive;
  Json checks = Json::array();
  for (const LemmaCheck& c : report.checks) {
    Json item;
    item["name"] = c.name;
    item["skipped"] = c.skipped;
    item["checked"] = c.checked;
    item["violations"] = c.violations;
    item["worst_ratio"] = number_or_null(c.worst_ratio);
    checks.push_back(item);
  }
  j["checks"] = checks;
  return j;
}

Json to_json(const CoverageResult& result) {
  Json j;
  j["pass"] = result.pass;
  j["point_pairs"] = result.point_pairs;
  j["counterexample"] = result.counterexample ? pair_json(*result.counterexample) : Json(nullptr);
  j["count"] = result.count;
  j["message"] = result.message;
  return j;
}

}  // namespace kpspan
