#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kpspan/instances.hpp"
#include "kpspan/point_io.hpp"
#include "kpspan/report.hpp"
#include "kpspan/spanner.hpp"
#include "kpspan/split_tree.hpp"
#include "kpspan/verify.hpp"
#include "kpspan/wspd.hpp"

namespace kpspan::cli {

namespace {

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t brute_force_cap() {
  if (const char* env = std::getenv("KPSPAN_BRUTE_FORCE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      throw InputError(std::string("KPSPAN_BRUTE_FORCE_CAP is not a number: ") + env);
    }
  }
  return kDefaultBruteForceCap;
}

// Writes to `path` when set, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InputError("cannot write " + path);
    stream_ = file_.get();
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

struct GenerateOptions {
  bool random = false, clustered = false, lower_bound = false;
  std::size_t n = 0;
  int k = 2;
  std::size_t d = 2;
  std::uint64_t seed = 0;
  double eps = 0.5;
  std::string format, output;
};

struct BuildOptions {
  std::string input, algorithm = "alg2", output, report;
  std::optional<double> sep, eps;
  int delta = 1;
  bool timing = false;
};

struct VerifyOptions {
  std::string input, edges, wspd;
  std::optional<double> bound, sep;
  bool check_lemmas = false;
  unsigned threads = 1;
};

struct BenchOptions {
  std::string algorithm = "alg1", distribution = "uniform", output;
  std::optional<double> sep, eps;
  int delta = 1;
  std::vector<std::size_t> sizes;
  int k = 2;
  std::size_t d = 2;
  std::uint64_t seed = 1;
  bool stretch = false;
  unsigned threads = 1;
};

SpannerParams params_for(Algorithm alg, std::optional<double> sep, std::optional<double> eps,
                         int delta, std::size_t d) {
  if (sep.has_value() == eps.has_value()) throw InputError("pass exactly one of --sep or --eps");
  if (eps) return derive_params(*eps, d);
  (void)alg;
  return heuristic_params(*sep, d, delta);
}

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  if (int(o.random) + int(o.clustered) + int(o.lower_bound) > 1)
    throw InputError("choose one of --random, --clustered, --lower-bound");
  GeneratorSpec spec{o.n, o.k, o.d, o.seed, Distribution::UniformCube, o.eps};
  if (o.clustered) spec.distribution = Distribution::Clustered;
  if (o.lower_bound) spec.distribution = Distribution::LowerBound;
  const ColoredPointSet points = generate(spec);

  PointFormat format = o.output.empty() ? PointFormat::Csv : format_for_path(o.output);
  if (o.format == "json") format = PointFormat::Json;
  if (o.format == "csv") format = PointFormat::Csv;
  Sink sink(o.output, out);
  write_points(*sink, points, format);
  return kExitOk;
}

int cmd_build(const BuildOptions& o, std::ostream& out, std::ostream& err) {
  const ColoredPointSet points = read_points_file(o.input);
  const Algorithm alg = parse_algorithm(o.algorithm);
  const SpannerParams params = params_for(alg, o.sep, o.eps, o.delta, points.dim());
  if (params.s <= 4.0) err << "warning: separation constant " << params.s << " <= 4\n";

  const auto start = std::chrono::steady_clock::now();
  const SpannerResult result = build_spanner(points, alg, params);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  {
    Sink edges(o.output, out);
    write_edge_list(*edges, result.graph);
  }
  Json report = to_json(result, points);
  if (o.timing) report["build_ms"] = ms;
  if (!o.report.empty()) {
    Sink sink(o.report, out);
    *sink << report.dump(2) << '\n';
  } else {
    (o.output.empty() ? err : out) << report.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const ColoredPointSet points = read_points_file(o.input);
  Json result;
  bool ok = true;

  if (!o.edges.empty()) {
    std::ifstream in(o.edges);
    if (!in) throw InputError("cannot open " + o.edges);
    const SpannerGraph graph = read_edge_list(in, points);
    const StretchReport report = exact_stretch(graph, points, o.threads);
    Json stretch = to_json(report);
    if (!report.connected()) ok = false;
    if (o.bound) {
      const bool within = report.max_stretch <= *o.bound * (1.0 + kRelativeSlack);
      stretch["bound"] = *o.bound;
      stretch["within_bound"] = within;
      ok = ok && within;
    }
    result["stretch"] = stretch;
  }

  if (o.check_lemmas || !o.wspd.empty()) {
    const SplitTree tree(points);
    WspdPairList wspd;
    if (!o.wspd.empty()) {
      std::ifstream in(o.wspd);
      if (!in) throw InputError("cannot open " + o.wspd);
      wspd = read_wspd(in, tree, o.sep.value_or(0.0));
      if (o.sep) wspd.s = *o.sep;
    } else {
      if (!o.sep) throw InputError("--check-lemmas without --wspd needs --sep");
      wspd = compute_wspd(tree, *o.sep);
    }
    const std::size_t cap = brute_force_cap();
    const LemmaReport lemmas = check_lemma_bounds(tree, wspd, points, cap);
    result["lemmas"] = to_json(lemmas);
    ok = ok && lemmas.pass();
    const std::size_t unseparated = count_unseparated_pairs(tree, wspd);
    result["unseparated_pairs"] = unseparated;
    ok = ok && unseparated == 0;
    if (points.size() <= cap) {
      const CoverageResult coverage = check_wspd_coverage(tree, wspd, cap);
      result["coverage"] = to_json(coverage);
      ok = ok && coverage.pass;
    }
  }
  if (result.empty()) throw InputError("nothing to verify: pass --edges and/or --check-lemmas/--wspd");
  result["pass"] = ok;
  out << result.dump(2) << '\n';
  return ok ? kExitOk : kExitVerification;
}

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  const Algorithm alg = parse_algorithm(o.algorithm);
  Distribution dist = Distribution::UniformCube;
  if (o.distribution == "clustered")
    dist = Distribution::Clustered;
  else if (o.distribution != "uniform")
    throw InputError("unknown distribution '" + o.distribution + "'");
  const SpannerParams params = params_for(alg, o.sep, o.eps, o.delta, o.d);
  std::vector<std::size_t> sizes = o.sizes;
  if (sizes.empty()) sizes = {128, 256, 512, 1024, 2048};

  Sink sink(o.output, out);
  *sink << "n,edges,ratio,build_ms,stretch\n";
  for (std::size_t n : sizes) {
    const ColoredPointSet points = gen_random({n, o.k, o.d, o.seed, dist, 0.5});
    const auto start = std::chrono::steady_clock::now();
    const SpannerResult result = build_spanner(points, alg, params);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const EdgeAudit audit = audit_edge_count(result.graph, n, alg);
    *sink << n << ',' << audit.edges << ',' << format_double(audit.ratio) << ',' << format_double(ms) << ',';
    if (o.stretch) *sink << format_double(exact_stretch(result.graph, points, o.threads).max_stretch);
    *sink << '\n';
  }
  return kExitOk;
}

int cmd_params(std::optional<double> eps, std::optional<double> sep, int delta, std::size_t d,
               std::ostream& out) {
  const SpannerParams params = params_for(Algorithm::Alg2, sep, eps, delta, d);
  Json j = to_json(params);
  j["certified"] = params_certified(params);
  j["alg1_certified"] = alg1_bound_certified(params.s, d);
  if (params.epsilon) {
    j["bound_alg2"] = 5.0 + *params.epsilon;
    j["bound_alg3"] = 3.0 + *params.epsilon;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_dump_tree(const std::string& input, bool json, std::ostream& out) {
  const SplitTree tree(read_points_file(input));
  if (!json) {
    tree.dump(out);
    return kExitOk;
  }
  Json nodes = Json::array();
  for (std::size_t i = 0; i < tree.num_nodes(); ++i) {
    const SplitNode& n = tree.node(static_cast<NodeId>(i));
    Json j;
    j["id"] = i;
    j["parent"] = n.parent;
    j["left"] = n.left;
    j["right"] = n.right;
    j["depth"] = n.depth;
    j["begin"] = n.begin;
    j["end"] = n.end;
    j["lo"] = n.bbox.lo;
    j["hi"] = n.bbox.hi;
    if (n.is_leaf()) j["point"] = tree.first_point(static_cast<NodeId>(i));
    nodes.push_back(j);
  }
  out << nodes.dump(1) << '\n';
  return kExitOk;
}

int cmd_dump_wspd(const std::string& input, double sep, bool singleton, std::ostream& out) {
  const SplitTree tree(read_points_file(input));
  const WspdPairList wspd = singleton ? compute_singleton_wspd(tree, sep) : compute_wspd(tree, sep);
  write_wspd(out, tree, wspd);
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse spanners of complete k-partite geometric graphs"};
  app.name("kpspan");
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a random or lower-bound point set");
  generate->add_flag("--random", gen.random, "Uniform points in [0,1]^d (default)");
  generate->add_flag("--clustered", gen.clustered, "k Gaussian blobs");
  generate->add_flag("--lower-bound", gen.lower_bound, "Three-disk instance forcing stretch >= 3-eps");
  generate->add_option("--n", gen.n, "Number of points")->required();
  generate->add_option("--k", gen.k, "Number of colours")->capture_default_str();
  generate->add_option("--d", gen.d, "Dimension")->capture_default_str();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_option("--eps", gen.eps, "Epsilon of the lower-bound instance")->capture_default_str();
  generate->add_option("--format", gen.format, "csv or json (default: from the output name)")
      ->check(CLI::IsMember({"csv", "json"}));
  generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

  BuildOptions build;
  auto* build_cmd = app.add_subcommand("build", "Build a spanner and write its edge list");
  build_cmd->add_option("input", build.input, "Point set (.csv or .json)")->required();
  build_cmd->add_option("--alg", build.algorithm, "alg1, alg2 or alg3")->capture_default_str();
  auto* sep_opt = build_cmd->add_option("--sep", build.sep, "Separation constant (uncertified)");
  auto* eps_opt = build_cmd->add_option("--eps", build.eps, "Target slack; derives certified parameters");
  sep_opt->excludes(eps_opt);
  build_cmd->add_option("--delta", build.delta, "Chain shortcut constant for --sep runs")->capture_default_str();
  build_cmd->add_option("-o,--output", build.output, "Edge list file (default stdout)");
  build_cmd->add_option("--report", build.report, "JSON report file");
  build_cmd->add_flag("--timing", build.timing, "Add build_ms to the report");

  VerifyOptions ver;
  auto* verify = app.add_subcommand("verify", "Check a spanner or a WSPD against the point set");
  verify->add_option("input", ver.input, "Point set (.csv or .json)")->required();
  verify->add_option("--edges", ver.edges, "Edge list to measure");
  verify->add_option("--bound", ver.bound, "Fail if the stretch exceeds this");
  verify->add_flag("--check-lemmas", ver.check_lemmas, "Run the WSPD lemma battery");
  verify->add_option("--wspd", ver.wspd, "WSPD dump to check (from dump-wspd)");
  verify->add_option("--sep", ver.sep, "Separation constant of the WSPD");
  verify->add_option("--threads", ver.threads, "Worker threads for the stretch oracle")->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Edge count, build time and stretch over a size sweep");
  bench_cmd->add_option("--alg", bench.algorithm, "alg1, alg2 or alg3")->capture_default_str();
  auto* bsep = bench_cmd->add_option("--sep", bench.sep, "Separation constant");
  auto* beps = bench_cmd->add_option("--eps", bench.eps, "Target slack");
  bsep->excludes(beps);
  bench_cmd->add_option("--delta", bench.delta, "Chain shortcut constant for --sep runs")->capture_default_str();
  bench_cmd->add_option("--sizes", bench.sizes, "Instance sizes (default 128..2048 doubling)")->delimiter(',');
  bench_cmd->add_option("--k", bench.k)->capture_default_str();
  bench_cmd->add_option("--d", bench.d)->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed)->capture_default_str();
  bench_cmd->add_option("--distribution", bench.distribution, "uniform or clustered")->capture_default_str();
  bench_cmd->add_flag("--stretch", bench.stretch, "Also measure the exact stretch");
  bench_cmd->add_option("--threads", bench.threads)->capture_default_str();
  bench_cmd->add_option("-o,--output", bench.output, "CSV file (default stdout)");

  std::optional<double> p_eps, p_sep;
  int p_delta = 1;
  std::size_t p_d = 2;
  auto* params = app.add_subcommand("params", "Derive construction parameters");
  auto* peps = params->add_option("--eps", p_eps, "Target slack");
  auto* psep = params->add_option("--sep", p_sep, "Separation constant");
  peps->excludes(psep);
  params->add_option("--delta", p_delta)->capture_default_str();
  params->add_option("--d", p_d)->capture_default_str();

  std::string tree_input;
  bool tree_json = false;
  auto* dump_tree = app.add_subcommand("dump-tree", "Print the split tree");
  dump_tree->add_option("input", tree_input)->required();
  dump_tree->add_flag("--json", tree_json);

  std::string wspd_input;
  double wspd_sep = 2.0;
  bool wspd_singleton = false;
  auto* dump_wspd = app.add_subcommand("dump-wspd", "Print WSPD pairs: u v |S_u| |S_v| dist");
  dump_wspd->add_option("input", wspd_input)->required();
  dump_wspd->add_option("--sep", wspd_sep)->capture_default_str();
  dump_wspd->add_flag("--singleton", wspd_singleton);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*generate) return cmd_generate(gen, out);
    if (*build_cmd) return cmd_build(build, out, err);
    if (*verify) return cmd_verify(ver, out);
    if (*bench_cmd) return cmd_bench(bench, out);
    if (*params) return cmd_params(p_eps, p_sep, p_delta, p_d, out);
    if (*dump_tree) return cmd_dump_tree(tree_input, tree_json, out);
    if (*dump_wspd) return cmd_dump_wspd(wspd_input, wspd_sep, wspd_singleton, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::logic_error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerification;
  }
  return kExitValidation;
}

}  // namespace kpspan::cli
