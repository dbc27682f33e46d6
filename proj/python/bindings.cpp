#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <fstream>
#include <sstream>

#include "kpspan/instances.hpp"
#include "kpspan/point_io.hpp"
#include "kpspan/report.hpp"
#include "kpspan/spanner.hpp"
#include "kpspan/verify.hpp"
#include "kpspan/wspd.hpp"

namespace py = pybind11;
using namespace kpspan;

namespace {

Distribution parse_distribution(const std::string& name) {
  if (name == "uniform") return Distribution::UniformCube;
  if (name == "clustered") return Distribution::Clustered;
  throw InputError("unknown distribution '" + name + "' (expected uniform or clustered)");
}

SpannerParams params_from(std::size_t d, std::optional<double> sep, std::optional<double> eps, int delta) {
  if (sep.has_value() == eps.has_value()) throw InputError("pass exactly one of sep or eps");
  return eps ? derive_params(*eps, d) : heuristic_params(*sep, d, delta);
}

std::vector<std::vector<double>> coords_of(const ColoredPointSet& pts) {
  std::vector<std::vector<double>> out;
  for (const Point& p : pts.points()) out.push_back(p.coords);
  return out;
}

py::list edge_tuples(const SpannerGraph& g) {
  py::list out;
  for (const Edge& e : g.edges()) out.append(py::make_tuple(e.i, e.j, e.weight, tag_names(e.tags)));
  return out;
}

SpannerGraph graph_from(const ColoredPointSet& pts, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SpannerGraph g(pts.size());
  for (auto [i, j] : edges) {
    if (i >= pts.size() || j >= pts.size() || i == j) throw InputError("bad edge endpoint");
    g.add_edge(i, j, pts.distance(i, j), kExternal);
  }
  return g;
}

}  // namespace

PYBIND11_MODULE(_kpspan, m) {
  m.doc() = "Sparse spanners of complete k-partite geometric graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<ColoredPointSet>(m, "PointSet")
      .def(py::init<std::vector<std::vector<double>>, std::vector<Color>>(), py::arg("coords"), py::arg("colors"))
      .def("__len__", &ColoredPointSet::size)
      .def_property_readonly("d", &ColoredPointSet::dim)
      .def_property_readonly("k", &ColoredPointSet::num_colors)
      .def_property_readonly("coords", &coords_of)
      .def_property_readonly("colors", &ColoredPointSet::colors)
      .def("distance", &ColoredPointSet::distance)
      .def("__repr__", [](const ColoredPointSet& p) {
        return "<PointSet n=" + std::to_string(p.size()) + " d=" + std::to_string(p.dim()) +
               " k=" + std::to_string(p.num_colors()) + ">";
      });

  m.def("read_points", &read_points_file, py::arg("path"));
  m.def("write_points", [](const ColoredPointSet& pts, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    write_points(out, pts, format_for_path(path));
  }, py::arg("points"), py::arg("path"));

  m.def("gen_random", [](std::size_t n, int k, std::size_t d, std::uint64_t seed, const std::string& dist) {
    return gen_random({n, k, d, seed, parse_distribution(dist), 0.5});
  }, py::arg("n"), py::arg("k"), py::arg("d") = 2, py::arg("seed") = 0, py::arg("distribution") = "uniform");
  m.def("gen_lower_bound", &gen_lower_bound, py::arg("n"), py::arg("k"), py::arg("epsilon"), py::arg("d") = 2);

  py::class_<SpannerParams>(m, "Params")
      .def_readonly("s", &SpannerParams::s)
      .def_readonly("epsilon", &SpannerParams::epsilon)
      .def_readonly("d", &SpannerParams::d)
      .def_readonly("mu", &SpannerParams::mu)
      .def_readonly("delta", &SpannerParams::delta)
      .def_readonly("zeta", &SpannerParams::zeta)
      .def_readonly("t_prime", &SpannerParams::t_prime)
      .def_readonly("t_alg1", &SpannerParams::t_alg1)
      .def_property_readonly("certified", &params_certified);
  m.def("derive_params", &derive_params, py::arg("epsilon"), py::arg("d") = 2);
  m.def("heuristic_params", &heuristic_params, py::arg("s"), py::arg("d") = 2, py::arg("delta") = 1);

  m.def("wspd_pairs", [](const ColoredPointSet& pts, double s, bool singleton) {
    const SplitTree tree(pts);
    const WspdPairList w = singleton ? compute_singleton_wspd(tree, s) : compute_wspd(tree, s);
    py::list out;
    for (const WspdPair& p : w.pairs)
      out.append(py::make_tuple(p.u, p.v, tree.node(p.u).size(), tree.node(p.v).size(), p.dist));
    return out;
  }, py::arg("points"), py::arg("s"), py::arg("singleton") = false);

  m.def("check_wspd", [](const ColoredPointSet& pts, double s, bool singleton, std::size_t cap) {
    const SplitTree tree(pts);
    const WspdPairList w = singleton ? compute_singleton_wspd(tree, s) : compute_wspd(tree, s);
    Json j;
    j["lemmas"] = to_json(check_lemma_bounds(tree, w, pts, cap));
    j["unseparated_pairs"] = count_unseparated_pairs(tree, w);
    if (pts.size() <= cap) j["coverage"] = to_json(check_wspd_coverage(tree, w, cap));
    return j.dump();
  }, py::arg("points"), py::arg("s"), py::arg("singleton") = false, py::arg("cap") = kDefaultBruteForceCap);

  m.def("build_spanner", [](const ColoredPointSet& pts, const std::string& alg, std::optional<double> sep,
                            std::optional<double> eps, int delta) {
    const SpannerResult r = build_spanner(pts, parse_algorithm(alg), params_from(pts.dim(), sep, eps, delta));
    return py::make_tuple(edge_tuples(r.graph), to_json(r, pts).dump());
  }, py::arg("points"), py::arg("alg") = "alg2", py::arg("sep") = py::none(), py::arg("eps") = py::none(),
     py::arg("delta") = 1);

  m.def("exact_stretch", [](const ColoredPointSet& pts, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                            unsigned threads) {
    const SpannerGraph g = graph_from(pts, edges);
    py::gil_scoped_release release;
    const std::string out = to_json(exact_stretch(g, pts, threads)).dump();
    return out;
  }, py::arg("points"), py::arg("edges"), py::arg("threads") = 1);
}
