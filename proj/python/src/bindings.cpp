#include <cubedist/identities.hpp>
#include <cubedist/io.hpp>
#include <cubedist/negative_type.hpp>
#include <cubedist/search.hpp>
#include <cubedist/tree.hpp>
#include <cubedist/verify.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <thread>

namespace py = pybind11;
using namespace cubedist;

namespace {

PointSet points_from(const std::vector<std::string>& points) { return PointSet::parse(points); }

ScanOptions scan_options(double cap, double tol, double grid) {
  ScanOptions o;
  o.cap = cap;
  o.tol = tol;
  o.grid = grid;
  return o;
}

SearchOptions search_options(unsigned workers, std::uint64_t budget) {
  SearchOptions o;
  o.workers = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
  o.budget = budget;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact distance-matrix computations on Hamming cube subsets.";

  py::register_exception<DependenceError>(m, "DependenceError", PyExc_ValueError);
  py::register_exception<DegenerateMetricError>(m, "DegenerateMetricError", PyExc_ValueError);
  py::register_exception<InvalidTreeError>(m, "InvalidTreeError", PyExc_ValueError);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);
  py::register_exception<BudgetExceededError>(m, "BudgetExceededError", PyExc_RuntimeError);
  py::register_exception<CapExceededError>(m, "CapExceededError", PyExc_RuntimeError);

  m.def("report", [](const std::vector<std::string>& points) { return to_json(full_report(points_from(points))).dump(); },
        py::arg("points"));
  m.def("dinv_ones", [](const std::vector<std::string>& points) { return to_string(dinv_ones(points_from(points))); },
        py::arg("points"));
  m.def("gram_quad", [](const std::vector<std::string>& points) { return to_string(gram_quad(points_from(points))); },
        py::arg("points"));
  m.def("affinely_independent",
        [](const std::vector<std::string>& points) { return affinely_independent(points_from(points)); },
        py::arg("points"));

  m.def(
      "tree_report",
      [](std::size_t vertices, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        std::vector<Edge> e(edges.begin(), edges.end());
        return tree_report_json(UnweightedTree(vertices, e)).dump();
      },
      py::arg("vertices"), py::arg("edges"));

  m.def(
      "negtype",
      [](const std::vector<std::string>& points, double cap, double tol, double grid) {
        return to_json(sanchez_wp(points_from(points), scan_options(cap, tol, grid))).dump();
      },
      py::arg("points"), py::arg("cap") = 16.0, py::arg("tol") = 1e-9, py::arg("grid") = 0.125);
  m.def(
      "is_p_negative_type",
      [](const std::vector<std::string>& points, double p, double tol) {
        return is_p_negative_type(points_from(points), p, tol);
      },
      py::arg("points"), py::arg("p"), py::arg("tol") = 1e-9);

  m.def(
      "search",
      [](unsigned n, std::size_t size, unsigned workers, std::uint64_t budget) {
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = min_dinv_ones(n, size, search_options(workers, budget));
        }
        return to_json(r).dump();
      },
      py::arg("n"), py::arg("m"), py::arg("workers") = 1, py::arg("budget") = SearchOptions{}.budget);
  m.def(
      "probe",
      [](unsigned n, std::size_t size, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = random_probe(n, size, trials, seed, search_options(workers, SearchOptions{}.budget));
        }
        return to_json(r).dump();
      },
      py::arg("n"), py::arg("m"), py::arg("trials"), py::arg("seed"), py::arg("workers") = 1);

  m.def(
      "verify",
      [](unsigned n_cap, unsigned random_n_max, std::uint64_t samples, std::uint64_t seed, std::size_t tree_cap) {
        VerifyOptions o;
        o.n_cap = n_cap;
        o.random_n_max = random_n_max;
        o.samples = samples;
        o.seed = seed;
        o.tree_vertex_cap = tree_cap;
        VerifySummary s;
        {
          py::gil_scoped_release release;
          s = verify_identities(o);
        }
        return to_json(s).dump();
      },
      py::arg("n_cap") = 3, py::arg("random_n_max") = 4, py::arg("samples") = 100, py::arg("seed") = 20240101,
      py::arg("tree_cap") = 6);
}
