// Thin pybind11 layer: structured results cross as JSON text and are decoded
// on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>

#include "elemdiff/error.hpp"
#include "elemdiff/groups.hpp"
#include "elemdiff/io.hpp"
#include "elemdiff/labelling.hpp"
#include "elemdiff/relations.hpp"

namespace py = pybind11;
using namespace elemdiff;

namespace {

DimensionOptions options(std::uint64_t seed, unsigned threads) {
  DimensionOptions o;
  o.seed = seed;
  o.threads = threads;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Elementary differentials: trees, multi-indices, certified dimensions";
  m.attr("DEFAULT_SEED") = kDefaultSeed;

  static py::exception<Error> base(m, "ElemdiffError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ArgumentError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("enumerate_trees", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& t : enumerateTrees(n)) out.push_back(t.parents());
    return out;
  }, py::arg("n"));
  m.def("canonical_form", [](const std::vector<int>& parent) { return canonicalForm(LabelledTree(parent)); },
        py::arg("parent"));
  m.def("project_pi", [](const std::vector<int>& parent) { return projectPi(LabelledTree(parent)).arities(); },
        py::arg("parent"));
  m.def("multi_indices", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& mi : enumerateMI(n)) out.push_back(mi.arities());
    return out;
  }, py::arg("n"));
  m.def("_dimension_w", [](int d, int n, bool linear, std::uint64_t seed, unsigned threads) {
    py::gil_scoped_release release;
    auto o = options(seed, threads);
    return io::toJson(linear ? dimensionLW(d, n, o) : dimensionW(d, n, o)).dump();
  }, py::arg("d"), py::arg("n"), py::arg("linear") = false, py::arg("seed") = kDefaultSeed, py::arg("threads") = 0);
  m.def("_dimension_labelled", [](int d, int n, const std::vector<int>& k, std::uint64_t seed, unsigned threads) {
    py::gil_scoped_release release;
    return io::toJson(dimensionLabelled(d, n, k, options(seed, threads))).dump();
  }, py::arg("d"), py::arg("n"), py::arg("multiplicities"), py::arg("seed") = kDefaultSeed, py::arg("threads") = 0);
  m.def("_certify_s2d", [](int k, int dimension) {
    py::gil_scoped_release release;
    CertifyOptions o;
    o.dimension = dimension;
    return io::toJson(certifyIdentity(s2dRelation(k), o)).dump();
  }, py::arg("k"), py::arg("dimension"));
  m.def("character_table", [] { return io::characterCsv({chiInfinity(5), chiV(2), chi2()}); });
  m.def("subgroup_class_count", [](int n) { return subgroupClasses(n).size(); }, py::arg("n"));
  m.def("_constraint_scan", [] { return io::toJson(constraintScan()).dump(); });
  m.def("burnside_count", [](int n, const std::vector<int>& k) { return burnsideCount(n, k); }, py::arg("n"),
        py::arg("multiplicities"));
}
