// Python bindings. Rationals cross the boundary as strings ("p" or "p/q");
// Python ints and fractions.Fraction are accepted via str(). Structured
// results (reports, witnesses) are returned as JSON text and decoded by the
// package wrapper.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bandlab/generator.hpp"
#include "bandlab/report.hpp"

namespace py = pybind11;
using namespace bandlab;

namespace {

Rat to_rat(const py::handle& h) { return parse_rat(py::str(h).cast<std::string>()); }

RVec to_vec(const py::sequence& s) {
  RVec v;
  for (const auto& x : s) v.push_back(to_rat(x));
  return v;
}

RMat to_mat(const py::sequence& s) {
  RMat m;
  for (const auto& row : s) m.push_back(to_vec(row.cast<py::sequence>()));
  return m;
}

std::vector<std::string> strings(const RVec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

std::vector<std::vector<std::string>> strings(const RMat& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& r : m) out.push_back(strings(r));
  return out;
}

ConeSpec make_spec(const std::string& kind, std::size_t n, const py::sequence& vectors) {
  ConeSpec spec;
  if (kind == "rays") spec.kind = ConeSpec::Kind::rays;
  else if (kind == "inequalities") spec.kind = ConeSpec::Kind::inequalities;
  else throw InputError("kind must be 'rays' or 'inequalities'");
  spec.n = n;
  spec.vectors = to_mat(vectors);
  return spec;
}

struct Space {
  PolySpace s;
  SubspaceBasis span(const py::sequence& vectors) const { return SubspaceBasis(s.n, to_mat(vectors)); }
};

std::string result_json(const PredicateResult& r) { return to_json(r).dump(); }

}  // namespace

PYBIND11_MODULE(_bandlab, m) {
  m.doc() = "Exact bands, o-closed and s-closed ideals in pre-Riesz spaces";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Space>(m, "Space")
      .def(py::init([](const std::string& kind, std::size_t n, const py::sequence& vectors) {
             return Space{build_space(make_spec(kind, n, vectors))};
           }),
           py::arg("kind"), py::arg("n"), py::arg("vectors"))
      .def_property_readonly("n", [](const Space& x) { return x.s.n; })
      .def_property_readonly("m", [](const Space& x) { return x.s.m(); })
      .def_property_readonly("dual_rays", [](const Space& x) { return strings(x.s.F); })
      .def_property_readonly("extreme_rays", [](const Space& x) { return strings(x.s.cone_v); })
      .def("order_leq", [](const Space& x, const py::sequence& a, const py::sequence& b) {
        return order_leq(to_vec(a), to_vec(b), x.s);
      })
      .def("is_disjoint_def", [](const Space& x, const py::sequence& a, const py::sequence& b) {
        return is_disjoint_def(to_vec(a), to_vec(b), x.s);
      })
      .def("is_disjoint_cover", [](const Space& x, const py::sequence& a, const py::sequence& b) {
        return is_disjoint_cover(to_vec(a), to_vec(b), x.s);
      })
      .def("disjoint_complement",
           [](const Space& x, const py::sequence& w) { return strings(disjoint_complement(x.span(w), x.s).basis()); })
      .def("band_generated",
           [](const Space& x, const py::sequence& w) { return strings(band_generated(x.span(w), x.s).basis()); })
      .def("_is_lattice_rdp", [](const Space& x) { return result_json(is_lattice_rdp(x.s)); })
      .def("_is_pervasive", [](const Space& x) { return result_json(is_pervasive(x.s)); })
      .def("_is_band", [](const Space& x, const py::sequence& w) { return result_json(is_band(x.span(w), x.s)); })
      .def("_is_directed",
           [](const Space& x, const py::sequence& w) { return result_json(is_directed(x.span(w), x.s)); })
      .def("_is_solid", [](const Space& x, const py::sequence& w) { return result_json(is_solid(x.span(w), x.s)); })
      .def("_is_s_closed",
           [](const Space& x, const py::sequence& w) { return result_json(is_s_closed(x.span(w), x.s)); })
      .def("_is_o_closed",
           [](const Space& x, const py::sequence& w) { return result_json(is_o_closed(x.span(w), x.s)); });

  m.def(
      "random_cone",
      [](std::uint64_t seed, std::size_t n, std::size_t mm) { return strings(random_cone(seed, n, mm).vectors); },
      py::arg("seed"), py::arg("n"), py::arg("m"), "Dual-ray rows of the generated cone (inequality form)");
  m.def("example_names", &example_names);
  m.def(
      "_run_example", [](const std::string& name) {
        RunResult r = run_example(name, RunOptions{});
        return py::make_tuple(r.exit_code, r.report.dump());
      },
      py::arg("name"));
  m.def(
      "_analyze_text",
      [](const std::string& text, std::uint64_t seed, std::size_t budget) {
        RunOptions opts;
        opts.seed = seed;
        opts.budget = budget;
        RunResult r = analyze(parse_instance(text, "<python>"), opts);
        return py::make_tuple(r.exit_code, r.report.dump());
      },
      py::arg("text"), py::arg("seed") = 1, py::arg("budget") = 0);
}
