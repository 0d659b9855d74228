#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyfac/base_construction.hpp"
#include "hyfac/design_file.hpp"
#include "hyfac/graph_factorization.hpp"
#include "hyfac/laminar_split.hpp"
#include "hyfac/pipeline.hpp"
#include "hyfac/verifier.hpp"

namespace py = pybind11;
using namespace hyfac;

namespace {

py::list violations(const AuditReport& rep) {
  py::list out;
  for (const auto& v : rep.violations())
    out.append(py::make_tuple(v.check, v.location, v.expected, v.actual));
  return out;
}

} // namespace

PYBIND11_MODULE(hyfac, m) {
  m.doc() = "Constructive factorizations of lambda-fold complete 3-uniform multipartite hypergraphs";

  py::register_exception<ConditionError>(m, "ConditionError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Params>(m, "Params")
      .def(py::init<Count, Count, Count, std::vector<Count>>(), py::arg("lambda_"), py::arg("m"),
           py::arg("n"), py::arg("r"))
      .def_property_readonly("lambda_", &Params::lambda)
      .def_property_readonly("m", &Params::m)
      .def_property_readonly("n", &Params::n)
      .def_property_readonly("r", &Params::r)
      .def_property_readonly("k", &Params::k)
      .def_property_readonly("total_degree", &Params::total_degree)
      .def_property_readonly("total_edges", &Params::total_edges)
      .def("__repr__", [](const Params& p) {
        return "Params(lambda_=" + std::to_string(p.lambda()) + ", m=" + std::to_string(p.m()) +
               ", n=" + std::to_string(p.n()) + ", k=" + std::to_string(p.k()) + ")";
      });

  py::class_<VertexId>(m, "VertexId")
      .def(py::init<int, int>(), py::arg("part"), py::arg("index"))
      .def_readonly("part", &VertexId::part)
      .def_readonly("index", &VertexId::index)
      .def("__eq__", [](const VertexId& a, const VertexId& b) { return a == b; })
      .def("__hash__", [](const VertexId& v) { return py::hash(py::make_tuple(v.part, v.index)); })
      .def("__repr__", [](const VertexId& v) { return to_string(v); });

  py::class_<Design>(m, "Design")
      .def_property_readonly("params", &Design::params)
      .def_property_readonly("order", &Design::order)
      .def_property_readonly("vertices", [](const Design& d) {
        std::vector<VertexId> out;
        for (const auto& v : d.vertices()) out.push_back(v.id);
        return out;
      })
      .def("g", &Design::g)
      .def("edges", [](const Design& d) {
        py::list out;
        for (const auto& e : d.edges())
          out.append(py::make_tuple(std::vector<VertexId>(e.vertices.begin(), e.vertices.end()), e.color));
        return out;
      }, "List of (vertices, color) pairs; colors are 0-based.");

  m.def("degree", &degree, py::arg("design"), py::arg("v"), py::arg("color") = py::none());
  m.def("multiplicity", [](const Design& d, const std::vector<VertexId>& shape, std::optional<int> color) {
    if (shape.size() != 3) throw DomainError("shape must have three vertices");
    return multiplicity(d, {shape[0], shape[1], shape[2]}, color);
  }, py::arg("design"), py::arg("shape"), py::arg("color") = py::none());
  m.def("edge_count", &edge_count);

  m.def("check_sufficiency", [](const Params& p) { return violations(check_sufficiency(p)); },
        "List of (check, location, expected, actual); empty when (S1)-(S3) hold.");
  m.def("check_uniform", [](Count lambda, Count mm, Count n, Count r) {
    auto u = check_uniform(lambda, mm, n, r);
    return py::make_tuple(violations(u.report), u.k);
  }, py::arg("lambda_"), py::arg("m"), py::arg("n"), py::arg("r"));
  m.def("uniform_params", &uniform_params, py::arg("lambda_"), py::arg("m"), py::arg("n"), py::arg("r"));

  m.def("build_base", &build_base);
  m.def("detach_one", &detach_one);
  m.def("construct", [](const Params& p, bool trace) {
    DetachOptions opts;
    opts.trace = trace;
    return construct(p, opts);
  }, py::arg("params"), py::arg("trace") = false);

  m.def("verify_c1_c4", [](const Design& d) { return violations(verify_c1_c4(d)); });
  m.def("verify_factorization", [](const Design& d) { return violations(verify_factorization(d)); });
  m.def("degree_multipartite", &degree_multipartite, py::arg("part_sizes"), py::arg("p"),
        py::arg("lambda_") = 1);
  m.def("check_regularity_necessity", [](const std::vector<Count>& sizes) {
    auto c = check_regularity_necessity(sizes);
    return py::make_tuple(c.regular, c.witness);
  });

  m.def("factorize_complete_graph", [](int n, Count lambda, const std::vector<Count>& r) {
    py::list out;
    for (const auto& e : factorize_complete_graph(n, lambda, r).edges)
      out.append(py::make_tuple(e.u, e.v, e.color));
    return out;
  }, py::arg("n"), py::arg("lambda_"), py::arg("r"), "List of (u, v, color) per edge copy.");

  m.def("split", [](const std::vector<HingeId>& ground, const std::vector<std::vector<HingeId>>& fam_a,
                    const std::vector<std::vector<HingeId>>& fam_b, Count divisor) {
    SplitRequest req{ground, LaminarFamily(ground, fam_a), LaminarFamily(ground, fam_b), divisor};
    return split(req);
  }, py::arg("ground"), py::arg("fam_a"), py::arg("fam_b"), py::arg("divisor"));

  m.def("serialize", &serialize);
  m.def("parse_design", &parse_design);
  m.def("schedule", &schedule);
}
