// Python access to the identities, factor tables and Macdonald polynomials.
// Structured results cross the boundary as JSON text; the package wrapper
// decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "hookbox/json_io.hpp"

namespace py = pybind11;
using namespace hookbox;

namespace {

int default_n(const Partition& lambda, std::optional<int> n) {
  return n.value_or(static_cast<int>(lambda.length()));
}

py::dict stats_dict(const BoxStats& s) {
  py::dict d;
  d["content"] = s.content;
  d["hook"] = s.hook;
  d["arm"] = s.arm;
  d["leg"] = s.leg;
  d["coarm"] = s.coarm;
  d["coleg"] = s.coleg;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hook/content product identities and Macdonald polynomials";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Partition>(m, "Partition")
      .def(py::init([](const std::vector<int>& parts) { return Partition(parts); }),
           py::arg("parts"))
      .def_static("parse", &Partition::parse, py::arg("text"))
      .def_property_readonly(
          "parts", [](const Partition& p) { return std::vector<int>(p.parts().begin(), p.parts().end()); })
      .def("size", &Partition::size)
      .def("length", &Partition::length)
      .def("__len__", &Partition::length)
      .def("__str__", &Partition::to_string)
      .def("__repr__", [](const Partition& p) { return "Partition" + p.to_string(); })
      .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
      .def("__hash__", [](const Partition& p) { return py::hash(py::str(p.to_csv())); });

  m.def("conjugate", &conjugate, py::arg("lam"));
  m.def("boxes", [](const Partition& lam) {
    std::vector<std::pair<int, int>> out;
    for (const BoxCoord& b : boxes(lam)) out.emplace_back(b.row, b.col);
    return out;
  }, py::arg("lam"));
  m.def("box_stats", [](const Partition& lam, int row, int col) {
    return stats_dict(box_stats(lam, {row, col}));
  }, py::arg("lam"), py::arg("row"), py::arg("col"));
  m.def("row_ladder", &row_ladder, py::arg("lam"), py::arg("n"), py::arg("i"));
  m.def("dominated_by", &dominated_by, py::arg("mu"), py::arg("lam"));
  m.def("partitions_of", &partitions_of, py::arg("d"));

  m.def("integer_lhs", [](const Partition& lam, int n) { return integer_lhs(lam, n).get_str(); },
        py::arg("lam"), py::arg("n"));
  m.def("integer_rhs", [](const Partition& lam, int n) { return integer_rhs(lam, n).get_str(); },
        py::arg("lam"), py::arg("n"));

  m.def("verify_json", [](const std::string& level, const Partition& lam, std::optional<int> n) {
    py::gil_scoped_release release;
    return to_json(verify(parse_level(level), lam, default_n(lam, n))).dump();
  }, py::arg("level"), py::arg("lam"), py::arg("n") = py::none());

  m.def("table_json", [](const Partition& lam, std::optional<int> n) {
    const EllipticTable table = elliptic_table(lam, default_n(lam, n));
    return Json{{"table", to_json(table)}, {"completion", to_json(elliptic_complete(table))}}.dump();
  }, py::arg("lam"), py::arg("n") = py::none());

  m.def("macdonald_json", [](const Partition& lam) {
    py::gil_scoped_release release;
    return to_json(macdonald_p(lam)).dump();
  }, py::arg("lam"));

  m.def("principal_json", [](const Partition& lam, int n) {
    py::gil_scoped_release release;
    const PrincipalCheck c = verify_principal_vs_elliptic(lam, n);
    return Json{{"principal", to_json(c.principal)},
                {"elliptic", to_json(c.elliptic)},
                {"weight", c.weight},
                {"equal", c.equal},
                {"literal_equal", c.literal_equal}}
        .dump();
  }, py::arg("lam"), py::arg("n"));

  m.def("specialize_json", [](const Partition& lam, const std::string& at) {
    py::gil_scoped_release release;
    return to_json(specialize_family(lam, parse_locus(at))).dump();
  }, py::arg("lam"), py::arg("at"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code;
    {
      py::gil_scoped_release release;
      code = cli::run(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
