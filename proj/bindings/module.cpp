#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fibtri/delannoy.hpp"
#include "fibtri/fibfacts.hpp"
#include "fibtri/polyfit.hpp"
#include "fibtri/render.hpp"
#include "fibtri/verify.hpp"

namespace py = pybind11;
using namespace fibtri;

namespace {

py::object to_py(const Int& z) {
  PyObject* obj = PyLong_FromString(z.get_str().c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

TriangleKind kind_of(const std::string& name) {
  if (name == "even") return TriangleKind::Even;
  if (name == "odd") return TriangleKind::Odd;
  throw std::invalid_argument("unknown kind: " + name);
}

DiagonalFamily family_of(const std::string& name) {
  if (name == "d") return DiagonalFamily::D;
  if (name == "d'" || name == "dprime") return DiagonalFamily::DPrime;
  if (name == "d''" || name == "ddouble") return DiagonalFamily::DDouble;
  throw std::invalid_argument("unknown family: " + name);
}

ValueTable table_of(const std::string& kind, long max_row) {
  return kind_of(kind) == TriangleKind::Even ? ValueTable::even(max_row)
                                             : ValueTable::odd(max_row);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Fibonacci partition triangles: exact tables, identity "
            "verification, Delannoy counts";

  m.def("fib", [](long n) { return to_py(fib(n)); }, py::arg("n"));

  m.def(
      "triangle_rows",
      [](const std::string& kind, long max_row) {
        ValueTable tbl = table_of(kind, max_row);
        py::list rows;
        for (const auto& row : tbl.rows) {
          py::list out;
          for (const auto& v : row) out.append(to_py(v));
          rows.append(out);
        }
        return rows;
      },
      py::arg("kind"), py::arg("max_row"));

  m.def(
      "partition_sum",
      [](const std::string& kind, long t) {
        ValueTable tbl = table_of(kind, t);
        return to_py(kind_of(kind) == TriangleKind::Even
                         ? even_partition_sum(tbl, t)
                         : odd_partition_sum(tbl, t));
      },
      py::arg("kind"), py::arg("t"));

  m.def("restricted_delannoy",
        [](long n) { return to_py(count_restricted_delannoy(n)); },
        py::arg("n"));

  m.def(
      "diagonal_polynomial",
      [](const std::string& kind, const std::string& family, long i,
         long window_end) {
        ValueTable tbl = table_of(kind, window_end);
        BinomialPoly p = diagonal_polynomial(tbl, family_of(family), i,
                                             window_end);
        py::list coeffs;
        for (const auto& c : p.coeffs) coeffs.append(to_py(c));
        py::dict out;
        out["coeffs"] = coeffs;
        out["t_min"] = p.t_min;
        out["binomial"] = binomial_string(p);
        out["monomial"] = monomial_string(p);
        return out;
      },
      py::arg("kind"), py::arg("family"), py::arg("i"),
      py::arg("window_end") = 30);

  m.def(
      "render_triangle",
      [](const std::string& kind, long max_row, const std::string& format) {
        return render_triangle(table_of(kind, max_row), parse_format(format));
      },
      py::arg("kind"), py::arg("max_row"), py::arg("format") = "pretty");

  m.def(
      "verify",
      [](long t_max, long n_max_delannoy) {
        RunReport report = run_verify(t_max, n_max_delannoy);
        py::list suites;
        for (const auto& s : report.suites) {
          py::dict d;
          d["name"] = s.name;
          d["pass"] = s.pass;
          d["seconds"] = s.seconds;
          d["detail"] = s.detail;
          suites.append(d);
        }
        py::dict out;
        out["all_pass"] = report.all_pass();
        out["suites"] = suites;
        out["notes"] = report.notes;
        return out;
      },
      py::arg("t_max") = 40, py::arg("n_max_delannoy") = 8);
}
