#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "specialred/descriptor_io.hpp"
#include "specialred/errors.hpp"
#include "specialred/glattice.hpp"
#include "specialred/intlinalg.hpp"
#include "specialred/laurent_forms.hpp"
#include "specialred/reductive.hpp"

namespace py = pybind11;
using namespace specialred;
using io::json;

namespace {

// Python ints cross the boundary as decimal strings, so size is unbounded.
Integer to_integer(const py::handle& h) {
  if (!py::isinstance<py::int_>(h)) throw py::type_error("expected an int");
  return Integer(py::str(h).cast<std::string>());
}

py::object to_py(const Integer& v) {
  return py::reinterpret_steal<py::object>(
      PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

IntMatrix to_matrix(const py::sequence& rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) {
    IntVector row;
    for (const auto& x : r.cast<py::sequence>()) row.push_back(to_integer(x));
    if (!out.empty() && row.size() != out.front().size())
      throw py::value_error("ragged matrix");
    out.push_back(std::move(row));
  }
  return IntMatrix::from_rows(out);
}

IntVector to_vector(const py::sequence& v) {
  IntVector out;
  for (const auto& x : v) out.push_back(to_integer(x));
  return out;
}

py::list to_py(const IntVector& v) {
  py::list l;
  for (const auto& x : v) l.append(to_py(x));
  return l;
}

py::list to_py(const IntMatrix& m) {
  py::list l;
  for (std::size_t i = 0; i < m.rows(); ++i) l.append(to_py(m.row_vector(i)));
  return l;
}

Limits limits_of(std::size_t max_group_order, std::size_t max_rank) {
  return Limits{max_group_order, max_rank};
}

GLattice lattice_of(const std::string& text, const Limits& limits) {
  return io::lattice_from_json(io::parse_json(text), "", limits);
}

}  // namespace

PYBIND11_MODULE(_specialred, m) {
  m.doc() = "Exact lattice algebra and speciality classification";

  // most recently registered is tried first, so the base goes in first
  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());

  m.def("snf", [](const py::sequence& a) {
    SmithDecomposition d = snf(to_matrix(a));
    py::dict r;
    r["left"] = to_py(d.left);
    r["diag"] = to_py(d.diag);
    r["right"] = to_py(d.right);
    r["invariant_factors"] = to_py(d.invariant_factors);
    return r;
  });
  m.def("hnf", [](const py::sequence& a) {
    HermiteDecomposition d = hnf(to_matrix(a));
    return py::make_tuple(to_py(d.form), to_py(d.transform));
  });
  m.def("kernel_basis",
        [](const py::sequence& a) { return to_py(kernel_basis(to_matrix(a))); });
  m.def("solve_linear", [](const py::sequence& a, const py::sequence& b) -> py::object {
    auto x = solve_linear(to_matrix(a), to_vector(b));
    if (!x) return py::none();
    return to_py(*x);
  });
  m.def("is_saturated",
        [](const py::sequence& a) { return is_saturated(to_matrix(a)); });

  m.def("h1",
        [](const std::string& lattice, const std::vector<std::size_t>& gens,
           bool whole, std::size_t max_group_order, std::size_t max_rank) {
          GLattice l = lattice_of(lattice, limits_of(max_group_order, max_rank));
          Subgroup h = whole ? Subgroup::whole(l.group())
                             : Subgroup::generated_by(l.group(), gens);
          return io::invariants_to_json(h1(h, l)).dump();
        },
        py::arg("lattice"), py::arg("generators"), py::arg("whole"),
        py::arg("max_group_order") = 64, py::arg("max_rank") = 12);
  m.def("is_invertible",
        [](const std::string& lattice, std::size_t max_group_order,
           std::size_t max_rank) {
          InvertibilityResult r =
              is_invertible(lattice_of(lattice, limits_of(max_group_order, max_rank)));
          py::dict d;
          d["invertible"] = r.invertible;
          d["cover_rank"] = r.cover.cover_lattice.rank();
          d["section"] = r.section ? py::object(to_py(*r.section)) : py::none();
          return d;
        },
        py::arg("lattice"), py::arg("max_group_order") = 64,
        py::arg("max_rank") = 12);
  m.def("is_flasque", [](const std::string& lattice) {
    return is_flasque(lattice_of(lattice, Limits{})).holds;
  });
  m.def("is_coflasque", [](const std::string& lattice) {
    return is_coflasque(lattice_of(lattice, Limits{})).holds;
  });

  m.def("classify",
        [](const std::string& text, bool explain, std::size_t max_group_order,
           std::size_t max_rank) {
          GroupDescriptor d =
              io::parse_descriptor(text, limits_of(max_group_order, max_rank));
          return io::report_to_json(classify(d), 0.0, explain).dump();
        },
        py::arg("text"), py::arg("explain") = false,
        py::arg("max_group_order") = 64, py::arg("max_rank") = 12);
  m.def("normalize_descriptor", [](const std::string& text) {
    return io::serialize_descriptor(io::parse_descriptor(text));
  });

  m.def("anisotropy_certified", [](const std::string& spec) {
    return forms::anisotropy_criterion(io::form_spec_from_json(io::parse_json(spec))) ==
           forms::Anisotropy::Certified;
  });
  m.def("isotropy_search",
        [](const std::string& spec, long degree_bound, std::size_t trials,
           std::uint64_t seed) -> py::object {
          auto s = io::form_spec_from_json(io::parse_json(spec));
          auto found = forms::isotropy_search(s, {degree_bound, trials, seed});
          if (!found) return py::none();
          py::list out;
          for (const auto& p : *found) {
            py::dict terms;
            for (const auto& [e, c] : p.terms())
              terms[py::tuple(py::cast(e))] = c;
            out.append(terms);
          }
          return out;
        },
        py::arg("spec"), py::arg("degree_bound") = 3, py::arg("trials") = 10000,
        py::arg("seed") = 0x5eed);
}
