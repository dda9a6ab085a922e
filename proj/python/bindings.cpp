#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "aztec/counter.hpp"
#include "aztec/errors.hpp"
#include "aztec/oracle.hpp"
#include "aztec/records.hpp"
#include "aztec/region.hpp"
#include "aztec/transfer.hpp"

namespace py = pybind11;

namespace {

py::int_ to_python(const aztec::BigCount& value) {
  return py::int_(py::str(aztec::to_decimal(value)));
}

py::list to_python(const aztec::StateMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_python(m.at(i, j)));
    rows.append(row);
  }
  return rows;
}

aztec::Limits limits_from(py::object dense_cap, py::object vector_cap) {
  aztec::Limits limits = aztec::Limits::from_environment();
  if (!dense_cap.is_none()) limits.dense_cap = dense_cap.cast<int>();
  if (!vector_cap.is_none()) limits.vector_cap = vector_cap.cast<int>();
  return limits;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact domino tiling counts for the expanded (p,q)-Aztec diamond.";

  py::register_exception<aztec::CapacityError>(m, "CapacityError");

  m.def("count",
        [](int p, int q, int n, const std::string& method, py::object dense_cap, py::object vector_cap) {
          const auto parsed = aztec::parse_method(method);
          if (!parsed) throw py::value_error("method must be one of dense, vector, oracle");
          const aztec::Limits limits = limits_from(dense_cap, vector_cap);
          aztec::BigCount result;
          {
            py::gil_scoped_release release;
            result = aztec::count_with(aztec::RegionSpec(p, q, n), *parsed, limits);
          }
          return to_python(result);
        },
        py::arg("p"), py::arg("q"), py::arg("n"), py::arg("method") = "vector",
        py::arg("dense_cap") = py::none(), py::arg("vector_cap") = py::none(),
        "Number of domino tilings of the (p,q)-expanded Aztec diamond of order n.");

  m.def("row_lengths", [](int p, int q, int n) { return aztec::row_lengths({p, q, n}); },
        py::arg("p"), py::arg("q"), py::arg("n"));
  m.def("square_count", [](int p, int q, int n) { return aztec::square_count({p, q, n}); },
        py::arg("p"), py::arg("q"), py::arg("n"));
  m.def("cells",
        [](int p, int q, int n) {
          std::vector<std::pair<int, int>> out;
          for (const auto& c : aztec::cells({p, q, n})) out.emplace_back(c.col, c.row);
          return out;
        },
        py::arg("p"), py::arg("q"), py::arg("n"), "(column, row) pairs, bottom row first.");

  m.def("aztec_closed_form", [](int n) { return to_python(aztec::aztec_closed_form(n)); }, py::arg("n"));
  m.def("delannoy_closed_form", [](int n) { return to_python(aztec::delannoy_closed_form(n)); },
        py::arg("n"));

  m.def("bar_A", [](int k) { return to_python(aztec::transfer::bar_A(k)); }, py::arg("k"));
  m.def("bar_B", [](int k) { return to_python(aztec::transfer::bar_B(k)); }, py::arg("k"));
  m.def("central_C", [](int k) { return to_python(aztec::transfer::central_C(k)); }, py::arg("k"));
  m.def("restricted_A", [](int k) { return to_python(aztec::transfer::restricted_A(k)); }, py::arg("k"));
  m.def("lower_L", [](int k) { return to_python(aztec::transfer::lower_L(k)); }, py::arg("m"));
  m.def("upper_U", [](int k) { return to_python(aztec::transfer::upper_U(k)); }, py::arg("m"));

  m.def("state_index", [](const std::string& word) { return aztec::BarState::parse(word).index(); },
        py::arg("word"));
  m.def("state_word",
        [](std::uint64_t index, int length) { return aztec::state_word(index, length).word(); },
        py::arg("index"), py::arg("length"));

  m.def("enumerate_tilings",
        [](int p, int q, int n) {
          std::vector<std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>>> out;
          for (const auto& tiling : aztec::oracle::enumerate_tilings({p, q, n})) {
            auto& dominoes = out.emplace_back();
            for (const auto& d : tiling)
              dominoes.push_back({{d.first.col, d.first.row}, {d.second.col, d.second.row}});
          }
          return out;
        },
        py::arg("p"), py::arg("q"), py::arg("n"),
        "Every tiling as a list of ((col, row), (col, row)) dominoes.");
  m.def("count_mosaics_bruteforce",
        [](int p, int q, int n) { return to_python(aztec::oracle::count_mosaics_bruteforce({p, q, n})); },
        py::arg("p"), py::arg("q"), py::arg("n"));
}
