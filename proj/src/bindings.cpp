// Python face of the library. Everything crosses the boundary as plain
// python data: partitions and β-sets as lists of ints, symbols as lists of
// row lists, exact rationals as canonical strings, big integers as ints.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "abacore/ell.hpp"
#include "abacore/examples.hpp"
#include "abacore/hook_data.hpp"
#include "abacore/io.hpp"
#include "abacore/verify.hpp"

namespace py = pybind11;

namespace {

abacore::Partition as_partition(const std::vector<int>& parts) {
  return abacore::Partition(parts);
}

abacore::BetaSet as_beta_set(const std::vector<int>& elements) {
  return abacore::BetaSet(elements);
}

abacore::DSymbol as_symbol(const std::vector<std::vector<int>>& rows) {
  std::vector<abacore::BetaSet> bs;
  bs.reserve(rows.size());
  for (const auto& row : rows) bs.emplace_back(row);
  return abacore::DSymbol(std::move(bs));
}

std::vector<std::vector<int>> rows_of(const abacore::DSymbol& s) {
  std::vector<std::vector<int>> rows;
  rows.reserve(s.rows().size());
  for (const abacore::BetaSet& row : s.rows()) rows.push_back(row.elements());
  return rows;
}

std::vector<std::vector<int>> parts_of(
    const std::vector<abacore::Partition>& lams) {
  std::vector<std::vector<int>> out;
  out.reserve(lams.size());
  for (const abacore::Partition& lam : lams) out.push_back(lam.parts());
  return out;
}

std::vector<std::string> strings_of(const abacore::RationalMultiset& m) {
  std::vector<std::string> out;
  out.reserve(m.size());
  for (const abacore::Rational& r : m) out.push_back(abacore::rational_to_string(r));
  return out;
}

py::object py_int(const abacore::BigInt& v) {
  return py::module_::import("builtins").attr("int")(v.str());
}

}  // namespace

PYBIND11_MODULE(_abacore, m) {
  m.doc() = "exact hooks, cores and quotients on partitions and symbols";

  m.def(
      "hook_lengths",
      [](const std::vector<int>& parts) {
        return abacore::hook_lengths_direct(as_partition(parts)).values();
      },
      py::arg("partition"), "all hook lengths, sorted ascending");

  m.def(
      "character_degree",
      [](const std::vector<int>& parts) {
        return py_int(abacore::character_degree(as_partition(parts)));
      },
      py::arg("partition"), "n! divided by the product of the hook lengths");

  m.def(
      "partition_core",
      [](const std::vector<int>& parts, int d) {
        const abacore::Partition lam = as_partition(parts);
        const abacore::BetaSet x = abacore::beta_set_for(lam, lam.length());
        return abacore::d_core_partition(x, d).parts();
      },
      py::arg("partition"), py::arg("d"));

  m.def(
      "partition_quotient",
      [](const std::vector<int>& parts, int d) {
        return parts_of(abacore::partition_d_quotient(as_partition(parts), d));
      },
      py::arg("partition"), py::arg("d"),
      "the d quotient components, one partition per runner");

  m.def(
      "beta_partition",
      [](const std::vector<int>& elements) {
        return abacore::partition_of(as_beta_set(elements)).parts();
      },
      py::arg("beta_set"));

  m.def(
      "beta_core",
      [](const std::vector<int>& elements, int d) {
        return abacore::d_core(as_beta_set(elements), d).elements();
      },
      py::arg("beta_set"), py::arg("d"));

  m.def(
      "beta_quotient",
      [](const std::vector<int>& elements, int d) {
        return abacore::d_quotient(as_beta_set(elements), d).elements();
      },
      py::arg("beta_set"), py::arg("d"));

  m.def(
      "symbol_partition",
      [](const std::vector<std::vector<int>>& rows) {
        return abacore::partition_of(as_symbol(rows)).parts();
      },
      py::arg("symbol"));

  m.def(
      "symbol_quotient",
      [](const std::vector<std::vector<int>>& rows) {
        return rows_of(abacore::balanced_quotient(as_symbol(rows)));
      },
      py::arg("symbol"));

  m.def(
      "symbol_core",
      [](const std::vector<std::vector<int>>& rows) {
        return rows_of(abacore::core(as_symbol(rows)));
      },
      py::arg("symbol"));

  m.def(
      "symbol_lengths",
      [](const std::vector<std::vector<int>>& rows, const std::string& delta) {
        return strings_of(abacore::length_multiset(
            abacore::parse_data_tuple(delta), as_symbol(rows)));
      },
      py::arg("symbol"), py::arg("delta"),
      "generalized hook lengths under a data tuple like \"(0,1,2;3)\", "
      "sorted, as exact-value strings");

  m.def(
      "signed_quotient_lengths",
      [](const std::vector<std::vector<int>>& rows, const std::string& delta) {
        return strings_of(abacore::signed_quotient_lengths(
            abacore::parse_data_tuple(delta), as_symbol(rows)));
      },
      py::arg("symbol"), py::arg("delta"));

  m.def(
      "check_decomposition",
      [](const std::vector<std::vector<int>>& rows, const std::string& delta) {
        const abacore::DSymbol s = as_symbol(rows);
        const abacore::DataTuple dt = abacore::parse_data_tuple(delta);
        return abacore::verify_pointwise_decomposition(s, dt).ok &&
               abacore::verify_multiset_decomposition(s, dt).equal;
      },
      py::arg("symbol"), py::arg("delta"),
      "pointwise and multiset hook decomposition through quotient and core");

  m.def(
      "ell_quotient",
      [](const std::vector<std::vector<int>>& rows, int ell, int e) {
        return rows_of(abacore::le_quotient(as_symbol(rows), ell, e));
      },
      py::arg("symbol"), py::arg("ell"), py::arg("e") = 0);

  m.def(
      "ell_core",
      [](const std::vector<std::vector<int>>& rows, int ell, int e) {
        return rows_of(abacore::le_core(as_symbol(rows), ell, e));
      },
      py::arg("symbol"), py::arg("ell"), py::arg("e") = 0);

  m.def(
      "delta_for_split",
      [](const std::vector<std::vector<int>>& rows, int ell) {
        return abacore::format(abacore::delta_for_split(as_symbol(rows), ell));
      },
      py::arg("symbol"), py::arg("ell"));

  m.def(
      "check_split_identity",
      [](const std::vector<std::vector<int>>& rows, int ell) {
        return abacore::verify_split_identity(as_symbol(rows), ell).equal;
      },
      py::arg("symbol"), py::arg("ell"));

  m.def(
      "check_twisted_identity",
      [](const std::vector<std::vector<int>>& rows, int ell, int e) {
        return abacore::verify_twisted_identity(as_symbol(rows), ell, e).equal;
      },
      py::arg("symbol"), py::arg("ell"), py::arg("e"));

  m.def(
      "degree_factorization",
      [](const std::vector<int>& parts, int d) {
        const abacore::Partition lam = as_partition(parts);
        const abacore::BetaSet x = abacore::beta_set_for(lam, lam.length());
        const abacore::DegreeFactorization f =
            abacore::relative_degree_factorization(lam, x, d);
        py::dict out;
        out["symmetric_factor"] = py_int(f.symmetric_factor);
        out["quotient_product"] = py_int(f.quotient_product);
        out["core_degree"] = py_int(f.core_degree);
        out["degree"] = py_int(f.degree());
        return out;
      },
      py::arg("partition"), py::arg("d"));

  m.def("example_ids", &abacore::example_ids);
  m.def("run_example", &abacore::run_example, py::arg("id"));
  m.def("run_example_json", &abacore::run_example_json, py::arg("id"));
}
