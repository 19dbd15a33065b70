#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "blockcraft/cli.hpp"
#include "blockcraft/glq_chars.hpp"
#include "blockcraft/glq_mckay_blocks.hpp"
#include "blockcraft/sym_blocks.hpp"
#include "blockcraft/sym_chars.hpp"

namespace py = pybind11;
using namespace blockcraft;

namespace {

py::int_ to_py(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

BigInt from_py(const py::int_& x) { return BigInt(py::str(x).cast<std::string>()); }

Partition to_partition(const std::vector<int>& parts) { return Partition(parts); }

py::dict degrees_dict(const DegreeMultiset& d) {
  py::dict out;
  for (const auto& [degree, mult] : d.entries()) out[to_py(degree)] = to_py(mult);
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict out;
  out["conjecture"] = std::string(to_string(r.conjecture));
  py::dict params;
  for (const auto& [k, v] : r.parameters) params[py::str(k)] = v;
  out["parameters"] = params;
  out["global_count"] = to_py(r.global_count);
  out["local_count"] = to_py(r.local_count);
  out["passed"] = r.passed;
  out["elapsed_ms"] = r.elapsed_ms;
  out["notes"] = r.notes;
  return out;
}

py::list report_list(const std::vector<VerificationReport>& reports) {
  py::list out;
  for (const auto& r : reports) out.append(report_dict(r));
  return out;
}

}  // namespace

PYBIND11_MODULE(_blockcraft, m) {
  m.doc() = "Exact character counts for symmetric and general linear groups";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<UnsupportedRegime>(m, "UnsupportedRegime", PyExc_RuntimeError);
  py::register_exception<VerificationFailure>(m, "VerificationFailure", PyExc_RuntimeError);

  // Partitions are plain lists of ints on the Python side.
  m.def("enumerate_partitions", [](int n) {
    std::vector<std::vector<int>> out;
    for (const auto& p : enumerate_partitions(n)) out.push_back(p.parts());
    return out;
  });
  m.def("partition_count", [](int n) { return to_py(partition_count(n)); });
  m.def("hook_lengths", [](const std::vector<int>& l) { return hook_lengths(to_partition(l)).lengths; });
  m.def("core_and_quotient", [](const std::vector<int>& l, int d) {
    const auto cq = d_core_and_quotient(to_partition(l), d);
    std::vector<std::vector<int>> quotient;
    for (const auto& q : cq.quotient) quotient.push_back(q.parts());
    return py::make_tuple(cq.core.parts(), cq.weight, quotient);
  });
  m.def("character_value", [](const std::vector<int>& l, const std::vector<int>& rho) {
    return to_py(mn_character_value(to_partition(l), Partition::from_unsorted(rho)));
  });

  m.def("sym_degree", [](const std::vector<int>& l) { return to_py(sym_degree(to_partition(l))); });
  m.def("irr_pprime_count_sym", [](int n, unsigned p) { return to_py(irr_pprime_count_sym(n, p)); });
  m.def("macdonald_count", [](int n) { return to_py(macdonald_count(n)); });
  m.def("sylow2_local_count", [](int n) { return to_py(sylow2_local_count(n)); });
  m.def("central_character_blocks", [](int n, unsigned p) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const auto& block : central_character_blocks(n, p).blocks) {
      auto& b = out.emplace_back();
      for (const auto& l : block) b.push_back(l.parts());
    }
    return out;
  });

  m.def("block_of", [](const std::vector<int>& l, unsigned p) {
    const auto b = block_of(to_partition(l), p);
    return py::make_tuple(b.core.parts(), b.weight);
  });
  m.def("bhz_witness_search", [](int w) { return bhz_witness_search(w).parts(); });
  m.def("am_verify_abelian", [](unsigned p, const std::vector<int>& core, int w) {
    return report_dict(am_verify_abelian(SymBlockLabel::make(p, to_partition(core), w)));
  });
  m.def("bhz_verify", [](unsigned p, const std::vector<int>& core, int w) {
    return report_dict(bhz_verify(SymBlockLabel::make(p, to_partition(core), w)));
  });
  m.def("sym_mckay_verify", [](int n, unsigned p) { return report_dict(sym_mckay_verify(n, p)); });

  m.def("metacyclic_degrees", [](std::uint64_t mm, std::uint64_t d, std::uint64_t u) {
    return degrees_dict(metacyclic_degrees({mm, d, u}));
  });
  m.def("wreath_of_metacyclic_degrees", [](std::uint64_t mm, std::uint64_t d, std::uint64_t u, int w) {
    return degrees_dict(wreath_degrees(metacyclic_degrees({mm, d, u}), w));
  });

  m.def("gl_order", [](int n, const py::int_& q) { return to_py(gl_order(n, from_py(q))); });
  m.def("unipotent_degree", [](const std::vector<int>& l, const py::int_& q) {
    return to_py(unipotent_degree(to_partition(l), from_py(q)));
  });
  m.def("gl_degrees", [](int n, std::uint64_t q) { return degrees_dict(all_degrees(n, q)); });
  m.def("d_ell", &d_ell);
  m.def("ms10_verify", [](int n, std::uint64_t q, unsigned ell) { return report_dict(ms10_verify(n, q, ell)); });
  m.def("unipotent_block_census", [](int n, std::uint64_t q, unsigned ell) {
    return report_list(unipotent_block_census(n, EllContext::make(q, ell)));
  });

  m.def(
      "run_command",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = 0;
        {
          py::gil_scoped_release release;
          code = run_command(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs a CLI command; returns (exit_code, stdout, stderr).");
}
