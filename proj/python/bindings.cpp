// JSON-in, JSON-out bindings; the file formats are the same ones the CLI reads and writes.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ctv/io.hpp"

namespace py = pybind11;
using namespace ctv;

namespace {

std::optional<std::string> partition(const std::string& instance_json) {
  const auto inst = io::parse_instance(instance_json);
  inst.check();
  if (inst.k != 0) throw Error(ErrorKind::InvalidParameter, "partition needs a k = 0 instance");
  const auto res = search_tverberg(inst.collections[0], inst.r[0]);
  if (!res.certificate) return std::nullopt;
  return io::emit_certificate(*res.certificate);
}

std::optional<std::string> transversal(const std::string& instance_json, std::size_t samples, std::size_t refine,
                                       std::uint64_t seed, bool exact) {
  const auto inst = io::parse_instance(instance_json);
  inst.check();
  if (exact) {
    const auto cert = solve_hyperplane_transversal_exact(inst);
    if (!cert) return std::nullopt;
    return io::emit_certificate(*cert);
  }
  const auto res = solve_transversal(inst, SearchBudget{samples, refine, seed});
  if (!res.certificate) return std::nullopt;
  return io::emit_certificate(*res.certificate);
}

std::pair<bool, std::string> verify(const std::string& instance_json, const std::string& certificate_json) {
  const auto v = io::verify_certificate(io::parse_instance(instance_json), io::parse_certificate(certificate_json));
  return {v.ok, v.reason};
}

std::string svg(const std::string& instance_json, const std::optional<std::string>& certificate_json) {
  const auto inst = io::parse_instance(instance_json);
  if (!certificate_json) return io::render_svg(inst);
  const auto cert = io::parse_certificate(*certificate_json);
  return io::render_svg(inst, &cert);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  static py::exception<Error> ctv_error(m, "CtvError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(ctv_error.ptr(), e.what());
    }
  });

  m.def("partition", &partition, py::arg("instance"));
  m.def("transversal", &transversal, py::arg("instance"), py::arg("samples") = 10000, py::arg("refine") = 6,
        py::arg("seed") = 0, py::arg("exact") = false);
  m.def("verify", &verify, py::arg("instance"), py::arg("certificate"));
  m.def("random_instance",
        [](std::size_t d, std::size_t k, const std::vector<std::size_t>& r, std::uint64_t seed) {
          return io::emit_instance(random_instance(d, k, r, {}, seed));
        },
        py::arg("d"), py::arg("k"), py::arg("r"), py::arg("seed") = 0);
  m.def("tightness_instance",
        [](std::size_t d, std::size_t k, const std::vector<std::size_t>& r, std::size_t oversized) {
          return io::emit_instance(tightness_instance(d, k, r, oversized));
        },
        py::arg("d"), py::arg("k"), py::arg("r"), py::arg("oversized") = 0);
  m.def("chessboard_betti",
        [](std::size_t rows, std::size_t cols, std::uint64_t p) {
          return topology::homology_mod_p(topology::chessboard_complex(rows, cols), p);
        },
        py::arg("rows"), py::arg("cols"), py::arg("p") = 2);
  m.def("chessboard_f_vector",
        [](std::size_t rows, std::size_t cols) { return topology::chessboard_complex(rows, cols).f_vector(); },
        py::arg("rows"), py::arg("cols"));
  m.def("test_map_degree", [](std::size_t r, std::size_t d) { return io::emit_degree_report(topology::test_map_degree(r, d)); },
        py::arg("r"), py::arg("d"));
  m.def("render_svg", &svg, py::arg("instance"), py::arg("certificate") = std::nullopt);
}
