// JSON-in, JSON-out bindings. The Python package converts to and from dicts.

#include <pybind11/pybind11.h>

#include <string>

#include "polyrad/cases.hpp"
#include "polyrad/error.hpp"
#include "polyrad/io.hpp"

namespace py = pybind11;
using namespace polyrad;

namespace {

RangeConfig config(const std::string &text) {
  return config_from_json(text.empty() ? Json(nullptr) : Json::parse(text));
}

HomPoly poly(const std::string &text) { return poly_from_json(Json::parse(text)); }

std::string poly_norm_json(const std::string &p, const std::string &cfg) {
  const auto poly_p = poly(p);
  return to_json(poly_norm(poly_p, config(cfg).optim), poly_p.field()).dump();
}

std::string radius_json(const std::string &p, const std::string &q,
                        const std::string &method, const std::string &cfg_text) {
  auto cfg = config(cfg_text);
  const auto pp = poly(p);
  const auto qq = poly(q);
  require_norm_one(qq, cfg.optim);
  if (method == "limit")
    return to_json(radius_via_limit(pp, qq, cfg), qq.field()).dump();
  if (method == "attain")
    cfg.run_ladder = false;
  else if (method != "ladder")
    throw InputError("method must be attain, ladder or limit");
  return to_json(numerical_radius(pp, qq, cfg), qq.field()).dump();
}

std::string v_delta_json(const std::string &p, const std::string &q, double delta,
                         const std::string &cfg) {
  const auto qq = poly(q);
  return to_json(v_delta(poly(p), qq, delta, config(cfg)), qq.field()).dump();
}

std::string range_json(const std::string &p, const std::string &q, double delta,
                       int count, std::uint64_t seed, const std::string &cfg) {
  const auto qq = poly(q);
  return to_json(range_cloud(poly(p), qq, delta, count, seed, config(cfg)),
                 qq.field())
      .dump();
}

std::string index_json(const std::string &q, int samples, std::uint64_t seed,
                       const std::string &cfg_text) {
  const auto cfg = config(cfg_text);
  const auto qq = poly(q);
  require_norm_one(qq, cfg.optim);
  return to_json(index_upper_bound(qq, samples, seed, cfg)).dump();
}

std::string case_json(const std::string &name) { return to_json(run_case(name)).dump(); }

py::list case_names() {
  py::list out;
  for (const auto &c : case_catalog())
    out.append(c.name);
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "polyrad engine; every call takes and returns JSON text";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_RuntimeError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr e) {
    try {
      if (e)
        std::rethrow_exception(e);
    } catch (const Json::exception &ex) {
      PyErr_SetString(PyExc_ValueError, ex.what());
    }
  });

  m.def("poly_norm", &poly_norm_json, py::arg("p"), py::arg("config") = "",
        py::call_guard<py::gil_scoped_release>());
  m.def("numerical_radius", &radius_json, py::arg("p"), py::arg("q"),
        py::arg("method") = "attain", py::arg("config") = "",
        py::call_guard<py::gil_scoped_release>());
  m.def("v_delta", &v_delta_json, py::arg("p"), py::arg("q"), py::arg("delta"),
        py::arg("config") = "", py::call_guard<py::gil_scoped_release>());
  m.def("range_cloud", &range_json, py::arg("p"), py::arg("q"), py::arg("delta"),
        py::arg("count") = 200, py::arg("seed") = 1, py::arg("config") = "",
        py::call_guard<py::gil_scoped_release>());
  m.def("index_upper_bound", &index_json, py::arg("q"), py::arg("samples") = 20,
        py::arg("seed") = 1, py::arg("config") = "",
        py::call_guard<py::gil_scoped_release>());
  m.def("run_case", &case_json, py::arg("name"),
        py::call_guard<py::gil_scoped_release>());
  m.def("case_names", &case_names);
}
