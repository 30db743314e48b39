#include "k3gm/emit.hpp"
#include "k3gm/model.hpp"
#include "k3gm/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace k3gm;

namespace {

py::tuple run_suites(const std::string &model, const std::string &suite, int K, int qmax)
{
    RunConfig cfg;
    cfg.model = model;
    cfg.suite = suite;
    cfg.K = K;
    cfg.qmax = qmax;
    cfg.validate();
    std::vector<VerificationReport> reports;
    {
        py::gil_scoped_release release;
        reports = run(cfg);
    }
    bool ok = true;
    for (const auto &r : reports) {
        ok = ok && r.passed();
    }
    return py::make_tuple(ok ? 0 : 1, to_json(reports).dump());
}

py::dict params(const std::string &model)
{
    ModelParams p = model_params(parse_model(model));
    py::dict d;
    d["name"] = p.name;
    d["d"] = p.d;
    d["weights"] = py::make_tuple(p.w1, p.w2);
    d["mu"] = to_string(p.mu);
    d["nu"] = to_string(p.nu);
    d["N"] = p.N;
    d["r"] = p.r;
    d["d_N"] = p.d_N;
    d["C_HH"] = p.C_HH;
    d["C_HL"] = p.C_HL;
    d["c"] = to_string(p.c);
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact K3 period, connection and modular-form computations";

    m.def("suites", &suite_names);
    m.def("model_params", &params, py::arg("model"));
    m.def("run", &run_suites, py::arg("model") = "all", py::arg("suite") = "all", py::arg("K") = 10,
          py::arg("qmax") = 30);
    m.def(
        "emit",
        [](const std::string &kind, const std::string &selector, const std::string &model, int level, int K,
           int qmax) {
            Model md = kind == "form" && level != 0 ? Model::E6 : parse_model(model);
            return emit_expansion(kind, selector, md, level, K, qmax).dump();
        },
        py::arg("kind"), py::arg("selector") = "", py::arg("model") = "e6", py::arg("level") = 0, py::arg("K") = 10,
        py::arg("qmax") = 30);
    m.def(
        "connection", [](const std::string &model, const std::string &source) {
            return emit_connection(parse_model(model), source).dump();
        },
        py::arg("model"), py::arg("source") = "printed");
    m.def(
        "pairing", [](const std::string &model, const std::string &source) {
            return emit_pairing(parse_model(model), source).dump();
        },
        py::arg("model"), py::arg("source") = "printed");
    m.def(
        "frame", [](const std::string &model, int K) { return emit_frame(parse_model(model), K).dump(); },
        py::arg("model"), py::arg("K") = 8);
}
