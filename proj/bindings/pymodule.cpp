#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chebdesign/json_io.hpp"

namespace py = pybind11;
using namespace chebdesign;

namespace {

py::object json_to_py(const json& j) {
  py::module_ pyjson = py::module_::import("json");
  return pyjson.attr("loads")(j.dump());
}

json py_to_json(const py::object& obj) {
  py::module_ pyjson = py::module_::import("json");
  std::string dumped = pyjson.attr("dumps")(obj).cast<std::string>();
  return json::parse(dumped);
}

ModelSpec model_from_py(const py::dict& d) {
  return model_from_json(py_to_json(d));
}

}  // namespace

PYBIND11_MODULE(_chebdesign, m) {
  m.doc() = "Chebyshev-system verification and design improvement";

  py::class_<IntervalDomain>(m, "IntervalDomain")
      .def(py::init<double, double>(), py::arg("A"), py::arg("B"))
      .def_readonly("A", &IntervalDomain::A)
      .def_readonly("B", &IntervalDomain::B)
      .def("width", &IntervalDomain::width);

  py::class_<Design>(m, "Design")
      .def(py::init<std::vector<double>, std::vector<double>,
                    const IntervalDomain&>(),
           py::arg("support"), py::arg("weights"), py::arg("domain"))
      .def_static("uniform", &Design::uniform, py::arg("support"),
                  py::arg("domain"))
      .def_static("point_mass", &Design::point_mass, py::arg("x"),
                  py::arg("domain"))
      .def_property_readonly("support",
                             [](const Design& d) { return d.support(); })
      .def_property_readonly("weights",
                             [](const Design& d) { return d.weights(); })
      .def("twice_index", &Design::twice_index)
      .def("index", &Design::index)
      .def("__len__", &Design::size)
      .def("__repr__", &Design::describe);

  py::class_<ModelSpec>(m, "ModelSpec")
      .def_readonly("name", &ModelSpec::name)
      .def_readonly("p", &ModelSpec::p)
      .def_property_readonly("k",
                             [](const ModelSpec& m_) { return m_.psi.k; })
      .def_property_readonly("domain",
                             [](const ModelSpec& m_) { return m_.domain; });

  m.def("model_from_dict", &model_from_py, py::arg("spec"),
        "Build a model from {'type', 'params', 'domain'}");
  m.def("polynomial_model", &polynomial_model, py::arg("degree"),
        py::arg("domain"));
  m.def(
      "rational_model",
      [](int l, int s, const std::vector<double>& theta,
         const IntervalDomain& domain) {
        return rational_model(l, s, theta, domain);
      },
      py::arg("l"), py::arg("s"), py::arg("theta"), py::arg("domain"));

  m.def(
      "check_chebyshev",
      [](const ModelSpec& model, unsigned seed) {
        SamplerConfig cfg;
        cfg.seed = seed;
        ChebReport det = check_chebyshev_determinant(model.psi, model.domain, cfg);
        ChebReport wron = check_chebyshev_wronskian(model.psi, model.domain);
        return json_to_py(cheb_report_to_json(merge_reports(det, wron)));
      },
      py::arg("model"), py::arg("seed") = 20110107u,
      "Run both checks and return the merged report as a dict");

  m.def(
      "improve",
      [](const Design& design, const ModelSpec& model, const std::string& direction,
         int grid, double tol_mom, double tol_psd) {
        SamplerConfig cfg;
        ChebReport det = check_chebyshev_determinant(model.psi, model.domain, cfg);
        ChebReport wron = check_chebyshev_wronskian(model.psi, model.domain);
        ChebReport cheb = merge_reports(det, wron);
        std::optional<Direction> dir;
        if (direction == "upper") dir = Direction::Upper;
        else if (direction == "lower") dir = Direction::Lower;
        else if (direction != "auto")
          throw std::invalid_argument("direction must be upper, lower, or auto");
        ImproveOptions opts;
        opts.grid_n = grid;
        opts.tol_mom = tol_mom;
        opts.tol_psd = tol_psd;
        ImprovementResult res = improve_design(design, model, dir, cheb, opts);
        py::dict out = json_to_py(improvement_to_json(res, design));
        out["improved_design"] = res.improved;
        return out;
      },
      py::arg("design"), py::arg("model"), py::arg("direction") = "auto",
      py::arg("grid") = 2001, py::arg("tol_mom") = 1e-8,
      py::arg("tol_psd") = 1e-8,
      "Compute a dominating design; returns the result dict with the "
      "improved Design under 'improved_design'");

  m.def(
      "compare",
      [](const Design& d1, const Design& d2, const ModelSpec& model,
         double tol_psd) {
        Eigen::MatrixXd m1 = info_matrix(d1, model).entries;
        Eigen::MatrixXd m2 = info_matrix(d2, model).entries;
        return std::string(to_string(loewner_compare(m1, m2, tol_psd)));
      },
      py::arg("design1"), py::arg("design2"), py::arg("model"),
      py::arg("tol_psd") = 1e-9,
      "Loewner order of M(design2) relative to M(design1)");

  m.def(
      "info_matrix",
      [](const Design& d, const ModelSpec& model) {
        Eigen::MatrixXd m_ = info_matrix(d, model).entries;
        std::vector<std::vector<double>> rows;
        for (Eigen::Index i = 0; i < m_.rows(); ++i)
          rows.emplace_back(m_.row(i).begin(), m_.row(i).end());
        return rows;
      },
      py::arg("design"), py::arg("model"));
}
