#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <variant>

#include "kundt/document.hpp"
#include "kundt/report.hpp"

namespace py = pybind11;
using namespace kundt;

namespace {

py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Params to_params(const std::map<std::string, std::string>& p) {
  Params out;
  for (const auto& [k, v] : p) out[k] = parse_rational(v);
  return out;
}

Vec<Rational> to_vec(const std::vector<std::string>& v) {
  Vec<Rational> out;
  for (const auto& x : v) out.push_back(parse_rational(x));
  return out;
}

template <class F>
std::vector<std::string> to_strings(const Vec<F>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

// An algebra with one metric; operations dispatch on the metric's field.
class Model {
 public:
  Model(LieAlgebra g, MetricMatrix metric)
      : model_(std::visit(
            [&](const auto& m) -> Variant {
              using F = typename std::decay_t<decltype(m)>::value_type;
              return MetricLieAlgebra<F>(g, m);
            },
            metric)) {}

  static Model from_catalog(const std::string& id, const std::string& metric, const std::map<std::string, std::string>& p) {
    const CatalogEntry c = load(id, to_params(p), {metric});
    return Model(c.algebra, c.metric(metric).matrix);
  }
  static Model from_document(const std::string& text) {
    AlgebraDocument d = parse_document(text);
    if (!d.metric) throw InputError("document has no metric");
    return Model(d.algebra, *d.metric);
  }

  const LieAlgebra& algebra() const {
    return std::visit([](const auto& m) -> const LieAlgebra& { return m.algebra(); }, model_);
  }
  std::vector<std::string> labels() const { return algebra().labels(); }
  std::size_t dim() const { return algebra().dim(); }
  bool is_rational() const { return model_.index() == 0; }

  py::object metric() const {
    return std::visit([](const auto& m) { return to_py(to_json(m.metric())); }, model_);
  }

  std::vector<std::string> bracket(const std::vector<std::string>& x, const std::vector<std::string>& y) const {
    return to_strings(kundt::bracket(algebra(), to_vec(x), to_vec(y)));
  }

  std::vector<std::string> product(const std::vector<std::string>& x, const std::vector<std::string>& y) const {
    return std::visit(
        [&](const auto& m) {
          using F = typename std::decay_t<decltype(m.metric())>::value_type;
          return to_strings(m.product(convert<F>(to_vec(x)), convert<F>(to_vec(y))));
        },
        model_);
  }

  py::object check_pair(const std::vector<std::vector<std::string>>& basis) const {
    std::vector<Vec<Rational>> vs;
    for (const auto& b : basis) vs.push_back(to_vec(b));
    const auto h = Subspace<Rational>::from_basis(dim(), vs);
    return std::visit(
        [&](const auto& m) {
          using F = typename std::decay_t<decltype(m.metric())>::value_type;
          auto j = to_json(check_kundt_pair(m, convert<F>(h)), labels());
          if (dim() == 3) j["dim3_criterion"] = check_dim3_criterion(m, convert<F>(h));
          return to_py(j);
        },
        model_);
  }

  py::object check_vector(const std::vector<std::string>& v) const {
    return std::visit(
        [&](const auto& m) {
          using F = typename std::decay_t<decltype(m.metric())>::value_type;
          return to_py(to_json(check_kundt_vector(m, convert<F>(to_vec(v))), labels()));
        },
        model_);
  }

  py::object classify() const {
    return std::visit(
        [&](const auto& m) {
          nlohmann::json out = nlohmann::json::array();
          for (const auto& r : classify_kundt_structures(m)) out.push_back(to_json(r, labels()));
          return to_py(out);
        },
        model_);
  }

  py::object curvature() const {
    return std::visit(
        [&](const auto& m) {
          nlohmann::json out;
          out["ricci"] = to_json(ricci(m));
          out["scalar_curvature"] = to_string(scalar_curvature(m));
          const auto c = constant_curvature(m);
          out["constant_curvature"] = c ? nlohmann::json(to_string(*c)) : nlohmann::json(nullptr);
          const ConnectionChecks k = check_connection(m);
          out["identities"] = {{"torsion_free", k.torsion_free},
                               {"metric_compatible", k.metric_compatible},
                               {"first_bianchi", k.first_bianchi},
                               {"pair_symmetric", k.pair_symmetric}};
          return to_py(out);
        },
        model_);
  }

  py::dict flow(const std::vector<double>& v0, double t_end, double dt) const {
    const FlowResult r = std::visit([&](const auto& m) { return kundt::flow(m, v0, t_end, dt); }, model_);
    std::vector<double> t;
    std::vector<std::vector<double>> v;
    for (const auto& s : r.trajectory) {
      t.push_back(s.t);
      v.push_back(s.v);
    }
    py::dict out;
    out["t"] = t;
    out["v"] = v;
    out["energy_drift"] = r.energy_drift;
    return out;
  }

  double leaf_defect(const std::vector<std::vector<double>>& h_basis, const std::vector<double>& v0, double t_end,
                     double dt) const {
    const FloatModel fm = std::visit([](const auto& m) { return to_float(m); }, model_);
    return leaf_invariance_defect(fm, h_basis, v0, t_end, dt);
  }

  std::string to_document() const {
    return std::visit(
        [&](const auto& m) { return write_document(AlgebraDocument{m.algebra(), MetricMatrix(m.metric())}); }, model_);
  }

 private:
  using Variant = std::variant<MetricLieAlgebra<Rational>, MetricLieAlgebra<QSqrt2>>;
  Variant model_;
};

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact Kundt-structure checks on metric Lie algebras";
  py::register_exception<InputError>(mod, "InputError", PyExc_ValueError);

  mod.def("catalog_ids", &catalog_ids);
  mod.def(
      "metric_names", [](const std::string& id, const std::map<std::string, std::string>& p) {
        return catalog_metric_names(id, to_params(p));
      },
      py::arg("id"), py::arg("params") = std::map<std::string, std::string>{});
  mod.def(
      "enumerate", [](const std::string& id) {
        const LieAlgebra g = catalog_algebra(id);
        return to_py(to_json(enumerate_hyperplane_subalgebras(g), g.labels()));
      },
      py::arg("id"));
  mod.def(
      "verify_paper", [](const std::string& only, bool parallel) {
        std::vector<ClaimResult> r;
        {
          py::gil_scoped_release release;
          r = run_claims(paper_theorem_suite(), only, parallel);
        }
        return to_py(to_json(r));
      },
      py::arg("only") = "", py::arg("parallel") = true);

  py::class_<Model>(mod, "Model")
      .def_static("from_catalog", &Model::from_catalog, py::arg("id"), py::arg("metric"),
                  py::arg("params") = std::map<std::string, std::string>{})
      .def_static("from_document", &Model::from_document, py::arg("text"))
      .def_property_readonly("labels", &Model::labels)
      .def_property_readonly("dim", &Model::dim)
      .def_property_readonly("is_rational", &Model::is_rational)
      .def_property_readonly("metric", &Model::metric)
      .def("bracket", &Model::bracket)
      .def("product", &Model::product)
      .def("check_pair", &Model::check_pair, py::arg("basis"))
      .def("check_vector", &Model::check_vector, py::arg("v"))
      .def("classify", &Model::classify)
      .def("curvature", &Model::curvature)
      .def("flow", &Model::flow, py::arg("v0"), py::arg("t_end"), py::arg("dt"))
      .def("leaf_defect", &Model::leaf_defect, py::arg("h_basis"), py::arg("v0"), py::arg("t_end"), py::arg("dt"))
      .def("to_document", &Model::to_document);
}
