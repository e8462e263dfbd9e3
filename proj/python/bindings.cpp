#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "teeprobe/anyon.hpp"
#include "teeprobe/arrangement.hpp"
#include "teeprobe/catalog.hpp"
#include "teeprobe/dsl.hpp"
#include "teeprobe/entropy_algebra.hpp"
#include "teeprobe/errors.hpp"
#include "teeprobe/generators.hpp"
#include "teeprobe/scan.hpp"
#include "teeprobe/tqft_eval.hpp"
#include "teeprobe/tripartite.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace teeprobe;

namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

Rational from_python(const py::handle& value) {
  return parse_rational(py::str(value).cast<std::string>());
}

py::object parse_json(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

nlohmann::json to_native(const py::handle& obj) {
  if (py::isinstance<py::str>(obj)) return nlohmann::json::parse(obj.cast<std::string>());
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::tuple sym(const SymEntropy& v) { return py::make_tuple(fraction(v.c_logD), fraction(v.c_K)); }

EvalOptions options(const std::string& mode, bool strict) { return {parse_eval_mode(mode), strict}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact entanglement-entropy probes on planar geometries";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<UnsupportedGeometry>(m, "UnsupportedGeometry", PyExc_RuntimeError);

  py::class_<InfoQuantity>(m, "Quantity")
      .def(py::init([](std::vector<std::string> parties, std::string name) {
             return InfoQuantity(std::move(parties), std::move(name));
           }),
           "parties"_a, "name"_a = "")
      .def_property_readonly("parties", &InfoQuantity::parties)
      .def_property("name", &InfoQuantity::name, &InfoQuantity::set_name)
      .def_property_readonly("terms",
                             [](const InfoQuantity& q) {
                               py::list out;
                               for (const auto& [t, c] : q.terms()) out.append(py::make_tuple(q.labels(t), fraction(c)));
                               return out;
                             })
      .def("add_term",
           [](InfoQuantity& q, const std::vector<std::string>& region, const py::object& coeff) {
             q.add_term(q.region(region), from_python(coeff));
           })
      .def("coefficient",
           [](const InfoQuantity& q, const std::vector<std::string>& region) {
             return fraction(q.coefficient(q.region(region)));
           })
      .def("render", &render)
      .def("to_json", [](const InfoQuantity& q) { return parse_json(to_json(q)); })
      .def("__len__", &InfoQuantity::term_count)
      .def("__str__", &render)
      .def("__repr__", [](const InfoQuantity& q) { return "Quantity(" + render(q) + ")"; })
      .def("__eq__", [](const InfoQuantity& a, const InfoQuantity& b) { return a == b; })
      .def("__add__", [](const InfoQuantity& a, const InfoQuantity& b) { return a + b; })
      .def("__sub__", [](const InfoQuantity& a, const InfoQuantity& b) { return a - b; })
      .def("__mul__", [](const InfoQuantity& a, const py::object& f) { return a * from_python(f); })
      .def("__rmul__", [](const InfoQuantity& a, const py::object& f) { return a * from_python(f); })
      .def("__neg__", [](const InfoQuantity& a) { return -a; });

  m.def("parse", py::overload_cast<std::string_view>(&parse), "text"_a);
  m.def("parse_with_parties", py::overload_cast<std::string_view, const std::vector<std::string>&>(&parse),
        "text"_a, "parties"_a);
  m.def("quantity_from_json", [](const py::object& j) { return quantity_from_json(to_native(j)); });
  m.def("quantity", &quantity_from_reference, "ref"_a, "Generator shorthand (MMI, I5, Q7, ...) or DSL text");
  m.def("multi_information", py::overload_cast<int>(&gen_multi_information), "n"_a);
  m.def("partial_multi_information", &gen_partial_multi_information, "chosen"_a, "universe"_a);
  m.def("cyclic", &gen_cyclic, "party_count"_a);
  m.def("named", &gen_named, "name"_a);
  m.def("tripartite_expand", [](const std::vector<std::string>& parties, const py::list& terms) {
    TripartiteForm form{parties, {}};
    InfoQuantity scratch(parties);
    for (const auto& t : terms) {
      const auto parts = t.cast<std::vector<std::vector<std::string>>>();
      if (parts.size() < 3 || parts.size() > 4) throw InputError("tripartite term needs (X, Y, Z[, W])");
      form.terms.push_back({scratch.region(parts[0]), scratch.region(parts[1]), scratch.region(parts[2]),
                            parts.size() == 4 ? scratch.region(parts[3]) : PartySet{}});
    }
    return tripartite_expand(form);
  });

  m.def("sum_coeffs", [](const InfoQuantity& q) { return fraction(sum_coeffs(q)); });
  m.def("ghz_value", [](const InfoQuantity& q) { return fraction(ghz_value(q)); }, "In units of log 2");
  m.def("classify", [](const InfoQuantity& q) { return std::string(to_string(classify(q))); });
  m.def("balance_profile", [](const InfoQuantity& q) {
    py::list out;
    for (const auto& s : balance_profile(q).slices) {
      py::list viol;
      for (const auto& v : s.violations) viol.append(py::make_tuple(q.labels(v.cluster), fraction(v.residue)));
      out.append(py::dict("k"_a = s.k, "balanced"_a = s.balanced, "violations"_a = viol));
    }
    return out;
  });

  py::class_<Arrangement>(m, "Arrangement")
      .def_property_readonly("name", &Arrangement::name)
      .def_property_readonly("faces", &Arrangement::faces)
      .def_property_readonly("valid", &Arrangement::valid)
      .def_property_readonly("violations", [](const Arrangement& a) { return a.validation().violations; })
      .def_property_readonly("vertex_count", [](const Arrangement& a) { return a.vertices().size(); })
      .def_property_readonly("edge_count", [](const Arrangement& a) { return a.edges().size(); })
      .def("punctures",
           [](const Arrangement& a, const std::vector<std::string>& r) { return puncture_count(a, a.region(r)); })
      .def("component_punctures",
           [](const Arrangement& a, const std::vector<std::string>& r) { return boundary_punctures(a, a.region(r)); })
      .def("components",
           [](const Arrangement& a, const std::vector<std::string>& r) {
             std::vector<std::vector<std::string>> out;
             for (const auto& c : union_components(a, a.region(r))) out.push_back(a.labels(c));
             return out;
           })
      .def("boundary_b0",
           [](const Arrangement& a, const std::vector<std::string>& r) { return boundary_b0(a, a.region(r)); })
      .def("describe", [](const Arrangement& a) { return parse_json(to_json(describe(a))); })
      .def("to_json", [](const Arrangement& a) { return parse_json(to_json(a)); })
      .def("__repr__", [](const Arrangement& a) { return "Arrangement(" + a.name() + ")"; });

  m.def("geometry", &resolve_arrangement, "ref"_a, "Builtin name (kp_disk3, pie5, strips3, ...) or JSON file");
  m.def("arrangement_from_json",
        [](const py::object& j, std::string name) { return arrangement_from_json(to_native(j), std::move(name)); },
        "data"_a, "name"_a = "");

  m.def("sphere_entropy", [](int k) { return sym(sphere_entropy_symbolic(k)); }, "k"_a);
  m.def(
      "eval_tqft",
      [](const InfoQuantity& q, const Arrangement& a, const std::string& mode, bool strict) {
        return sym(eval_tqft(q, a, options(mode, strict)));
      },
      "quantity"_a, "geometry"_a, "mode"_a = "paper", "strict"_a = false,
      "Returns (c_logD, c_K) as Fractions");
  m.def(
      "tally",
      [](const InfoQuantity& q, const Arrangement& a, const std::string& mode) {
        Tally t;
        eval_tqft(q, a, options(mode, false), &t);
        return parse_json(to_json(t));
      },
      "quantity"_a, "geometry"_a, "mode"_a = "paper");
  m.def("eval_area_law", [](const InfoQuantity& q, const Arrangement& a) {
    const auto v = eval_area_law(q, a);
    py::dict lengths;
    for (const auto& [id, c] : v.length_coeffs) lengths[py::int_(id)] = fraction(c);
    return py::dict("length_coeffs"_a = lengths, "c_gamma"_a = fraction(v.c_gamma));
  });

  py::class_<AnyonModel>(m, "AnyonModel")
      .def_property_readonly("name", &AnyonModel::name)
      .def_property_readonly("labels", &AnyonModel::labels)
      .def_property_readonly("dims", &AnyonModel::dims)
      .def("fusion", &AnyonModel::fusion)
      .def("to_json", [](const AnyonModel& mdl) { return parse_json(to_json(mdl)); });
  m.def("model", &resolve_model, "ref"_a);
  m.def("model_from_json", [](const py::object& j) { return model_from_json(to_native(j)); });
  m.def("validate_model", [](const AnyonModel& mdl) { return validate_model(mdl).violations; });
  m.def("derived_scalars", [](const AnyonModel& mdl) {
    const auto s = derived_scalars(mdl);
    return py::dict("D"_a = s.D, "log_D"_a = s.log_D, "K"_a = s.K, "P"_a = s.P);
  });
  m.def("closed_form_entropy", &closed_form_entropy, "model"_a, "k"_a);
  m.def("brute_force_entropy", &brute_force_value, "model"_a, "k"_a, "k_max"_a = 8);
  m.def(
      "evaluate_numeric",
      [](const py::object& c_logD, const py::object& c_K, const AnyonModel& mdl) {
        return evaluate_numeric(SymEntropy{from_python(c_logD), from_python(c_K)}, mdl);
      },
      "c_logD"_a, "c_K"_a, "model"_a);

  m.def(
      "scan",
      [](const py::object& catalog, const std::vector<std::string>& geometries, const std::vector<std::string>& modes,
         const std::vector<std::string>& models) {
        const auto entries = catalog.is_none() ? starter_catalog() : catalog_from_json(to_native(catalog));
        std::vector<Arrangement> geos;
        for (const auto& g : geometries) geos.push_back(resolve_arrangement(g));
        ScanOptions opt;
        opt.modes.clear();
        for (const auto& mode : modes) opt.modes.push_back(parse_scan_mode(mode));
        for (const auto& mdl : models) opt.models.push_back(resolve_model(mdl));
        ScanReport report;
        {
          py::gil_scoped_release release;
          report = run_scan(entries, geos, opt);
        }
        return parse_json(to_json(report));
      },
      "catalog"_a = py::none(), "geometries"_a = std::vector<std::string>{"kp_disk3", "pie5", "pie7"},
      "modes"_a = std::vector<std::string>{"paper"}, "models"_a = std::vector<std::string>{});
  m.def("starter_catalog", [] { return parse_json(catalog_to_json(starter_catalog())); });
}
