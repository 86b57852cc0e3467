#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "baileykit/bailey.hpp"
#include "baileykit/cli.hpp"
#include "baileykit/corpus.hpp"
#include "baileykit/errors.hpp"
#include "baileykit/instance.hpp"
#include "baileykit/oracle.hpp"
#include "baileykit/qfunctions.hpp"
#include "baileykit/report.hpp"
#include "baileykit/specializations.hpp"
#include "baileykit/wp_bailey.hpp"

namespace py = pybind11;
using namespace baileykit;

namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

Rational rational_from(const py::handle& h) {
  return parse_rational(py::str(h).cast<std::string>());
}

py::object optional_fraction(const std::optional<Rational>& r) {
  return r ? fraction(*r) : py::none();
}

py::list series_items(const TSeries& f, long upto) {
  py::list out;
  if (f.is_zero()) return out;
  const long hi = std::min(f.max_exp(), upto);
  for (long e = f.valuation(); e <= hi; ++e) {
    const Rational c = f.coeff(e);
    if (c != 0) out.append(py::make_tuple(e, fraction(c)));
  }
  return out;
}

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["id"] = r.instance.id;
  d["instance"] = serialize(r.instance);
  d["order"] = r.instance.order;
  d["status"] = status_name(r.status);
  d["first_mismatch_texp"] = r.first_mismatch_texp ? py::cast(*r.first_mismatch_texp) : py::none();
  d["mismatch_xexp"] = r.mismatch_xexp ? py::cast(*r.mismatch_xexp) : py::none();
  d["lhs_coeff"] = optional_fraction(r.lhs_coeff);
  d["rhs_coeff"] = optional_fraction(r.rhs_coeff);
  d["terms_summed"] = r.terms_summed;
  d["elapsed_ms"] = r.elapsed_ms;
  d["message"] = r.message;
  d["derived"] = r.derived;
  return d;
}

py::dict laurent_dict(const LaurentPolyX& p) {
  py::dict d;
  for (const auto& [x, c] : p.terms()) d[py::int_(x)] = c;
  return d;
}

}  // namespace

PYBIND11_MODULE(_baileykit, m) {
  m.doc() = "Exact truncated q-series and Bailey-pair identity verification";

  py::register_exception<ZeroSeriesInversion>(m, "ZeroSeriesInversion", PyExc_ArithmeticError);
  py::register_exception<FormalDivergence>(m, "FormalDivergence", PyExc_ArithmeticError);
  py::register_exception<UnsupportedShift>(m, "UnsupportedShift", PyExc_ValueError);
  py::register_exception<DegenerateParameter>(m, "DegenerateParameter", PyExc_ValueError);
  py::register_exception<ConstraintViolation>(m, "ConstraintViolation", PyExc_ValueError);
  py::register_exception<UnknownIdentity>(m, "UnknownIdentity", PyExc_KeyError);
  py::register_exception<UnknownParameter>(m, "UnknownParameter", PyExc_KeyError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.attr("EXACT_ORDER") = kExactOrder;

  py::class_<TSeries>(m, "Series",
                      "Truncated Laurent series in t = q^(1/2) with exact rational coefficients.")
      .def(py::init<>())
      .def_static("constant", [](const py::object& c, long order) {
        return TSeries::constant(rational_from(c), order);
      }, py::arg("c"), py::arg("order") = kExactOrder)
      .def_static("monomial", [](const py::object& c, long texp, long order) {
        return TSeries::monomial(rational_from(c), texp, order);
      }, py::arg("c"), py::arg("texp"), py::arg("order") = kExactOrder)
      .def_property_readonly("order", &TSeries::order)
      .def_property_readonly("valuation", &TSeries::valuation)
      .def_property_readonly("is_exact", &TSeries::is_exact)
      .def_property_readonly("is_zero", &TSeries::is_zero)
      .def("coeff", [](const TSeries& f, long e) { return fraction(f.coeff(e)); }, py::arg("texp"))
      .def("items", [](const TSeries& f) { return series_items(f, f.order()); },
           "Nonzero (t-exponent, coefficient) pairs of the stored range.")
      .def("truncated", &TSeries::truncated, py::arg("order"))
      .def("inverse", [](const TSeries& f, long cap) { return series_inv(f, cap); },
           py::arg("max_order") = kExactOrder)
      .def("scale_base", [](const TSeries& f, long k, long order) {
        return series_scale_base(f, k, order);
      }, py::arg("k"), py::arg("order") = kExactOrder)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("__str__", &TSeries::to_string)
      .def("__repr__", [](const TSeries& f) { return "Series(" + f.to_string() + ")"; });

  py::class_<Monomial>(m, "Monomial", "c * t^texp, zero, or the marker for a parameter at infinity.")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return parse_value(text); }), py::arg("text"))
      .def(py::init([](long c) { return Monomial::constant(c); }), py::arg("c"))
      .def(py::init([](const py::object& c, long texp) { return Monomial(rational_from(c), texp); }),
           py::arg("c"), py::arg("texp"))
      .def_static("infinity", &Monomial::infinity)
      .def_property_readonly("coeff", [](const Monomial& x) { return fraction(x.coeff()); })
      .def_property_readonly("texp", &Monomial::texp)
      .def_property_readonly("is_infinite", &Monomial::is_infinite)
      .def("to_series", &Monomial::to_series, py::arg("order") = kExactOrder)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(py::self == py::self)
      .def("__str__", &Monomial::to_string)
      .def("__repr__", [](const Monomial& x) { return "Monomial('" + x.to_string() + "')"; });
  py::implicitly_convertible<py::str, Monomial>();
  py::implicitly_convertible<py::int_, Monomial>();

  m.def("poch", py::overload_cast<const Monomial&, long, long, int>(&poch), py::arg("a"),
        py::arg("k"), py::arg("order"), py::arg("base_texp") = 2,
        "(a; t^base_texp)_k for any integer k.");
  m.def("poch_inf", py::overload_cast<const Monomial&, long, int>(&poch_inf), py::arg("a"),
        py::arg("order"), py::arg("base_texp") = 2);
  m.def("qbinom", &qbinom, py::arg("n"), py::arg("k"), py::arg("base_texp") = 2);
  m.def("triple_product", &triple_product, py::arg("z"), py::arg("modulus_texp"), py::arg("order"));
  m.def("sum_unilateral", [](const std::function<TSeries(long)>& term, long lo, long hi, long order) {
    SumWindow w;
    w.lo = lo;
    w.hi = hi;
    return sum_unilateral(term, w, order);
  }, py::arg("term"), py::arg("lo"), py::arg("hi"), py::arg("order"));
  m.def("pentagonal_expansion", &pentagonal_expansion, py::arg("order"));
  m.def("count_partitions", [](const std::function<bool(long)>& allowed, long n_max,
                               std::optional<long> min_difference) {
    py::list out;
    for (const auto& c : count_partitions({allowed, min_difference}, n_max)) {
      out.append(py::int_(py::str(c.get_str())));
    }
    return out;
  }, py::arg("allowed"), py::arg("n_max"), py::arg("min_difference") = py::none());

  py::class_<RelationCheck>(m, "RelationCheck")
      .def_readonly("passed", &RelationCheck::pass)
      .def_readonly("first_bad_n", &RelationCheck::first_bad_n)
      .def_readonly("first_bad_texp", &RelationCheck::first_bad_texp)
      .def_readonly("singular", &RelationCheck::singular)
      .def_readonly("non_unique", &RelationCheck::non_unique)
      .def("__bool__", [](const RelationCheck& r) { return r.pass; })
      .def("__str__", &RelationCheck::to_string);

  py::class_<BaileyPair>(m, "BaileyPair")
      .def_readonly("m", &BaileyPair::m)
      .def_readonly("base_texp", &BaileyPair::base_texp)
      .def_readonly("label", &BaileyPair::label)
      .def("alpha", [](const BaileyPair& p, long n, long order) { return p.alpha(n, order); },
           py::arg("n"), py::arg("order"))
      .def("beta", [](const BaileyPair& p, long n, long order) { return p.beta(n, order); },
           py::arg("n"), py::arg("order"));
  m.def("shifted_pair", &shifted_pair, py::arg("m"), py::arg("base_texp") = 2);
  m.def("unit_pair", &unit_pair, py::arg("m"));
  m.def("check_pair", &check_pair, py::arg("pair"), py::arg("n_lo"), py::arg("n_hi"), py::arg("order"),
        py::call_guard<py::gil_scoped_release>());
  m.def("apply_lemma", &apply_lemma, py::arg("pair"), py::arg("rho1"), py::arg("rho2"));
  m.def("apply_s1", &apply_s1, py::arg("pair"));
  m.def("apply_s2", &apply_s2, py::arg("pair"));
  m.def("scale_pair_base", &scale_pair_base, py::arg("pair"), py::arg("k"));
  m.def("change_base", &change_base, py::arg("pair"), py::arg("b"));

  py::class_<WPBaileyPair>(m, "WPBaileyPair")
      .def_readonly("label", &WPBaileyPair::label)
      .def_readonly("a", &WPBaileyPair::a)
      .def_readonly("alpha_param", &WPBaileyPair::alpha_param)
      .def("alpha", [](const WPBaileyPair& p, long n, long order) { return p.alpha(n, order); },
           py::arg("n"), py::arg("order"))
      .def("beta", [](const WPBaileyPair& p, long n, long order) { return p.beta(n, order); },
           py::arg("n"), py::arg("order"));
  m.def("wp_unit_pair", &wp_unit_pair, py::arg("m"), py::arg("alpha"),
        py::arg("a") = default_wp_unit_a());
  m.def("wp_shifted_pair", &wp_shifted_pair, py::arg("m"), py::arg("alpha"));
  m.def("check_wp_pair", &check_wp_pair, py::arg("pair"), py::arg("n_lo"), py::arg("n_hi"),
        py::arg("order"), py::call_guard<py::gil_scoped_release>());
  m.def("wp_inversion_check", &wp_inversion_check, py::arg("pair"), py::arg("n_lo"),
        py::arg("n_hi"), py::arg("order"), py::call_guard<py::gil_scoped_release>());

  m.def("identities", [] {
    py::list out;
    for (const auto& def : corpus()) {
      py::dict d;
      d["id"] = def.id;
      d["title"] = def.title;
      d["kind"] = kind_name(def.kind);
      d["constraints"] = def.constraints;
      py::dict params;
      for (const auto& p : def.params) params[py::str(p.name)] = p.default_value;
      d["params"] = params;
      out.append(d);
    }
    return out;
  }, "The identity corpus with parameter defaults in instance syntax.");
  m.def("default_order", &default_order);
  m.def("canonical_instance", [](const std::string& line) { return serialize(parse_instance(line)); },
        py::arg("line"));
  m.def("verify", [](const std::string& line) {
    const IdentityInstance inst = parse_instance(line);
    VerificationReport r;
    {
      py::gil_scoped_release release;
      r = verify(inst);
    }
    return report_dict(r);
  }, py::arg("line"), "Verifies one instance line such as \"KMRR k=2 m=1 order=40\".");
  m.def("build_sides", [](const std::string& line) -> py::object {
    const IdentityInstance inst = parse_instance(line);
    Sides s;
    {
      py::gil_scoped_release release;
      s = build_sides(inst);
    }
    if (s.kind == IdentityKind::Bivariate) {
      return py::make_tuple(laurent_dict(s.lhs_x), laurent_dict(s.rhs_x));
    }
    return py::make_tuple(s.lhs, s.rhs);
  }, py::arg("line"),
     "Both sides of an instance: two Series, or two {x-exponent: Series} dicts for bivariate rows.");
  m.def("report_json", [](const std::vector<std::string>& lines) {
    std::vector<VerificationReport> reports;
    for (const auto& l : lines) reports.push_back(verify(parse_instance(l)));
    return reports_json(reports);
  }, py::arg("lines"), py::call_guard<py::gil_scoped_release>());
  m.def("degeneration_suite", [](long order) {
    py::list out;
    for (const auto& r : degeneration_suite(order)) out.append(py::make_tuple(r.name, r.pass, r.detail));
    return out;
  }, py::arg("order") = 50);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
      py::gil_scoped_release release;
      code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line tool in-process; returns (exit code, stdout, stderr).");
}
