#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mzvlab/expr.hpp"
#include "mzvlab/hopf.hpp"
#include "mzvlab/json_io.hpp"
#include "mzvlab/maps.hpp"
#include "mzvlab/qseries.hpp"
#include "mzvlab/suites.hpp"

namespace py = pybind11;
using namespace mzv;

namespace {

using Terms = std::vector<std::pair<std::string, std::string>>;

Rational rat(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw DomainError("invalid rational '" + s + "'");
  }
}

ParseContext ctx(const std::string& alphabet, const std::string& lambda) {
  return {parse_alphabet(alphabet), rat(lambda)};
}

std::string short_name(Alphabet a) {
  switch (a) {
    case Alphabet::H2: return "h";
    case Alphabet::PY: return "H";
    case Alphabet::PDY: return "pdy";
  }
  return "?";
}

Terms terms_of(const Poly& p) {
  Terms out;
  for (const auto& [w, c] : p.terms()) out.emplace_back(Word(p.alphabet(), w).to_string(), to_fraction_string(c));
  return out;
}

ProductKind product_kind(const std::string& name, const std::string& lambda) {
  static const std::map<std::string, ProductTag> tags = {
      {"shuffle", ProductTag::Shuffle},
      {"stuffle", ProductTag::QuasiShuffle},
      {"stuffle_lambda", ProductTag::QuasiShuffleLambda},
      {"shuffle_lambda", ProductTag::ShuffleLambdaPY},
      {"shuffle_lambda_pdy", ProductTag::ShuffleLambdaPDY},
      {"shuffle_star", ProductTag::ShuffleStar},
      {"ooz_stuffle", ProductTag::OOZQuasiShuffle},
      {"ooz_square", ProductTag::OOZSquare},
      {"circ", ProductTag::IharaCirc},
  };
  const auto it = tags.find(name);
  if (it == tags.end()) throw DomainError("unknown product '" + name + "'");
  return {it->second, rat(lambda)};
}

std::vector<std::tuple<std::string, std::string, std::string>> tensor_terms(const Tensor2& t) {
  std::vector<std::tuple<std::string, std::string, std::string>> out;
  for (const auto& [k, c] : t.terms()) {
    out.emplace_back(Word(t.alphabet(), k.first).to_string(), Word(t.alphabet(), k.second).to_string(),
                     to_fraction_string(c));
  }
  return out;
}

std::vector<std::string> coeff_strings(const QPoly& q) {
  std::vector<std::string> out;
  for (const Rational& c : q.coeffs()) out.push_back(to_fraction_string(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "MzvError", PyExc_ValueError);

  py::class_<Poly>(m, "Poly")
      .def(py::init([](const std::string& text, const std::string& alphabet, const std::string& lambda) {
             return parse_expr(text, ctx(alphabet, lambda));
           }),
           py::arg("text"), py::arg("alphabet") = "H", py::arg("lam") = "1")
      .def_property_readonly("alphabet", [](const Poly& p) { return short_name(p.alphabet()); })
      .def("terms", &terms_of)
      .def("is_zero", &Poly::is_zero)
      .def("__len__", &Poly::size)
      .def("format", [](const Poly& p, const std::string& f) {
             if (f == "z") return format_poly(p, WordFormat::Z);
             if (f == "letters") return format_poly(p, WordFormat::Letters);
             return format_poly(p, WordFormat::Auto);
           }, py::arg("style") = "auto")
      .def("to_json", [](const Poly& p) { return poly_to_json(p).dump(); })
      .def("__str__", [](const Poly& p) { return format_poly(p, WordFormat::Letters); })
      .def("__repr__", [](const Poly& p) { return "Poly('" + format_poly(p, WordFormat::Letters) + "')"; })
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("scale", [](const Poly& a, const std::string& c) { return a * rat(c); })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a.alphabet() == b.alphabet() && a == b; })
      .def("weight_part", [](const Poly& p, int w) { return weight_projection(p, w); });

  m.def("product", [](const std::string& name, const Poly& u, const Poly& v, const std::string& lambda) {
    return multiply(product_kind(name, lambda), u, v);
  }, py::arg("name"), py::arg("u"), py::arg("v"), py::arg("lam") = "1");

  m.def("apply_map", [](const std::string& name, const Poly& p) { return named_map(name).apply(p); });
  m.def("map_names", &map_names);

  m.def("coproduct", [](const std::string& kind, const Poly& p) {
    if (kind == "deconcat") return tensor_terms(deconcat(p));
    if (kind == "square-op") return tensor_terms(coproduct_square_op(p));
    if (kind == "infinitesimal") return tensor_terms(infinitesimal_coproduct(p));
    throw DomainError("unknown coproduct '" + kind + "'");
  });
  m.def("antipode", [](const Poly& p, const std::string& lambda) { return antipode(p, rat(lambda)); },
        py::arg("p"), py::arg("lam") = "1");

  m.def("zeta_q", [](const std::string& model, const std::vector<int>& comp, int order) {
    return coeff_strings(zeta_q(parse_model(model), Composition(comp), order));
  });
  m.def("eval_word", [](const std::string& model, const Poly& p, int order) {
    return coeff_strings(eval_word(parse_model(model), p, order));
  });
  m.def("rota_baxter_ooz", [](const std::vector<int>& comp, int order) {
    return coeff_strings(rota_baxter_eval_ooz(Composition(comp), order));
  });
  m.def("zeta_classical", [](const std::vector<int>& comp, long cutoff) {
    const FloatEstimate e = zeta_classical_float(Composition(comp), cutoff);
    return std::make_pair(static_cast<double>(e.value), static_cast<double>(e.error_bound));
  }, py::arg("comp"), py::arg("cutoff") = 100000);

  m.def("suite_names", &suite_names);
  m.def("suite_description", &suite_description);
  m.def("run_suite", [](const std::string& name, int max_weight, int order, int threads) {
    SuiteOptions o;
    o.max_weight = max_weight;
    o.order = order;
    o.threads = threads;
    SuiteReport r;
    {
      py::gil_scoped_release release;
      r = run_suite(name, o);
    }
    return report_to_json(r).dump();
  }, py::arg("name"), py::arg("max_weight") = 5, py::arg("order") = 30, py::arg("threads") = 0);
  m.def("export_vectors", [](const std::string& name, int max_weight, int order) {
    SuiteOptions o;
    o.max_weight = max_weight;
    o.order = order;
    std::ostringstream out;
    export_vectors(name, o, out);
    return out.str();
  }, py::arg("name"), py::arg("max_weight") = 5, py::arg("order") = 30);
}
