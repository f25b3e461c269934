#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pdef/coxeter.hpp"
#include "pdef/descent.hpp"
#include "pdef/error.hpp"
#include "pdef/fox.hpp"
#include "pdef/gs.hpp"
#include "pdef/magnus.hpp"
#include "pdef/rewriting.hpp"

namespace py = pybind11;
using namespace pdef;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::object fraction(const ExtendedRational& q) {
  if (q.is_negative_infinity()) return py::float_(-INFINITY);
  return fraction(q.value());
}

Rational rational(const py::handle& h) {
  return parse_rational(py::str(h).cast<std::string>());
}

py::dict verdict(const NegativityVerdict& v) {
  py::dict d;
  if (const auto* w = std::get_if<Witness>(&v)) {
    d["verdict"] = "witness";
    d["t"] = fraction(w->t);
    d["value"] = fraction(w->value);
  } else if (const auto* n = std::get_if<NonNegative>(&v)) {
    d["verdict"] = "nonnegative";
    d["kind"] = std::string(to_string(n->kind));
    d["a"] = fraction(n->a);
    d["b"] = fraction(n->b);
  } else {
    d["verdict"] = "inconclusive";
    d["reason"] = std::get<Inconclusive>(v).reason;
  }
  return d;
}

CpHom make_hom(const Presentation& p, std::uint64_t prime,
               const std::vector<std::int64_t>& values) {
  if (values.size() != p.rank()) {
    throw Error(ErrorCode::InvalidArgument, "one value per generator expected");
  }
  CpHom h{prime, {}};
  for (auto v : values) h.values.push_back(mod_reduce(v, prime));
  return h;
}

}  // namespace

PYBIND11_MODULE(_pdef, m) {
  m.doc() = "Exact p-deficiency, Puchta rewriting and Golod-Shafarevich checks";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result(
      [&]() { return py::exception<Error>(m, "PdefError", PyExc_ValueError); });
  py::register_exception_translator([](std::exception_ptr ptr) {
    try {
      if (ptr) std::rethrow_exception(ptr);
    } catch (const Error& e) {
      py::set_error(error.get_stored(),
                    (std::string(to_string(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<Presentation>(m, "Presentation")
      .def(py::init([](const std::string& text) { return parse_presentation(text); }),
           py::arg("text"))
      .def_property_readonly("generators",
                             [](const Presentation& p) { return p.alphabet().names(); })
      .def_property_readonly("relators",
                             [](const Presentation& p) {
                               std::vector<std::string> out;
                               for (const auto& r : p.relators()) {
                                 out.push_back(format_word(r.word(), p.alphabet()));
                               }
                               return out;
                             })
      .def_property_readonly("rank", &Presentation::rank)
      .def("deficiency", [](const Presentation& p) { return fraction(deficiency(p)); })
      .def("p_deficiency",
           [](const Presentation& p, std::uint64_t prime) {
             return fraction(p_deficiency(p, prime));
           },
           py::arg("p"))
      .def("p_rank", [](const Presentation& p, std::uint64_t prime) { return p_rank(p, prime); },
           py::arg("p"))
      .def("hom_basis",
           [](const Presentation& p, std::uint64_t prime) {
             std::vector<std::vector<std::uint64_t>> out;
             for (const auto& h : hom_to_Cp_basis(p, prime)) out.push_back(h.values);
             return out;
           },
           py::arg("p"))
      .def("__str__", &format_presentation)
      .def("__repr__",
           [](const Presentation& p) { return "Presentation('" + format_presentation(p) + "')"; })
      .def("__eq__", [](const Presentation& a, const Presentation& b) { return a == b; });

  m.def("analyze", [](const Presentation& p, std::uint64_t prime) {
    const auto a = analyze(p, prime);
    py::dict d;
    d["prime"] = a.prime;
    d["def"] = fraction(a.def);
    d["def_p"] = fraction(a.def_p);
    d["d_p"] = a.d_p.get_ui();
    d["is_puchta"] = a.is_puchta;
    d["p_large_obstruction"] = a.p_large_obstruction;
    d["infinite_certificate"] = a.infinite_certificate;
    return d;
  }, py::arg("presentation"), py::arg("p"));

  m.def("nu_p", [](const std::string& word, const std::vector<std::string>& names,
                   std::uint64_t prime) {
    return nu_p(parse_word(word, Alphabet(names)), prime);
  }, py::arg("word"), py::arg("generators"), py::arg("p"));

  m.def("zassenhaus_degree", [](const std::string& word, const std::vector<std::string>& names,
                                std::uint64_t prime, std::size_t bound) {
    const auto d = zassenhaus_degree(parse_word(word, Alphabet(names)), prime, bound);
    return py::make_tuple(d.value, d.exact);
  }, py::arg("word"), py::arg("generators"), py::arg("p"), py::arg("bound") = 32);

  m.def("puchta_rewrite", [](const Presentation& p, std::uint64_t prime,
                             const std::vector<std::int64_t>& theta) {
    return puchta_rewrite(p, make_hom(p, prime, theta)).presentation;
  }, py::arg("presentation"), py::arg("p"), py::arg("theta"));

  m.def("reidemeister_schreier", [](const Presentation& p, std::uint64_t prime,
                                    const std::vector<std::int64_t>& theta) {
    return reidemeister_schreier_cyclic(p, make_hom(p, prime, theta)).presentation;
  }, py::arg("presentation"), py::arg("p"), py::arg("theta"));

  m.def("gs_verdict", [](const Presentation& p, std::uint64_t prime, std::size_t max_degree) {
    auto f = gs_function(p, prime, max_degree);
    py::dict d = verdict(decide_negativity(f));
    d["function"] = to_string(f);
    return d;
  }, py::arg("presentation"), py::arg("p"), py::arg("max_degree") = 32);

  m.def("puchta_verdict", [](const Presentation& p, std::uint64_t prime) {
    py::dict d = verdict(puchta_route(p, prime));
    d["function"] = to_string(puchta_function(p, prime));
    return d;
  }, py::arg("presentation"), py::arg("p"));

  m.def("exceptional", [](std::uint64_t pmax) {
    py::list out;
    for (const auto& b : enumerate_exceptional(pmax)) {
      py::dict d;
      d["prime"] = b.prime;
      d["oracle"] = b.oracle;
      d["printed"] = b.printed;
      d["warning"] = b.warning;
      out.append(d);
    }
    return out;
  }, py::arg("pmax") = 13);

  m.def("gs_subgroup_index", [](std::uint64_t p, const py::object& e) {
    return gs_subgroup_index(p, rational(e));
  }, py::arg("p"), py::arg("excess"));

  m.def("descent_symbolic", [](const py::object& start, std::uint64_t prime, std::size_t steps) {
    const auto c = build_descent_symbolic(rational(start), prime, steps);
    py::list rows;
    for (const auto& s : c.steps) {
      py::dict r;
      r["phase"] = std::string(to_string(s.phase));
      r["index_log_p"] = to_string(s.index_log_p);
      r["def_p"] = s.def_p ? fraction(*s.def_p) : py::none();
      r["ratio"] = s.ratio ? fraction(*s.ratio) : py::none();
      rows.append(r);
    }
    return rows;
  }, py::arg("def_p"), py::arg("p"), py::arg("steps"));

  m.def("descent_explicit", [](const Presentation& p, std::uint64_t prime, std::size_t steps) {
    const auto c = build_descent_explicit(p, prime, steps);
    py::list defs;
    for (const auto& s : c.steps) defs.append(fraction(*s.def_p));
    return defs;
  }, py::arg("presentation"), py::arg("p"), py::arg("steps"));

  m.def("s_n_p", &s_n_p, py::arg("n"), py::arg("p"));
  m.def("gupta_sidki_approx", &gupta_sidki_approx, py::arg("p"));
  m.def("problem_group", &problem_group, py::arg("p"));
  m.def("p_coxeter_subgroup", [](const std::string& labels, std::uint64_t prime) {
    return p_coxeter_subgroup(CoxeterMatrix::parse(labels), prime);
  }, py::arg("labels"), py::arg("p"));

  m.def("alexander_poly_mod_p", [](const Presentation& p, const std::vector<std::int64_t>& chi,
                                   std::uint64_t prime) {
    const auto a = alexander_poly_mod_p(p, ZHom{chi}, prime);
    return py::make_tuple(to_string(a.delta), a.vanishes);
  }, py::arg("presentation"), py::arg("chi"), py::arg("p"));
}
