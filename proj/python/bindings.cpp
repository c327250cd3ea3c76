#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twistbar/cli.hpp"
#include "twistbar/errors.hpp"
#include "twistbar/homology.hpp"
#include "twistbar/monoid_json.hpp"
#include "twistbar/operad.hpp"
#include "twistbar/ordinal.hpp"
#include "twistbar/simplicial.hpp"

namespace py = pybind11;
using namespace twistbar;

namespace {

MonoidPtr share(const TwistedMonoid& m) { return std::make_shared<const TwistedMonoid>(m); }

py::dict certificate_dict(const Certificate& c) {
  py::dict d;
  d["name"] = c.name;
  d["passed"] = c.passed;
  d["checks"] = c.checks;
  d["level_sizes"] = c.level_sizes;
  d["counterexample"] = c.failure ? py::cast(*c.failure) : py::none();
  return d;
}

py::tuple group_tuple(const AbelianGroup& g) { return py::make_tuple(g.free_rank, g.torsion); }

SetPtr construction(const MonoidPtr& m, const std::string& kind, int truncation) {
  if (kind == "bar") return bar_sigma(m, truncation);
  if (kind == "two-sided") return two_sided_bar(m, truncation);
  if (kind == "fixed") return fixed_subcomplex(edgewise(bar_sigma(m, 2 * truncation + 1), truncation));
  throw DomainError("construction must be bar, fixed or two-sided");
}

}  // namespace

PYBIND11_MODULE(_twistbar, m) {
  m.doc() = "Exact twisted bar constructions of finite twisted monoids";

  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_IndexError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedInput>(m, "UnsupportedInput", PyExc_ValueError);

  py::class_<OrdinalMap>(m, "OrdinalMap")
      .def(py::init<int, std::vector<int>>(), py::arg("codomain_top"), py::arg("values"))
      .def_static("identity", &OrdinalMap::identity)
      .def_static("coface", &OrdinalMap::coface)
      .def_static("codegeneracy", &OrdinalMap::codegeneracy)
      .def_property_readonly("domain_top", &OrdinalMap::domain_top)
      .def_property_readonly("codomain_top", &OrdinalMap::codomain_top)
      .def_property_readonly("values", &OrdinalMap::values)
      .def("conjugate", &OrdinalMap::conjugate)
      .def("__call__", &OrdinalMap::operator())
      .def("__eq__", [](const OrdinalMap& a, const OrdinalMap& b) { return a == b; })
      .def("__repr__", &OrdinalMap::to_string);

  m.def("compose", &compose, py::arg("outer"), py::arg("inner"));
  m.def("factorize", [](const OrdinalMap& a) {
    py::list out;
    for (const auto& op : factorize(a))
      out.append(py::make_tuple(op.kind == ElementaryOp::Kind::Coface ? "delta" : "sigma", op.index, op.codomain_top));
    return out;
  });
  m.def("double_map", &double_map);
  m.def("is_symmetric", &is_symmetric);
  m.def("restrict_half", &restrict_half);
  m.def("zero_elimination", &zero_elimination, py::arg("m"), py::arg("i"));
  m.def("all_ordinal_maps", &all_ordinal_maps);

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<int>>())
      .def_static("identity", &Permutation::identity)
      .def_static("reversal", &Permutation::reversal)
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("image", &Permutation::image)
      .def("inverse", &Permutation::inverse)
      .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
      .def("__repr__", &Permutation::to_string);
  m.def("gamma", [](const Permutation& v, const std::vector<Permutation>& blocks) { return gamma(v, blocks); });
  m.def("involute", &involute);
  m.def("check_equivariance", [](int t, int s) {
    const auto c = check_equivariance(t, s);
    py::dict d;
    d["passed"] = c.passed;
    d["cases"] = c.cases;
    d["counterexample"] = c.counterexample ? py::cast(*c.counterexample) : py::none();
    return d;
  });

  py::class_<TwistedMonoid>(m, "TwistedMonoid")
      .def_static("builtin", &builtin_monoid)
      .def_static("from_json", [](const std::string& text) { return make_monoid(parse_monoid_json(text)); })
      .def("to_json", &monoid_to_json)
      .def_property_readonly("size", &TwistedMonoid::size)
      .def_property_readonly("names", &TwistedMonoid::names)
      .def_property_readonly("unit", &TwistedMonoid::unit)
      .def("mul", &TwistedMonoid::mul)
      .def("tau", &TwistedMonoid::tau)
      .def("id_of", &TwistedMonoid::id_of)
      .def("is_commutative", &TwistedMonoid::is_commutative)
      .def("is_group", &TwistedMonoid::is_group);

  m.def("builtin_names", &builtin_names);
  m.def("validate_json", [](const std::string& text) {
    MonoidTables t = parse_monoid_json(text);
    const auto names = t.names;
    std::vector<std::string> out;
    for (const auto& v : validate(std::move(t)).violations) out.push_back(v.describe(names));
    return out;
  }, "Axiom violations of a monoid document; empty when valid");
  m.def("algebra_eval", [](const TwistedMonoid& a, const Permutation& u, const std::vector<int>& elems) {
    return algebra_eval(a, u, elems);
  });
  m.def("fixed_points", [](const TwistedMonoid& a) { return fixed_points(a).members; });
  m.def("twisted_action", &twisted_action);
  m.def("grothendieck_group", [](const TwistedMonoid& a) { return group_tuple(grothendieck_group(a)); });

  m.def("homology", [](const TwistedMonoid& a, const std::string& kind, int max_degree) {
    py::list out;
    for (const auto& g : homology_of(*construction(share(a), kind, max_degree + 1), max_degree).degrees)
      out.append(group_tuple(g));
    return out;
  }, py::arg("monoid"), py::arg("construction"), py::arg("max_degree"));
  m.def("pi0", [](const TwistedMonoid& a, const std::string& kind) { return pi0(*construction(share(a), kind, 1)); },
        py::arg("monoid"), py::arg("construction"));
  m.def("level_sizes", [](const TwistedMonoid& a, const std::string& kind, int truncation) {
    auto s = construction(share(a), kind, truncation);
    std::vector<std::uint64_t> out;
    for (int n = 0; n <= truncation; ++n) out.push_back(s->level_size(n));
    return out;
  });
  m.def("eta_check", [](const TwistedMonoid& a, int max_level, bool corrupt) {
    return certificate_dict(verify_simplicial_map(corrupt ? corrupted_eta(share(a), max_level) : eta(share(a), max_level)));
  }, py::arg("monoid"), py::arg("max_level"), py::arg("corrupt") = false);
  m.def("twisted_axioms", [](const TwistedMonoid& a, int max_level) {
    return certificate_dict(verify_twisted_axioms(*bar_sigma(share(a), max_level), max_level));
  });
  m.def("diagonal_compare", [](const TwistedMonoid& a, int truncation) {
    return certificate_dict(diagonal_compare(share(a), truncation));
  });

  m.def("smith_invariants", [](const std::vector<std::vector<long>>& rows) {
    py::list out;
    auto builtin_int = py::module_::import("builtins").attr("int");
    for (const auto& d : smith_invariants(IntMatrix::from_rows(rows))) out.append(builtin_int(d.get_str()));
    return out;
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run a CLI command in-process; returns (exit_code, stdout, stderr)");
}
