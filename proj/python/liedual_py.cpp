#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "liedual/branching.hpp"
#include "liedual/errors.hpp"
#include "liedual/minrep.hpp"
#include "liedual/theta.hpp"

namespace py = pybind11;
using namespace liedual;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.numerator(), r.denominator());
}

py::int_ big_int(const BigInt& v) { return py::int_(py::str(v.str())); }

py::list terms(const FormalCharacter& c) {
  py::list out;
  for (const auto& [w, m] : c.terms) out.append(py::make_tuple(format_weight(c.group, w), m));
  return out;
}

py::dict report_dict(const Report& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["name"] = c.name;
    d["status"] = c.pass ? "PASS" : "FAIL";
    d["expected"] = c.expected;
    d["actual"] = c.actual;
    checks.append(d);
  }
  py::dict out;
  out["summary"] = r.summary();
  out["ok"] = r.ok();
  out["checks"] = checks;
  out["notes"] = r.notes;
  return out;
}

GroupSpec without_circles(GroupSpec g) {
  g.circles = 0;
  return g;
}

}  // namespace

PYBIND11_MODULE(_liedual, m) {
  m.doc() = "Exact weight, branching and K-type computations";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<NegativeMultiplicity>(m, "NegativeMultiplicity", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NotCovered>(m, "NotCovered", PyExc_LookupError);

  m.def(
      "dimension",
      [](const std::string& group, const std::string& weight) {
        const auto g = GroupSpec::parse(group);
        return big_int(dimension(g, make_weight(g, parse_weight(g, weight, true), true)));
      },
      py::arg("group"), py::arg("weight"), "Weyl dimension of the irreducible with the given highest weight.");

  m.def("rule_ids", &rule_ids, "Names of the closed-form branching rules.");
  m.def("embeddings", [] {
    std::vector<std::string> names;
    for (const auto& e : embedding_catalog()) names.push_back(e.name);
    return names;
  });

  m.def(
      "branch",
      [](const std::string& rule, const std::vector<std::string>& params, std::optional<std::int64_t> charge,
         bool generic) {
        std::vector<Rational> args;
        for (const auto& p : params) args.push_back(parse_rational(p));
        const auto ev = evaluate_rule(rule, args, charge, generic);
        py::dict out;
        out["source"] = format_weight(ev.source_group, ev.source);
        out["terms"] = terms(ev.closed);
        if (ev.generic) {
          out["generic"] = terms(*ev.generic);
          out["match"] = *ev.generic == ev.closed;
        }
        return out;
      },
      py::arg("rule"), py::arg("params"), py::arg("charge") = py::none(), py::arg("generic") = false,
      "Closed-form branching rule; with generic=True also the generic restriction.");

  m.def(
      "restrict",
      [](const std::string& name, const std::string& weight) {
        const auto& e = embedding(name);
        return terms(restrict_generic(e, parse_weight(e.big, weight, true)).decomposition);
      },
      py::arg("embedding"), py::arg("weight"), "Generic restriction along a catalog embedding.");

  m.def(
      "multiplicity_series",
      [](const std::string& case_name, const std::string& type, std::optional<std::string> charge, int max_level) {
        const auto c = parse_dualpair_case(case_name);
        const auto t = parse_weight(without_circles(case_group(c)), type, true);
        std::optional<Rational> q;
        if (charge) q = parse_rational(*charge);
        const auto s = multiplicity_series(c, t, q, max_level);
        const auto v = verify_growth(s);
        py::dict out;
        out["target"] = s.target;
        out["values"] = s.values;
        out["first_level"] = s.first_level ? py::object(py::int_(*s.first_level)) : py::object(py::none());
        out["stabilized"] = s.stabilized;
        out["onset"] = s.onset;
        out["growth_accepted"] = v.accepted;
        return out;
      },
      py::arg("case"), py::arg("type"), py::arg("charge") = py::none(), py::arg("max_level") = 12);

  m.def(
      "sign_first_appearance",
      [](const std::string& case_name, const std::string& type, int max_level) {
        const auto c = parse_dualpair_case(case_name);
        const auto t = parse_weight(without_circles(case_group(c)), type, true);
        const auto s = sign_first_appearance(c, t, max_level);
        return py::make_tuple(to_string(s.tag), s.first_level);
      },
      py::arg("case"), py::arg("type"), py::arg("max_level") = 12,
      "Returns (tag, first_level) with tag 'rho1' or 'epsilon'.");

  m.def(
      "infchar_lift",
      [](const std::string& a, const std::string& b, const std::string& c) {
        const auto lift = infchar_lift(make_torus_data(parse_rational(a), parse_rational(b), parse_rational(c)));
        py::list out;
        for (const auto& x : lift.rep) out.append(fraction(x));
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"), "D4 infinitesimal character attached to a sum-zero triple.");

  m.def(
      "verify",
      [](const std::string& suite, std::optional<std::string> fixtures) -> py::dict {
        Report r;
        {
          py::gil_scoped_release release;
          if (suite == "tables") {
            if (!fixtures) throw InputError("the tables suite needs a fixtures directory");
            for (auto k : {TableKind::Split, TableKind::Quasisplit})
              r.append(verify_table(load_table(fixture_path(*fixtures, k), k)));
          } else if (suite == "rules") {
            for (const auto& id : rule_ids()) r.append(verify_rule(id));
          } else if (suite == "split-mult") {
            r = verify_split_multiplicity();
          } else if (suite == "infchar") {
            r = verify_infchar();
          } else if (suite == "quasisplit-mult") {
            r = compare_ps_vs_stabilized();
          } else if (suite == "signs") {
            r = verify_sign_rules();
          } else {
            throw InputError("unknown suite '" + suite + "'");
          }
        }
        return report_dict(r);
      },
      py::arg("suite"), py::arg("fixtures") = py::none(), "Runs a verification suite and returns its report.");
}
