#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "socialchoice/dominance.hpp"
#include "socialchoice/fixtures.hpp"
#include "socialchoice/process.hpp"
#include "socialchoice/properties.hpp"
#include "socialchoice/rules.hpp"

namespace py = pybind11;
using namespace socialchoice;

namespace {

py::object fraction(const Rational& value) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(to_string(value));
}

RuleOptions make_options(const std::optional<std::vector<std::string>>& weights,
                         const std::string& minimax_convention) {
  RuleOptions options;
  if (weights) {
    WeightsVector w;
    for (const auto& token : *weights) w.push_back(parse_rational(token));
    options.weights = std::move(w);
  }
  if (minimax_convention == "winning-votes") {
    options.minimax_convention = MinimaxConvention::WinningVotes;
  } else if (minimax_convention != "margin") {
    throw std::invalid_argument("minimax convention must be 'margin' or 'winning-votes'");
  }
  return options;
}

py::object violation_to_py(const std::optional<Violation>& violation) {
  if (!violation) return py::none();
  py::dict out;
  out["property"] = violation->property;
  out["rule"] = violation->rule;
  out["witness"] = violation->witness_a.empty()
                       ? py::object(py::none())
                       : py::make_tuple(violation->witness_a, violation->witness_b);
  out["subset"] = violation->subset;
  out["record"] = violation->to_record();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact social choice engine: profiles, dominance relations, voting rules, "
            "permutation processes and property checks";

  py::class_<Ranking>(m, "Ranking")
      .def(py::init([](const std::string& text) { return Ranking::parse(text); }))
      .def("position", &Ranking::position, py::arg("alternative"))
      .def_property_readonly("order", &Ranking::order)
      .def("__str__", &Ranking::to_string)
      .def("__repr__", [](const Ranking& r) { return "Ranking('" + r.to_string() + "')"; })
      .def("__eq__", [](const Ranking& a, const Ranking& b) { return a == b; });

  py::class_<Profile>(m, "Profile")
      .def_property_readonly("alternatives", &Profile::sorted_alternatives)
      .def_property_readonly("total_weight",
                             [](const Profile& p) { return fraction(p.total_weight()); })
      .def_property_readonly("entries",
                             [](const Profile& p) {
                               py::dict out;
                               for (const auto& [ranking, weight] : p.entries()) {
                                 out[py::str(ranking.to_string())] = fraction(weight);
                               }
                               return out;
                             })
      .def("restrict", &Profile::restrict, py::arg("subset"))
      .def("to_ballot_text", &Profile::to_ballot_text)
      .def("__eq__", [](const Profile& a, const Profile& b) { return a == b; })
      .def("__repr__", [](const Profile& p) {
        return "Profile(" + std::to_string(p.entries().size()) + " rankings, total " +
               to_string(p.total_weight()) + ")";
      });

  m.def("parse_profile", [](const std::string& text) { return parse_profile(text); },
        py::arg("text"));
  m.def("support",
        [](const Profile& p, const std::string& a, const std::string& b) {
          return fraction(MarginMatrix(p).support(a, b));
        },
        py::arg("profile"), py::arg("a"), py::arg("b"),
        "ranking mass placing a above b");
  m.def("positional_cumulative",
        [](const Profile& p, std::size_t j, const std::string& a) {
          return fraction(PositionalTally(p).cumulative(j, a));
        },
        py::arg("profile"), py::arg("position"), py::arg("a"),
        "ranking mass placing a at the given position or better");

  py::class_<DominanceRelation>(m, "DominanceRelation")
      .def("holds", &DominanceRelation::holds, py::arg("a"), py::arg("b"))
      .def("strict", &DominanceRelation::strict, py::arg("a"), py::arg("b"))
      .def_property_readonly("alternatives", &DominanceRelation::alternatives)
      .def("complete", &DominanceRelation::complete)
      .def("transitive", &DominanceRelation::transitive)
      .def("maximal_set", &DominanceRelation::maximal_set)
      .def("__str__", &DominanceRelation::to_adjacency_text);

  m.def("pm_dominates", &pm_dominates, py::arg("profile"), py::arg("a"), py::arg("b"));
  m.def("pos_dominates", &pos_dominates, py::arg("profile"), py::arg("a"), py::arg("b"));
  m.def("pm_relation", &pm_relation, py::arg("profile"));
  m.def("pos_relation", &pos_relation, py::arg("profile"));
  m.def("is_total_preorder", &is_total_preorder, py::arg("relation"));
  m.def("has_condorcet_cycle", &has_condorcet_cycle, py::arg("profile"));
  m.def("schwartz_set", &schwartz_set, py::arg("profile"));
  m.def("schwartz_set_bruteforce", &schwartz_set_bruteforce, py::arg("profile"));

  m.def("rule_names", [] {
    std::vector<std::string> names;
    for (const auto& d : rule_registry()) names.push_back(d.name);
    return names;
  });
  m.def("winners",
        [](const std::string& rule, const Profile& profile,
           const std::optional<std::vector<std::string>>& weights,
           const std::string& minimax_convention) {
          return apply_rule(rule, profile, make_options(weights, minimax_convention));
        },
        py::arg("rule"), py::arg("profile"), py::arg("weights") = py::none(),
        py::arg("minimax_convention") = "margin");
  m.def("weak_condorcet_winners", &weak_condorcet_winners, py::arg("profile"));

  m.def("plackett_luce_exact",
        [](const std::string& spec_json, const std::vector<Alternative>& alternatives) {
          return plackett_luce_exact(ProcessSpec::from_json(spec_json), alternatives);
        },
        py::arg("spec_json"), py::arg("alternatives"));
  m.def("sample_profile",
        [](const std::string& spec_json, const std::vector<Alternative>& alternatives,
           long samples, std::uint64_t seed) {
          return sample_profile(ProcessSpec::from_json(spec_json), alternatives, samples, seed);
        },
        py::arg("spec_json"), py::arg("alternatives"), py::arg("samples"), py::arg("seed"));
  m.def("param_dominates",
        [](const std::string& spec_json, const std::string& a, const std::string& b) {
          return param_dominates(ProcessSpec::from_json(spec_json), a, b);
        },
        py::arg("spec_json"), py::arg("a"), py::arg("b"));
  m.def("density_swap_check",
        [](const std::string& spec_json, const std::string& a, const std::string& b,
           const std::vector<std::pair<double, double>>& grid) {
          return density_swap_check(ProcessSpec::from_json(spec_json), a, b, grid);
        },
        py::arg("spec_json"), py::arg("a"), py::arg("b"), py::arg("grid"));
  m.def("default_density_grid",
        [](const std::string& spec_json, const std::string& a, const std::string& b) {
          return default_density_grid(ProcessSpec::from_json(spec_json), a, b);
        },
        py::arg("spec_json"), py::arg("a"), py::arg("b"));
  m.def("process_dominance",
        [](const std::string& spec_json, const std::vector<Alternative>& alternatives,
           const std::string& a, const std::string& b, long samples, std::uint64_t seed) {
          auto report = process_dominance_in_profiles(ProcessSpec::from_json(spec_json),
                                                      alternatives, a, b, samples, seed);
          py::dict out;
          out["exact"] = report.exact;
          out["pm_holds"] = report.pm_holds;
          out["pos_holds"] = report.pos_holds;
          out["above_share"] = report.above_share;
          out["tie_share"] = report.tie_share;
          out["std_error"] = report.std_error;
          out["inconclusive"] = report.inconclusive;
          return out;
        },
        py::arg("spec_json"), py::arg("alternatives"), py::arg("a"), py::arg("b"),
        py::arg("samples") = 0, py::arg("seed") = 0);

  m.def("check_efficiency",
        [](const std::string& property, const std::string& rule, const Profile& profile,
           const std::optional<std::vector<std::string>>& weights,
           const std::string& minimax_convention) {
          return violation_to_py(check_efficiency(
              property_from_name(property),
              bind_rule(rule, make_options(weights, minimax_convention)), profile));
        },
        py::arg("property"), py::arg("rule"), py::arg("profile"), py::arg("weights") = py::none(),
        py::arg("minimax_convention") = "margin",
        "None on pass, otherwise a violation dict");
  m.def("exhaustive_search",
        [](const std::string& property, const std::string& rule, int n_alternatives,
           int max_voters, const std::optional<std::vector<std::string>>& weights) {
          return violation_to_py(exhaustive_search(bind_rule(rule, make_options(weights, "margin")),
                                                   property_from_name(property), n_alternatives,
                                                   max_voters));
        },
        py::arg("property"), py::arg("rule"), py::arg("n_alternatives"), py::arg("max_voters"),
        py::arg("weights") = py::none());
  m.def("check_stability",
        [](const std::string& rule, const std::string& spec_json,
           const std::vector<Alternative>& alternatives,
           const std::vector<std::vector<Alternative>>& subsets, long samples, std::uint64_t seed,
           const std::optional<std::vector<std::string>>& weights) {
          return violation_to_py(check_stability(bind_rule(rule, make_options(weights, "margin")),
                                                 ProcessSpec::from_json(spec_json), alternatives,
                                                 subsets, samples, seed));
        },
        py::arg("rule"), py::arg("spec_json"), py::arg("alternatives"), py::arg("subsets"),
        py::arg("samples") = 0, py::arg("seed") = 0, py::arg("weights") = py::none());
  m.def("check_compatibility",
        [](const std::string& spec_json, const std::vector<Alternative>& alternatives,
           long samples, std::uint64_t seed) {
          auto report =
              check_compatibility(ProcessSpec::from_json(spec_json), alternatives, samples, seed);
          py::dict out;
          out["pm_compatible"] = report.pm_compatible;
          out["pos_compatible"] = report.pos_compatible;
          out["pm_strong"] = report.pm_strong;
          out["pos_strong"] = report.pos_strong;
          out["pm_order"] = report.pm_order;
          out["pos_order"] = report.pos_order;
          out["notes"] = report.notes;
          return out;
        },
        py::arg("spec_json"), py::arg("alternatives"), py::arg("samples") = 0,
        py::arg("seed") = 0);

  m.def("fixture_names", [] {
    std::vector<std::string> names;
    for (const auto& [name, text] : fixture_texts()) names.push_back(name);
    return names;
  });
  m.def("fixture", &fixture, py::arg("name"));
}
