#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "socialchoice/dominance.hpp"
#include "socialchoice/fixtures.hpp"
#include "socialchoice/process.hpp"
#include "socialchoice/properties.hpp"
#include "socialchoice/rules.hpp"

namespace {

using namespace socialchoice;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, sep)) parts.push_back(token);
  return parts;
}

std::string join(const std::vector<Alternative>& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ' ';
    out += set[i];
  }
  return out;
}

MinimaxConvention convention_from(const std::string& name) {
  if (name == "margin") return MinimaxConvention::Margins;
  if (name == "winning-votes") return MinimaxConvention::WinningVotes;
  throw std::invalid_argument("unknown minimax convention: '" + name + "'");
}

struct CommonRuleArgs {
  std::string rule;
  std::string weights;
  std::string minimax_convention = "margin";

  RuleOptions options() const {
    RuleOptions o;
    if (!weights.empty()) o.weights = parse_weights(weights);
    o.minimax_convention = convention_from(minimax_convention);
    return o;
  }
};

void add_rule_options(CLI::App* cmd, CommonRuleArgs& args) {
  cmd->add_option("--rule", args.rule, "rule name from the registry")->required();
  cmd->add_option("--weights", args.weights, "comma-separated scoring weights");
  cmd->add_option("--minimax-convention", args.minimax_convention,
                  "margin or winning-votes (minimax only)");
}

int run(int argc, char** argv) {
  CLI::App app{"exact social choice engine: rules, dominance relations, "
               "permutation processes and property checks"};
  app.require_subcommand(1);
  int exit_code = 0;

  // winners
  auto* winners_cmd = app.add_subcommand("winners", "evaluate a rule on a ballot file");
  CommonRuleArgs winners_args;
  std::string winners_profile, winners_format = "table";
  add_rule_options(winners_cmd, winners_args);
  winners_cmd->add_option("--profile", winners_profile, "ballot file")->required();
  winners_cmd->add_option("--format", winners_format, "table or records");
  winners_cmd->callback([&] {
    Profile profile = parse_profile(read_file(winners_profile));
    BoundRule rule = bind_rule(winners_args.rule, winners_args.options());
    WinnerSet winners = rule(profile);
    if (winners_format == "records") {
      std::cout << "record: winners\n";
      std::cout << "rule: " << rule.name << '\n';
      std::cout << "profile: " << winners_profile << '\n';
    } else {
      std::cout << "rule: " << rule.name << '\n';
    }
    std::cout << "winners: " << join(winners) << '\n';
  });

  // dominance
  auto* dominance_cmd = app.add_subcommand("dominance", "dominance relation of a profile");
  std::string dom_kind, dom_profile, dom_pair;
  dominance_cmd->add_option("--kind", dom_kind, "pm or pos")->required();
  dominance_cmd->add_option("--profile", dom_profile, "ballot file")->required();
  dominance_cmd->add_option("--pair", dom_pair, "single query 'a,b'");
  dominance_cmd->callback([&] {
    if (dom_kind != "pm" && dom_kind != "pos") {
      throw std::invalid_argument("unknown dominance kind: '" + dom_kind + "'");
    }
    Profile profile = parse_profile(read_file(dom_profile));
    std::cout << "kind: " << dom_kind << '\n';
    if (!dom_pair.empty()) {
      auto parts = split(dom_pair, ',');
      if (parts.size() != 2) throw std::invalid_argument("--pair needs exactly 'a,b'");
      bool holds = dom_kind == "pm" ? pm_dominates(profile, parts[0], parts[1])
                                    : pos_dominates(profile, parts[0], parts[1]);
      std::cout << "pair: " << parts[0] << ',' << parts[1] << '\n';
      std::cout << "dominates: " << (holds ? "yes" : "no") << '\n';
    } else {
      DominanceRelation relation =
          dom_kind == "pm" ? pm_relation(profile) : pos_relation(profile);
      std::cout << "relation:\n" << relation.to_adjacency_text();
    }
  });

  // schwartz
  auto* schwartz_cmd = app.add_subcommand("schwartz", "schwartz set of a profile");
  std::string schwartz_profile;
  schwartz_cmd->add_option("--profile", schwartz_profile, "ballot file")->required();
  schwartz_cmd->callback([&] {
    Profile profile = parse_profile(read_file(schwartz_profile));
    std::cout << "schwartz: " << join(schwartz_set(profile)) << '\n';
  });

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "profile induced by a utility process");
  std::string sample_spec, sample_set;
  long sample_count = 1000;
  std::uint64_t sample_seed = 0;
  bool sample_exact = false;
  sample_cmd->add_option("--process", sample_spec, "process spec JSON file")->required();
  sample_cmd->add_option("--set", sample_set, "comma-separated alternatives")->required();
  sample_cmd->add_option("--samples", sample_count, "number of sampled utility vectors");
  sample_cmd->add_option("--seed", sample_seed, "sampling seed");
  sample_cmd->add_flag("--exact", sample_exact, "exact profile (gumbel only)");
  sample_cmd->callback([&] {
    ProcessSpec spec = ProcessSpec::from_json(read_file(sample_spec));
    std::vector<Alternative> alternatives = split(sample_set, ',');
    Profile profile = sample_exact ? plackett_luce_exact(spec, alternatives)
                                   : sample_profile(spec, alternatives, sample_count, sample_seed);
    std::cout << profile.to_ballot_text();
  });

  // check
  auto* check_cmd = app.add_subcommand("check", "efficiency property of a rule");
  CommonRuleArgs check_args;
  std::string check_property, check_profile, check_exhaustive;
  add_rule_options(check_cmd, check_args);
  check_cmd->add_option("--property", check_property, "property name")->required();
  auto* check_profile_opt = check_cmd->add_option("--profile", check_profile, "ballot file");
  auto* check_exhaustive_opt = check_cmd->add_option(
      "--exhaustive", check_exhaustive, "'m,n': all unit profiles, m alternatives, up to n voters");
  check_profile_opt->excludes(check_exhaustive_opt);
  check_cmd->callback([&] {
    EfficiencyProperty property = property_from_name(check_property);
    BoundRule rule = bind_rule(check_args.rule, check_args.options());
    std::optional<Violation> violation;
    if (!check_exhaustive.empty()) {
      auto parts = split(check_exhaustive, ',');
      if (parts.size() != 2) throw std::invalid_argument("--exhaustive needs 'm,n'");
      violation = exhaustive_search(rule, property, std::stoi(parts[0]), std::stoi(parts[1]));
    } else if (!check_profile.empty()) {
      violation = check_efficiency(property, rule, parse_profile(read_file(check_profile)));
    } else {
      throw std::invalid_argument("check needs --profile or --exhaustive");
    }
    if (violation) {
      std::cout << violation->to_record();
      exit_code = 1;
    } else {
      std::cout << "pass\n";
    }
  });

  // stability
  auto* stability_cmd = app.add_subcommand("stability", "stability of a rule on a process");
  CommonRuleArgs stability_args;
  std::string stability_spec, stability_set, stability_subsets;
  long stability_samples = 0;
  std::uint64_t stability_seed = 0;
  add_rule_options(stability_cmd, stability_args);
  stability_cmd->add_option("--process", stability_spec, "process spec JSON file")->required();
  stability_cmd->add_option("--set", stability_set, "comma-separated alternatives")->required();
  stability_cmd->add_option("--subsets", stability_subsets,
                            "semicolon-separated subsets 'a,b;a,c' (default: all proper subsets)");
  stability_cmd->add_option("--samples", stability_samples,
                            "sample count for non-gumbel processes");
  stability_cmd->add_option("--seed", stability_seed, "sampling seed");
  stability_cmd->callback([&] {
    ProcessSpec spec = ProcessSpec::from_json(read_file(stability_spec));
    std::vector<Alternative> alternatives = split(stability_set, ',');
    BoundRule rule = bind_rule(stability_args.rule, stability_args.options());
    std::vector<std::vector<Alternative>> subsets;
    if (!stability_subsets.empty()) {
      for (const auto& chunk : split(stability_subsets, ';')) subsets.push_back(split(chunk, ','));
    } else {
      std::vector<std::size_t> sizes;
      for (std::size_t s = 1; s < alternatives.size(); ++s) sizes.push_back(s);
      subsets = subsets_of_sizes(alternatives, sizes);
    }
    auto violation =
        check_stability(rule, spec, alternatives, subsets, stability_samples, stability_seed);
    if (violation) {
      std::cout << violation->to_record();
      exit_code = 1;
    } else {
      std::cout << "pass\n";
    }
  });

  // fixtures
  auto* fixtures_cmd = app.add_subcommand("fixtures", "write the reference ballot files");
  std::string fixtures_dir;
  fixtures_cmd->add_option("--emit", fixtures_dir, "target directory")->required();
  fixtures_cmd->callback([&] {
    for (const auto& path : emit_fixtures(fixtures_dir)) {
      std::cout << "wrote " << path << '\n';
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
