#include "socialchoice/properties.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace socialchoice {

std::string property_name(EfficiencyProperty property) {
  switch (property) {
    case EfficiencyProperty::PMD: return "pmd-efficiency";
    case EfficiencyProperty::StrongPMD: return "strong-pmd-efficiency";
    case EfficiencyProperty::PosD: return "posd-efficiency";
    case EfficiencyProperty::StrongPosD: return "strong-posd-efficiency";
  }
  throw std::logic_error("unhandled property");
}

EfficiencyProperty property_from_name(const std::string& name) {
  if (name == "pmd-efficiency") return EfficiencyProperty::PMD;
  if (name == "strong-pmd-efficiency") return EfficiencyProperty::StrongPMD;
  if (name == "posd-efficiency") return EfficiencyProperty::PosD;
  if (name == "strong-posd-efficiency") return EfficiencyProperty::StrongPosD;
  throw std::invalid_argument("unknown property: '" + name + "'");
}

BoundRule bind_rule(const std::string& name, const RuleOptions& options) {
  rule_descriptor(name);  // validates the registry key
  std::string display = name;
  if (options.weights) {
    display += '(';
    for (std::size_t i = 0; i < options.weights->size(); ++i) {
      if (i) display += ',';
      display += to_string((*options.weights)[i]);
    }
    display += ')';
  }
  if (name == "minimax" && options.minimax_convention == MinimaxConvention::WinningVotes) {
    display += "[wv]";
  }
  return BoundRule{display,
                   [name, options](const Profile& p) { return apply_rule(name, p, options); }};
}

namespace {

// Inverse of bind_rule's display name, used to replay violations.
BoundRule rebind_rule(const std::string& display) {
  std::string name = display;
  RuleOptions options;
  if (name.ends_with("[wv]")) {
    options.minimax_convention = MinimaxConvention::WinningVotes;
    name = name.substr(0, name.size() - 4);
  }
  if (auto open = name.find('('); open != std::string::npos) {
    if (!name.ends_with(")")) throw std::invalid_argument("malformed rule name: '" + display + "'");
    options.weights = parse_weights(name.substr(open + 1, name.size() - open - 2));
    name = name.substr(0, open);
  }
  return bind_rule(name, options);
}

bool member(const std::vector<Alternative>& set, const Alternative& a) {
  return std::find(set.begin(), set.end(), a) != set.end();
}

std::string join(const std::vector<Alternative>& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out += ' ';
    out += set[i];
  }
  return out;
}

std::vector<std::string> pm_pair_trace(const Profile& profile, const Alternative& a,
                                       const Alternative& b) {
  MarginMatrix m(profile);
  return {"support(" + a + "," + b + ") = " + to_string(m.support(a, b)),
          "support(" + b + "," + a + ") = " + to_string(m.support(b, a))};
}

std::vector<std::string> pos_pair_trace(const Profile& profile, const Alternative& a,
                                        const Alternative& b) {
  PositionalTally t(profile);
  std::vector<std::string> lines;
  for (std::size_t j = 1; j <= t.num_positions(); ++j) {
    lines.push_back("s_" + std::to_string(j) + "(" + a + ") = " + to_string(t.cumulative(j, a)) +
                    "  s_" + std::to_string(j) + "(" + b + ") = " + to_string(t.cumulative(j, b)));
  }
  return lines;
}

std::optional<Violation> check_weak(EfficiencyProperty property, const DominanceRelation& relation,
                                    const BoundRule& rule, const Profile& profile,
                                    const WinnerSet& winners) {
  const auto& alts = relation.alternatives();
  for (const auto& a : alts) {
    for (const auto& b : alts) {
      if (a == b || !relation.holds(a, b)) continue;
      if (member(winners, b) && !member(winners, a)) {
        Violation v;
        v.property = property_name(property);
        v.rule = rule.name;
        v.profile_text = profile.to_ballot_text();
        v.witness_a = a;
        v.witness_b = b;
        v.trace = relation.kind() == DominanceKind::PairwiseMajority ? pm_pair_trace(profile, a, b)
                                                                     : pos_pair_trace(profile, a, b);
        v.trace.push_back("winners: " + join(winners));
        v.trace.push_back(b + " selected while " + a + " is not");
        return v;
      }
    }
  }
  return std::nullopt;
}

std::optional<Violation> check_strong(EfficiencyProperty property,
                                      const DominanceRelation& relation, const BoundRule& rule,
                                      const Profile& profile, const WinnerSet& winners) {
  const auto& alts = relation.alternatives();
  for (const auto& a : alts) {
    for (const auto& b : alts) {
      if (a == b || !relation.holds(a, b)) continue;
      bool mutual = relation.holds(b, a);
      bool fails_exclusion = !mutual && member(winners, b);
      bool fails_tie = mutual && member(winners, a) != member(winners, b);
      if (!fails_exclusion && !fails_tie) continue;
      Violation v;
      v.property = property_name(property);
      v.rule = rule.name;
      v.profile_text = profile.to_ballot_text();
      v.witness_a = a;
      v.witness_b = b;
      v.trace = relation.kind() == DominanceKind::PairwiseMajority ? pm_pair_trace(profile, a, b)
                                                                   : pos_pair_trace(profile, a, b);
      v.trace.push_back("winners: " + join(winners));
      v.trace.push_back(fails_exclusion ? b + " is strictly dominated yet selected"
                                        : a + " and " + b + " dominate mutually but are split");
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check_efficiency(EfficiencyProperty property, const BoundRule& rule,
                                          const Profile& profile) {
  WinnerSet winners = rule(profile);
  switch (property) {
    case EfficiencyProperty::PMD:
      return check_weak(property, pm_relation(profile), rule, profile, winners);
    case EfficiencyProperty::StrongPMD:
      return check_strong(property, pm_relation(profile), rule, profile, winners);
    case EfficiencyProperty::PosD:
      return check_weak(property, pos_relation(profile), rule, profile, winners);
    case EfficiencyProperty::StrongPosD:
      return check_strong(property, pos_relation(profile), rule, profile, winners);
  }
  throw std::logic_error("unhandled property");
}

std::optional<Violation> check_pmd_efficiency(const BoundRule& rule, const Profile& profile) {
  return check_efficiency(EfficiencyProperty::PMD, rule, profile);
}

std::optional<Violation> check_strong_pmd_efficiency(const BoundRule& rule,
                                                     const Profile& profile) {
  return check_efficiency(EfficiencyProperty::StrongPMD, rule, profile);
}

std::optional<Violation> check_posd_efficiency(const BoundRule& rule, const Profile& profile) {
  return check_efficiency(EfficiencyProperty::PosD, rule, profile);
}

std::optional<Violation> check_strong_posd_efficiency(const BoundRule& rule,
                                                      const Profile& profile) {
  return check_efficiency(EfficiencyProperty::StrongPosD, rule, profile);
}

namespace {

std::vector<Alternative> letter_alternatives(int n) {
  std::vector<Alternative> alts;
  for (int i = 0; i < n; ++i) alts.emplace_back(1, static_cast<char>('a' + i));
  return alts;
}

std::vector<Ranking> all_rankings(const std::vector<Alternative>& alternatives) {
  std::vector<Alternative> order = alternatives;
  std::sort(order.begin(), order.end());
  std::vector<Ranking> rankings;
  do {
    rankings.emplace_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return rankings;
}

}  // namespace

void for_each_anonymous_profile(int n_alternatives, int max_voters,
                                const std::function<bool(const Profile&)>& visit) {
  if (n_alternatives < 1 || max_voters < 1) {
    throw std::invalid_argument("need at least one alternative and one voter");
  }
  std::vector<Ranking> rankings = all_rankings(letter_alternatives(n_alternatives));
  std::vector<std::size_t> chosen;
  bool keep_going = true;
  // Nondecreasing index tuples of each size: multisets in lexicographic order.
  std::function<void(std::size_t, int)> recurse = [&](std::size_t start, int remaining) {
    if (!keep_going) return;
    if (remaining == 0) {
      std::vector<std::pair<Ranking, Rational>> entries;
      for (std::size_t i = 0; i < chosen.size(); ++i) {
        std::size_t run = 1;
        while (i + 1 < chosen.size() && chosen[i + 1] == chosen[i]) {
          ++run;
          ++i;
        }
        entries.emplace_back(rankings[chosen[i]], Rational(static_cast<long>(run)));
      }
      keep_going = visit(Profile::from_entries(entries));
      return;
    }
    for (std::size_t r = start; r < rankings.size() && keep_going; ++r) {
      chosen.push_back(r);
      recurse(r, remaining - 1);
      chosen.pop_back();
    }
  };
  for (int voters = 1; voters <= max_voters && keep_going; ++voters) {
    recurse(0, voters);
  }
}

long count_anonymous_profiles(int n_alternatives, int max_voters) {
  long count = 0;
  for_each_anonymous_profile(n_alternatives, max_voters, [&](const Profile&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Violation> exhaustive_search(const BoundRule& rule, EfficiencyProperty property,
                                           int n_alternatives, int max_voters) {
  if (n_alternatives > 4 || max_voters > 5) {
    throw std::invalid_argument("exhaustive search bounds: at most 4 alternatives, 5 voters");
  }
  std::optional<Violation> found;
  for_each_anonymous_profile(n_alternatives, max_voters, [&](const Profile& profile) {
    found = check_efficiency(property, rule, profile);
    return !found.has_value();
  });
  return found;
}

std::vector<std::vector<Alternative>> subsets_of_sizes(const std::vector<Alternative>& alternatives,
                                                       const std::vector<std::size_t>& sizes) {
  std::vector<Alternative> sorted = alternatives;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<Alternative>> subsets;
  std::vector<Alternative> current;
  std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t start,
                                                              std::size_t remaining) {
    if (remaining == 0) {
      subsets.push_back(current);
      return;
    }
    for (std::size_t i = start; i + remaining <= sorted.size(); ++i) {
      current.push_back(sorted[i]);
      recurse(i + 1, remaining - 1);
      current.pop_back();
    }
  };
  for (std::size_t size : sizes) {
    if (size < 1 || size > sorted.size()) continue;
    recurse(0, size);
  }
  return subsets;
}

namespace {

std::optional<Violation> stability_over(
    const BoundRule& rule, const Profile& full,
    const std::function<Profile(const std::vector<Alternative>&)>& subset_profile,
    const std::vector<std::vector<Alternative>>& subsets) {
  WinnerSet full_winners = rule(full);
  for (const auto& subset : subsets) {
    for (const auto& a : subset) {
      if (!full.contains(a)) {
        throw std::invalid_argument("subset alternative '" + a + "' not in the full set");
      }
    }
    std::vector<Alternative> intersection;
    for (const auto& w : full_winners) {
      if (member(subset, w)) intersection.push_back(w);
    }
    if (intersection.empty()) continue;
    WinnerSet subset_winners = rule(subset_profile(subset));
    if (intersection == subset_winners) continue;
    Violation v;
    v.property = "stability";
    v.rule = rule.name;
    v.profile_text = full.to_ballot_text();
    v.subset = subset;
    std::sort(v.subset.begin(), v.subset.end());
    v.trace = {"winners on full set: " + join(full_winners),
               "restricted to subset: " + join(intersection),
               "winners on subset profile: " + join(subset_winners)};
    return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check_stability(const BoundRule& rule, const Profile& profile,
                                         const std::vector<std::vector<Alternative>>& subsets) {
  return stability_over(
      rule, profile, [&](const std::vector<Alternative>& b) { return profile.restrict(b); },
      subsets);
}

std::optional<Violation> check_stability(const BoundRule& rule, const ProcessSpec& spec,
                                         const std::vector<Alternative>& alternatives,
                                         const std::vector<std::vector<Alternative>>& subsets,
                                         long samples, std::uint64_t seed) {
  if (spec.family == Family::Gumbel) {
    Profile full = plackett_luce_exact(spec, alternatives);
    return stability_over(
        rule, full, [&](const std::vector<Alternative>& b) { return plackett_luce_exact(spec, b); },
        subsets);
  }
  if (samples < 1) throw std::invalid_argument("sampled stability checks need a sample count");
  Profile full = sample_profile(spec, alternatives, samples, seed);
  // Subset profiles are restrictions of the one sampled profile: independent
  // resampling would inject spurious violations.
  return stability_over(
      rule, full, [&](const std::vector<Alternative>& b) { return full.restrict(b); }, subsets);
}

namespace {

CompatibilityReport compatibility_over(
    const std::vector<Alternative>& alternatives,
    const std::function<Profile(const std::vector<Alternative>&)>& subset_profile) {
  std::vector<Alternative> sorted = alternatives;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> sizes;
  for (std::size_t s = 2; s <= sorted.size(); ++s) sizes.push_back(s);
  CompatibilityReport report;
  Profile full = subset_profile(sorted);
  DominanceRelation full_pm = pm_relation(full);
  DominanceRelation full_pos = pos_relation(full);
  report.pm_order = full_pm.to_adjacency_text();
  report.pos_order = full_pos.to_adjacency_text();
  for (const auto& subset : subsets_of_sizes(sorted, sizes)) {
    Profile profile = subset_profile(subset);
    DominanceRelation pm = pm_relation(profile);
    DominanceRelation pos = pos_relation(profile);
    std::string label = "{" + join(subset) + "}";
    if (!is_total_preorder(pm)) {
      report.pm_compatible = false;
      report.notes.push_back("pm relation is not a total preorder on " + label);
    }
    if (!is_total_preorder(pos)) {
      report.pos_compatible = false;
      report.notes.push_back("pos relation is not a total preorder on " + label);
    }
    for (std::size_t i = 0; i < subset.size(); ++i) {
      for (std::size_t j = 0; j < subset.size(); ++j) {
        if (i == j) continue;
        const auto& a = subset[i];
        const auto& b = subset[j];
        if (pm.holds(a, b) != full_pm.holds(a, b)) {
          report.pm_strong = false;
          report.notes.push_back("pm dominance of (" + a + "," + b + ") differs on " + label);
        }
        if (pos.holds(a, b) != full_pos.holds(a, b)) {
          report.pos_strong = false;
          report.notes.push_back("pos dominance of (" + a + "," + b + ") differs on " + label);
        }
      }
    }
  }
  if (!report.pm_compatible) report.pm_strong = false;
  if (!report.pos_compatible) report.pos_strong = false;
  return report;
}

}  // namespace

CompatibilityReport check_compatibility(const Profile& profile) {
  return compatibility_over(profile.sorted_alternatives(), [&](const std::vector<Alternative>& b) {
    return profile.restrict(b);
  });
}

CompatibilityReport check_compatibility(const ProcessSpec& spec,
                                        const std::vector<Alternative>& alternatives,
                                        long samples, std::uint64_t seed) {
  if (alternatives.size() > 5) {
    throw std::invalid_argument("compatibility enumeration supports at most 5 alternatives");
  }
  if (spec.family == Family::Gumbel) {
    return compatibility_over(alternatives, [&](const std::vector<Alternative>& b) {
      return plackett_luce_exact(spec, b);
    });
  }
  if (samples < 1) throw std::invalid_argument("sampled compatibility checks need a sample count");
  Profile full = sample_profile(spec, alternatives, samples, seed);
  return compatibility_over(alternatives, [&](const std::vector<Alternative>& b) {
    return b.size() == full.num_alternatives() ? full : full.restrict(b);
  });
}

DominantWinnerCheck dominant_winner_check(const BoundRule& rule, const ProcessSpec& spec,
                                                 const std::vector<Alternative>& alternatives,
                                                 std::optional<DominanceKind> kind) {
  DominantWinnerCheck result;
  if (kind) {
    result.kind = *kind;
  } else {
    std::string base = rule.name.substr(0, rule.name.find_first_of("(["));
    const RuleDescriptor& d = rule_descriptor(base);
    if (d.strongly_pm_efficient_on_compatible) {
      result.kind = DominanceKind::PairwiseMajority;
    } else if (d.strongly_pos_efficient || base == "scoring") {
      result.kind = DominanceKind::Positional;
    } else {
      throw std::invalid_argument("rule '" + base + "' has no dominance classification; pass one");
    }
  }
  Profile profile = plackett_luce_exact(spec, alternatives);
  DominanceRelation relation = result.kind == DominanceKind::PairwiseMajority
                                   ? pm_relation(profile)
                                   : pos_relation(profile);
  result.maximal = relation.maximal_set();
  result.winners = rule(profile);
  result.pass = result.winners == result.maximal;
  return result;
}

std::string Violation::to_record() const {
  std::ostringstream out;
  out << "property: " << property << '\n';
  out << "rule: " << rule << '\n';
  if (!witness_a.empty()) out << "witness: " << witness_a << ',' << witness_b << '\n';
  if (!subset.empty()) out << "subset: " << join(subset) << '\n';
  out << "profile:\n";
  std::istringstream lines(profile_text);
  std::string line;
  while (std::getline(lines, line)) out << "  " << line << '\n';
  out << "trace:\n";
  for (const auto& t : trace) out << "  " << t << '\n';
  return out.str();
}

bool replay(const Violation& violation) {
  Profile profile = parse_profile(violation.profile_text);
  BoundRule rule = rebind_rule(violation.rule);
  if (violation.property == "stability") {
    auto again = check_stability(rule, profile, {violation.subset});
    return again && again->subset == violation.subset;
  }
  auto again = check_efficiency(property_from_name(violation.property), rule, profile);
  return again && again->witness_a == violation.witness_a &&
         again->witness_b == violation.witness_b;
}

}  // namespace socialchoice
