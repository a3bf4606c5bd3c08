#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "socialchoice/dominance.hpp"
#include "socialchoice/process.hpp"
#include "socialchoice/profile.hpp"
#include "socialchoice/rules.hpp"

namespace socialchoice {

enum class EfficiencyProperty { PMD, StrongPMD, PosD, StrongPosD };

std::string property_name(EfficiencyProperty property);
EfficiencyProperty property_from_name(const std::string& name);

// A rule bound to its options, with a display name for reports.
struct BoundRule {
  std::string name;
  std::function<WinnerSet(const Profile&)> fn;

  WinnerSet operator()(const Profile& profile) const { return fn(profile); }
};

BoundRule bind_rule(const std::string& name, const RuleOptions& options = {});

// A reproducible counterexample. The embedded profile and witness replay the
// failure deterministically.
struct Violation {
  std::string property;
  std::string rule;
  std::string profile_text;            // canonical ballot serialization
  Alternative witness_a, witness_b;    // efficiency witness pair
  std::vector<Alternative> subset;     // stability witness subset
  std::vector<std::string> trace;

  // Deterministic structured text record.
  std::string to_record() const;
};

// Re-runs the stated property on the embedded profile and confirms the same
// witness fails again.
bool replay(const Violation& violation);

// Weak efficiency: a dominating alternative must win whenever a dominated one
// does. Strong efficiency additionally excludes strictly dominated winners
// and ties mutually dominating alternatives together.
std::optional<Violation> check_pmd_efficiency(const BoundRule& rule, const Profile& profile);
std::optional<Violation> check_strong_pmd_efficiency(const BoundRule& rule, const Profile& profile);
std::optional<Violation> check_posd_efficiency(const BoundRule& rule, const Profile& profile);
std::optional<Violation> check_strong_posd_efficiency(const BoundRule& rule,
                                                      const Profile& profile);
std::optional<Violation> check_efficiency(EfficiencyProperty property, const BoundRule& rule,
                                          const Profile& profile);

// Enumerates all anonymous unit-weight profiles (ranking multisets, sizes 1
// to max_voters) over the first `n_alternatives` letter ids, in deterministic
// lexicographic order. The visitor returns false to stop early.
void for_each_anonymous_profile(int n_alternatives, int max_voters,
                                const std::function<bool(const Profile&)>& visit);
long count_anonymous_profiles(int n_alternatives, int max_voters);

// First violation in enumeration order, or pass. Bounds: n_alternatives <= 4,
// max_voters <= 5.
std::optional<Violation> exhaustive_search(const BoundRule& rule, EfficiencyProperty property,
                                           int n_alternatives, int max_voters);

// Stability: winners restricted to a subset coincide with winners computed on
// the subset profile whenever the restriction is nonempty. Subset profiles
// come from the process (exact for gumbel, restriction of one seeded sample
// otherwise) or from restricting a fixed profile.
std::optional<Violation> check_stability(const BoundRule& rule, const Profile& profile,
                                         const std::vector<std::vector<Alternative>>& subsets);
std::optional<Violation> check_stability(const BoundRule& rule, const ProcessSpec& spec,
                                         const std::vector<Alternative>& alternatives,
                                         const std::vector<std::vector<Alternative>>& subsets,
                                         long samples = 0, std::uint64_t seed = 0);

// All subsets of the given sizes, in deterministic order.
std::vector<std::vector<Alternative>> subsets_of_sizes(const std::vector<Alternative>& alternatives,
                                                       const std::vector<std::size_t>& sizes);

struct CompatibilityReport {
  bool pm_compatible = true;   // PM relation is a total preorder on every subset
  bool pos_compatible = true;  // same for Pos
  bool pm_strong = true;       // PM dominance agrees across all subsets
  bool pos_strong = true;
  std::string pm_order;        // adjacency of the full-set PM relation
  std::string pos_order;
  std::vector<std::string> notes;  // failing subsets and pairs
};

// Examines every subset of size >= 2. Subset profiles: exact for gumbel
// processes, restriction of one seeded sample for other families, restriction
// for a fixed profile.
CompatibilityReport check_compatibility(const Profile& profile);
CompatibilityReport check_compatibility(const ProcessSpec& spec,
                                        const std::vector<Alternative>& alternatives,
                                        long samples = 0, std::uint64_t seed = 0);

struct DominantWinnerCheck {
  bool pass = false;
  DominanceKind kind = DominanceKind::PairwiseMajority;
  WinnerSet winners;
  std::vector<Alternative> maximal;
};

// On a compatible process, a strongly efficient rule must select exactly the
// dominance-maximal alternatives. The relation kind defaults to the rule's
// registry classification. Gumbel processes only (exact profiles).
DominantWinnerCheck dominant_winner_check(const BoundRule& rule, const ProcessSpec& spec,
                                                 const std::vector<Alternative>& alternatives,
                                                 std::optional<DominanceKind> kind = std::nullopt);

}  // namespace socialchoice
