#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socialchoice/dominance.hpp"
#include "socialchoice/profile.hpp"

namespace socialchoice {

// Scoring weights, one per position, nonincreasing.
using WeightsVector = std::vector<Rational>;

// Winner sets are nonempty and lexicographically sorted.
using WinnerSet = std::vector<Alternative>;

WeightsVector borda_weights(std::size_t m);         // (m, m-1, ..., 1)
WeightsVector plurality_weights(std::size_t m);     // (1, 0, ..., 0)
WeightsVector antiplurality_weights(std::size_t m); // (1, ..., 1, 0)

bool nonincreasing(const WeightsVector& w);
bool strictly_decreasing(const WeightsVector& w);

WeightsVector parse_weights(const std::string& comma_separated);

// argmax of the positional score sum(weight(sigma) * alpha[sigma(a)]).
// Requires |w| == |A| and w nonincreasing; ties all included.
WinnerSet scoring_rule(const Profile& profile, const WeightsVector& w);
std::map<Alternative, Rational> scoring_scores(const Profile& profile, const WeightsVector& w);

WinnerSet plurality(const Profile& profile);
WinnerSet antiplurality(const Profile& profile);
WinnerSet borda(const Profile& profile);

// Alternatives that weakly beat every other alternative under pairwise
// majority. May be empty; this is not a social choice correspondence.
std::vector<Alternative> weak_condorcet_winners(const Profile& profile);

// The alternative that strictly beats every other one, if any.
std::optional<Alternative> strict_condorcet_winner(const Profile& profile);

// Stage 1: weak Condorcet winners if any exist; stage 2: the scoring rule.
// Default weights are Borda.
WinnerSet black(const Profile& profile, const std::optional<WeightsVector>& w = std::nullopt);

// Minimum number of adjacent transpositions across individual ballots that
// make a candidate strictly beat every other alternative. Requires integer
// weights, |A| <= 6 and at most 8 ballots.
std::map<Alternative, long> dodgson_scores(const Profile& profile);
// Winner shortcut: a strict Condorcet winner has cost 0 and everyone else a
// positive cost, so profiles with one are resolved without the swap search
// (and without the integer-weight requirement).
WinnerSet dodgson(const Profile& profile);

// Minimum number of other alternatives whose removal leaves a candidate
// strictly beating every remaining alternative. Subset enumeration, |A| <= 8.
std::map<Alternative, int> young_scores(const Profile& profile);
WinnerSet young(const Profile& profile);

struct KemenyResult {
  Rational min_disagreement;
  std::vector<Ranking> optimal_orderings;  // all minimizers, lexicographic
  WinnerSet winners;                       // top alternatives of the minimizers
};

// Full enumeration over |A|! orderings, |A| <= 8. The disagreement of an
// ordering is the ranking mass preferring y over x, summed over ordered pairs
// (x above y).
KemenyResult kemeny_full(const Profile& profile);
WinnerSet kemeny(const Profile& profile);

struct NansonRound {
  std::vector<Alternative> candidates;  // lexicographic
  std::map<Alternative, Rational> scores;
  Rational average;
  std::vector<Alternative> eliminated;  // strictly below average
};

// Iterated scoring eliminations: candidates strictly below the round average
// are deleted, candidates at exactly the average survive. Default weights are
// Borda recomputed at each round's size; a supplied vector is truncated to the
// first k entries each round and must be strictly decreasing.
std::vector<NansonRound> nanson_trace(const Profile& profile,
                                      const std::optional<WeightsVector>& w = std::nullopt);
WinnerSet nanson(const Profile& profile, const std::optional<WeightsVector>& w = std::nullopt);

enum class MinimaxConvention { Margins, WinningVotes };

// Worst pairwise loss per candidate: margins convention uses
// max(support(b,a) - support(a,b), 0); winning-votes uses support(b,a) over
// strict defeats only.
std::map<Alternative, Rational> minimax_worst_losses(const Profile& profile,
                                                     MinimaxConvention convention);
WinnerSet minimax(const Profile& profile,
                  MinimaxConvention convention = MinimaxConvention::Margins);

// x Fishburn-dominates y iff everything strictly beating x also strictly
// beats y and everything y strictly beats x also strictly beats, with at
// least one inclusion strict. Winners are the undominated alternatives.
bool fishburn_dominates(const MarginMatrix& m, const Alternative& x, const Alternative& y);
WinnerSet fishburn(const Profile& profile);

// Bucklin score: least k such that a's cumulative count within the first k
// positions strictly exceeds half the total weight.
std::map<Alternative, int> bucklin_scores(const Profile& profile);
WinnerSet bucklin(const Profile& profile);

WinnerSet schwartz_rule(const Profile& profile);

struct RuleOptions {
  std::optional<WeightsVector> weights;
  MinimaxConvention minimax_convention = MinimaxConvention::Margins;
};

struct RuleDescriptor {
  std::string name;
  bool needs_weights = false;     // errors without an explicit weights vector
  bool accepts_weights = false;   // optional weights (default Borda)
  // Selects exactly the weak Condorcet winners whenever the pairwise-majority
  // relation is a total preorder (and is then strongly PM-efficient there).
  bool strongly_pm_efficient_on_compatible = false;
  // Strongly PosD-efficient (scoring with strictly decreasing weights).
  bool strongly_pos_efficient = false;
};

const std::vector<RuleDescriptor>& rule_registry();
const RuleDescriptor& rule_descriptor(const std::string& name);

WinnerSet apply_rule(const std::string& name, const Profile& profile,
                     const RuleOptions& options = {});

}  // namespace socialchoice
