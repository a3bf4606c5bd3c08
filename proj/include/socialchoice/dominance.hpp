#pragma once

#include <string>
#include <vector>

#include "socialchoice/profile.hpp"

namespace socialchoice {

enum class DominanceKind { PairwiseMajority, Positional };

std::string dominance_kind_name(DominanceKind kind);

// A weak dominance relation over a finite alternative set. The strict part is
// derived: strict(a,b) = holds(a,b) && !holds(b,a).
class DominanceRelation {
 public:
  DominanceRelation(DominanceKind kind, std::vector<Alternative> alternatives,
                    std::vector<bool> holds);

  DominanceKind kind() const { return kind_; }
  const std::vector<Alternative>& alternatives() const { return alternatives_; }

  bool holds(const Alternative& a, const Alternative& b) const;
  bool strict(const Alternative& a, const Alternative& b) const;

  bool complete() const;
  bool transitive() const;

  DominanceRelation restricted_to(const std::vector<Alternative>& subset) const;

  // Alternatives that weakly dominate every other alternative.
  std::vector<Alternative> maximal_set() const;

  // Deterministic adjacency list, one lexicographic row per alternative:
  //   "a: b c" means a weakly dominates b and c.
  std::string to_adjacency_text() const;

  bool operator==(const DominanceRelation& other) const;

 private:
  std::size_t index(const Alternative& a) const;

  DominanceKind kind_;
  std::vector<Alternative> alternatives_;  // lexicographic
  std::vector<bool> holds_;                // row-major, diagonal unused
};

// a weakly beats b by pairwise majority: the ranking mass preferring a over b
// is at least the mass preferring b over a. Complete, not transitive.
bool pm_dominates(const Profile& profile, const Alternative& a, const Alternative& b);

// a's cumulative position counts weakly exceed b's at every cutoff position.
// Transitive, not complete.
bool pos_dominates(const Profile& profile, const Alternative& a, const Alternative& b);

DominanceRelation pm_relation(const Profile& profile);
DominanceRelation pos_relation(const Profile& profile);

// Complete and transitive.
bool is_total_preorder(const DominanceRelation& relation);

// True iff the strict part of the pairwise-majority relation has a directed
// cycle.
bool has_condorcet_cycle(const Profile& profile);

// The minimal nonempty set S such that no alternative outside S weakly
// PM-dominates a member of S; equivalently every member of S strictly beats
// every outsider. Computed as the source component of the strongly-connected
// condensation of the weak PM digraph. Never empty.
std::vector<Alternative> schwartz_set(const Profile& profile);

// Oracle form: subset enumeration checking the definition verbatim, smallest
// cardinality first. Requires |A| <= 12.
std::vector<Alternative> schwartz_set_bruteforce(const Profile& profile);

}  // namespace socialchoice
