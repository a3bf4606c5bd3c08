#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "socialchoice/rational.hpp"

namespace socialchoice {

// An alternative is an opaque token: nonempty, no whitespace, no '>', no ','.
using Alternative = std::string;

bool valid_alternative_id(std::string_view id);

// A total order over a finite alternative set. Position 1 is the most
// preferred alternative.
class Ranking {
 public:
  explicit Ranking(std::vector<Alternative> order);

  const std::vector<Alternative>& order() const { return order_; }
  std::size_t size() const { return order_.size(); }

  // 1-based; throws std::out_of_range for unknown alternatives.
  int position(const Alternative& a) const;
  bool prefers(const Alternative& a, const Alternative& b) const;
  bool contains(const Alternative& a) const;

  // Keeps only the alternatives in `subset`, preserving relative order.
  Ranking restricted_to(const std::vector<Alternative>& subset) const;

  std::string to_string() const;              // "a>b>c"
  static Ranking parse(std::string_view text);

  auto operator<=>(const Ranking& other) const { return order_ <=> other.order_; }
  bool operator==(const Ranking& other) const = default;

 private:
  std::vector<Alternative> order_;
};

// An anonymous weighted profile: a map from rankings of a fixed alternative
// set to exact nonnegative rational weights with positive total. Immutable
// after construction.
class Profile {
 public:
  // Accumulates duplicate rankings, drops zero weights, validates that all
  // rankings are permutations of the same set and that the total is positive.
  // The alternative order of the profile is the order of the first entry.
  static Profile from_entries(const std::vector<std::pair<Ranking, Rational>>& entries);

  // First-seen alternative order (presentation only; equality is set-based).
  const std::vector<Alternative>& alternatives() const { return alternatives_; }
  std::vector<Alternative> sorted_alternatives() const;
  std::size_t num_alternatives() const { return alternatives_.size(); }

  const std::map<Ranking, Rational>& entries() const { return entries_; }
  const Rational& total_weight() const { return total_weight_; }
  Rational weight(const Ranking& r) const;
  bool contains(const Alternative& a) const;

  // Marginalizes onto a nonempty subset: each restricted ranking receives the
  // summed weight of its preimages. Total weight is preserved.
  Profile restrict(const std::vector<Alternative>& subset) const;

  bool has_integer_weights() const;

  // Canonical ballot text: one "weight: ranking" line per entry, rankings in
  // lexicographic order. parse_profile round-trips this byte-identically.
  std::string to_ballot_text() const;

  bool operator==(const Profile& other) const;

 private:
  Profile() = default;

  std::vector<Alternative> alternatives_;
  std::map<Ranking, Rational> entries_;
  Rational total_weight_;
};

// Parses the ballot file grammar:
//   line    := weight ":" ranking | "#" comment | blank
//   weight  := nonnegative integer | integer "/" positive-integer
//   ranking := id (">" id)+
// All rankings must cover the identical alternative set. Throws
// std::invalid_argument with a line diagnostic on malformed input.
Profile parse_profile(std::string_view text);

// Pairwise support masses: support(a,b) = total weight of rankings placing a
// above b. support(a,b) + support(b,a) = total weight for all a != b.
class MarginMatrix {
 public:
  explicit MarginMatrix(const Profile& profile);

  const std::vector<Alternative>& alternatives() const { return alternatives_; }
  const Rational& total_weight() const { return total_weight_; }

  const Rational& support(const Alternative& a, const Alternative& b) const;
  Rational margin(const Alternative& a, const Alternative& b) const;

  bool weakly_beats(const Alternative& a, const Alternative& b) const;
  bool strictly_beats(const Alternative& a, const Alternative& b) const;

 private:
  std::size_t index(const Alternative& a) const;

  std::vector<Alternative> alternatives_;  // lexicographic
  std::vector<Rational> support_;          // row-major
  Rational total_weight_;
};

// Cumulative position counts: s(j,a) = total weight of rankings placing a at
// position <= j. Nondecreasing in j, with s(|A|, a) = total weight.
class PositionalTally {
 public:
  explicit PositionalTally(const Profile& profile);

  const std::vector<Alternative>& alternatives() const { return alternatives_; }
  const Rational& total_weight() const { return total_weight_; }
  std::size_t num_positions() const { return alternatives_.size(); }

  // j is 1-based.
  const Rational& cumulative(std::size_t j, const Alternative& a) const;

 private:
  std::vector<Alternative> alternatives_;  // lexicographic
  std::vector<Rational> cumulative_;       // (j-1) * m + index(a)
  Rational total_weight_;
};

MarginMatrix margins(const Profile& profile);
PositionalTally positional_tally(const Profile& profile);

}  // namespace socialchoice
