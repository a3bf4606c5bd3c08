#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "doctest.h"
#include "socialchoice/fixtures.hpp"
#include "socialchoice/properties.hpp"
#include "socialchoice/rules.hpp"

using namespace socialchoice;

namespace {

// Test-only oracle: breadth-first search over sequences of adjacent swaps
// applied to individual ballots, independent of the lift-based search.
std::optional<int> bfs_dodgson_cost(const Profile& profile, const Alternative& candidate,
                                    int max_depth) {
  std::vector<std::vector<Alternative>> start;
  for (const auto& [ranking, weight] : profile.entries()) {
    long copies = weight.get_num().get_si();
    for (long i = 0; i < copies; ++i) start.push_back(ranking.order());
  }
  std::sort(start.begin(), start.end());
  auto is_strict_condorcet = [&](const std::vector<std::vector<Alternative>>& ballots) {
    Profile p = Profile::from_entries([&] {
      std::vector<std::pair<Ranking, Rational>> entries;
      for (const auto& b : ballots) entries.emplace_back(Ranking(b), Rational(1));
      return entries;
    }());
    MarginMatrix m(p);
    for (const auto& other : p.sorted_alternatives()) {
      if (other != candidate && !m.strictly_beats(candidate, other)) return false;
    }
    return true;
  };
  std::set<std::vector<std::vector<Alternative>>> seen{start};
  std::deque<std::pair<std::vector<std::vector<Alternative>>, int>> queue{{start, 0}};
  while (!queue.empty()) {
    auto [state, depth] = queue.front();
    queue.pop_front();
    if (is_strict_condorcet(state)) return depth;
    if (depth == max_depth) continue;
    for (std::size_t b = 0; b < state.size(); ++b) {
      for (std::size_t pos = 0; pos + 1 < state[b].size(); ++pos) {
        auto next = state;
        std::swap(next[b][pos], next[b][pos + 1]);
        std::sort(next.begin(), next.end());
        if (seen.insert(next).second) queue.emplace_back(std::move(next), depth + 1);
      }
    }
  }
  return std::nullopt;
}

Profile relabeled(const Profile& p, const std::map<Alternative, Alternative>& mapping) {
  std::vector<std::pair<Ranking, Rational>> entries;
  for (const auto& [ranking, weight] : p.entries()) {
    std::vector<Alternative> order;
    for (const auto& a : ranking.order()) order.push_back(mapping.at(a));
    entries.emplace_back(Ranking(order), weight);
  }
  return Profile::from_entries(entries);
}

WinnerSet mapped_back(const WinnerSet& winners, const std::map<Alternative, Alternative>& inverse) {
  WinnerSet out;
  for (const auto& w : winners) out.push_back(inverse.at(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("scoring rule computes weighted positional scores") {
  Profile p1 = fixture("P1");
  WeightsVector w = parse_weights("5,4,3,2,1");
  auto scores = scoring_scores(p1, w);
  CHECK(scores["a"] == 9);
  CHECK(scores["b"] == 10);
  CHECK(scores["c"] == 9);
  CHECK(scores["d"] == 9);
  CHECK(scores["e"] == 8);
  CHECK(scoring_rule(p1, w) == WinnerSet{"b"});

  CHECK(plurality(parse_profile("2: a>b\n1: b>a")) == WinnerSet{"a"});
  // Antiplurality counts last places: a gets 1, b none, c two.
  CHECK(antiplurality(fixture("E1a")) == WinnerSet{"b"});

  CHECK_THROWS_AS(scoring_rule(p1, parse_weights("1,2,3,4,5")), std::invalid_argument);
  CHECK_THROWS_AS(scoring_rule(p1, parse_weights("1,0")), std::invalid_argument);
}

TEST_CASE("weak condorcet winners") {
  CHECK(weak_condorcet_winners(fixture("E3")) == std::vector<Alternative>{"a"});
  CHECK(weak_condorcet_winners(parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b")).empty());
  CHECK(weak_condorcet_winners(fixture("P1")).empty());
  CHECK(weak_condorcet_winners(fixture("P4")) == std::vector<Alternative>{"a", "b"});
}

TEST_CASE("black falls back to scoring when nobody beats or ties everyone") {
  CHECK(black(fixture("P1"), parse_weights("5,4,3,2,1")) == WinnerSet{"b"});
  // A strict Condorcet winner decides stage one regardless of weights.
  Profile cw = parse_profile("2: c>a>b\n1: a>b>c");
  CHECK(black(cw, parse_weights("9,1,0")) == WinnerSet{"c"});
  CHECK(black(fixture("E3")) == WinnerSet{"a"});
}

TEST_CASE("dodgson counts adjacent swaps to a strict condorcet winner") {
  auto p1_scores = dodgson_scores(fixture("P1"));
  CHECK(p1_scores["b"] == 1);
  for (const auto& [alt, cost] : p1_scores) {
    if (alt != "b") CHECK(cost >= 2);
  }
  CHECK(dodgson(fixture("P1")) == WinnerSet{"b"});

  auto p4_scores = dodgson_scores(fixture("P4"));
  CHECK(p4_scores["a"] == 3);
  CHECK(p4_scores["b"] == 1);
  CHECK(p4_scores["c"] == 3);
  CHECK(p4_scores["d"] == 5);
  CHECK(dodgson(fixture("P4")) == WinnerSet{"b"});

  SUBCASE("a strict condorcet winner costs nothing") {
    Profile cw = parse_profile("2: b>a>c\n1: a>b>c");
    CHECK(dodgson_scores(cw)["b"] == 0);
    CHECK(dodgson(cw) == WinnerSet{"b"});
  }
  SUBCASE("rational weights are rejected unless a strict winner resolves them") {
    Profile tied = parse_profile("1/2: a>b\n1/2: b>a");
    CHECK_THROWS_AS(dodgson(tied), std::invalid_argument);
    Profile decided = parse_profile("3/4: a>b\n1/4: b>a");
    CHECK(dodgson(decided) == WinnerSet{"a"});
  }
  SUBCASE("bounds are enforced") {
    Profile wide = parse_profile("1: a>b>c>d>e>f>g\n1: g>f>e>d>c>b>a\n1: a>b>c>d>e>f>g");
    CHECK_THROWS_AS(dodgson_scores(wide), std::invalid_argument);
    Profile many = parse_profile("9: a>b\n1: b>a");
    CHECK_THROWS_AS(dodgson_scores(many), std::invalid_argument);
  }
}

TEST_CASE("lift search matches breadth-first swap search on small profiles") {
  auto cross_validate = [](const Profile& p) {
    auto scores = dodgson_scores(p);
    for (const auto& [alt, cost] : scores) {
      CAPTURE(alt);
      CAPTURE(p.to_ballot_text());
      auto bfs = bfs_dodgson_cost(p, alt, 4);
      if (cost <= 4) {
        REQUIRE(bfs.has_value());
        CHECK(*bfs == cost);
      } else {
        CHECK_FALSE(bfs.has_value());
      }
    }
  };
  for (const char* name : {"P4", "P5", "E1a", "E2"}) {
    CAPTURE(name);
    cross_validate(fixture(name));
  }
  std::mt19937_64 rng(90210);
  for (int trial = 0; trial < 30; ++trial) {
    int n_alts = 3 + static_cast<int>(rng() % 2);
    std::vector<Alternative> alts;
    for (int i = 0; i < n_alts; ++i) alts.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::pair<Ranking, Rational>> entries;
    int voters = 2 + static_cast<int>(rng() % 2);
    for (int v = 0; v < voters; ++v) {
      std::vector<Alternative> order = alts;
      std::shuffle(order.begin(), order.end(), rng);
      entries.emplace_back(Ranking(order), Rational(1));
    }
    cross_validate(Profile::from_entries(entries));
  }
}

TEST_CASE("young deletes alternatives until a strict condorcet winner appears") {
  auto p1 = young_scores(fixture("P1"));
  CHECK(p1["a"] == 2);
  CHECK(p1["b"] == 1);
  CHECK(p1["c"] == 2);
  CHECK(p1["d"] == 2);
  CHECK(p1["e"] == 3);
  CHECK(young(fixture("P1")) == WinnerSet{"b"});

  auto p4 = young_scores(fixture("P4"));
  CHECK(p4["a"] == 3);
  CHECK(p4["b"] == 1);
  CHECK(p4["c"] == 2);
  CHECK(p4["d"] == 3);
  CHECK(young(fixture("P4")) == WinnerSet{"b"});

  Profile cw = parse_profile("2: a>b>c\n1: b>c>a");
  CHECK(young_scores(cw)["a"] == 0);
  CHECK(young(cw) == WinnerSet{"a"});
}

TEST_CASE("young subset enumeration matches the strict-beat count") {
  // Restriction never changes pairwise supports, so the minimum number of
  // deletions is exactly the number of opponents the candidate fails to beat.
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 200; ++trial) {
    int n_alts = 2 + static_cast<int>(rng() % 4);
    std::vector<Alternative> alts;
    for (int i = 0; i < n_alts; ++i) alts.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::pair<Ranking, Rational>> entries;
    int voters = 1 + static_cast<int>(rng() % 6);
    for (int v = 0; v < voters; ++v) {
      std::vector<Alternative> order = alts;
      std::shuffle(order.begin(), order.end(), rng);
      entries.emplace_back(Ranking(order), Rational(1));
    }
    Profile p = Profile::from_entries(entries);
    MarginMatrix m(p);
    auto scores = young_scores(p);
    for (const auto& a : p.sorted_alternatives()) {
      int not_beaten = 0;
      for (const auto& b : p.sorted_alternatives()) {
        if (a != b && !m.strictly_beats(a, b)) ++not_beaten;
      }
      CHECK(scores[a] == not_beaten);
    }
  }
}

TEST_CASE("kemeny minimizes weighted pairwise disagreement") {
  // P1's majority digraph needs two edge reversals to become acyclic, and
  // both minimal reversal sets are realizable, so the optimum is tied between
  // a>b>c>d>e and b>c>d>e>a and the winner set is {a, b}.
  KemenyResult p1 = kemeny_full(fixture("P1"));
  CHECK(p1.min_disagreement == 12);
  REQUIRE(p1.optimal_orderings.size() == 2);
  CHECK(p1.optimal_orderings[0].to_string() == "a>b>c>d>e");
  CHECK(p1.optimal_orderings[1].to_string() == "b>c>d>e>a");
  CHECK(p1.winners == WinnerSet{"a", "b"});

  CHECK(kemeny(parse_profile("2: a>b>c")) == WinnerSet{"a"});

  Profile cycle = parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b");
  CHECK(kemeny(cycle) == WinnerSet{"a", "b", "c"});
}

TEST_CASE("kemeny agrees with a per-ballot kendall-tau oracle") {
  // Second route: score orderings by summing Kendall-tau distances to each
  // unit ballot instead of using the margin matrix.
  for (const char* name : {"P1", "P3", "P4", "E1a"}) {
    CAPTURE(name);
    Profile p = fixture(name);
    std::vector<std::vector<Alternative>> ballots;
    for (const auto& [ranking, weight] : p.entries()) {
      for (long i = 0; i < weight.get_num().get_si(); ++i) ballots.push_back(ranking.order());
    }
    std::vector<Alternative> order = p.sorted_alternatives();
    Rational best(-1);
    std::set<Alternative> tops;
    do {
      long score = 0;
      for (const auto& ballot : ballots) {
        auto pos = [&](const Alternative& x) {
          return std::find(ballot.begin(), ballot.end(), x) - ballot.begin();
        };
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (pos(order[i]) > pos(order[j])) ++score;
          }
        }
      }
      if (best < 0 || Rational(score) < best) {
        best = score;
        tops.clear();
      }
      if (Rational(score) == best) tops.insert(order.front());
    } while (std::next_permutation(order.begin(), order.end()));
    KemenyResult result = kemeny_full(p);
    CHECK(result.min_disagreement == best);
    CHECK(result.winners == WinnerSet(tops.begin(), tops.end()));
  }
}

TEST_CASE("nanson eliminates strictly-below-average scores per round") {
  Profile p2 = fixture("P2");
  auto trace = nanson_trace(p2, parse_weights("5,4,3,2,1"));
  REQUIRE(trace.size() == 3);
  CHECK(trace[0].scores["a"] == 5);
  CHECK(trace[0].scores["b"] == 8);
  CHECK(trace[0].scores["c"] == 6);
  CHECK(trace[0].scores["d"] == 4);
  CHECK(trace[0].scores["e"] == 7);
  CHECK(trace[0].average == 6);
  CHECK(trace[0].eliminated == std::vector<Alternative>{"a", "d"});
  CHECK(trace[1].eliminated == std::vector<Alternative>{"c"});
  CHECK(trace[2].eliminated.empty());
  CHECK(nanson(p2, parse_weights("5,4,3,2,1")) == WinnerSet{"b", "e"});

  SUBCASE("default weights are per-round borda, matching the walkthrough") {
    auto default_trace = nanson_trace(p2);
    REQUIRE(default_trace.size() == 3);
    CHECK(default_trace[1].scores["b"] == 5);
    CHECK(default_trace[1].scores["c"] == 3);
    CHECK(default_trace[1].scores["e"] == 4);
    CHECK(default_trace[1].average == 4);  // e sits exactly at the average and survives
    CHECK(nanson(p2) == WinnerSet{"b", "e"});
  }
  SUBCASE("unanimous profile") {
    CHECK(nanson(parse_profile("1: a>b>c")) == WinnerSet{"a"});
  }
  SUBCASE("weights must strictly decrease") {
    CHECK_THROWS_AS(nanson(p2, parse_weights("1,1,1,1,1")), std::invalid_argument);
  }
}

TEST_CASE("minimax worst losses under both conventions") {
  Profile p3 = fixture("P3");
  auto margins_worst = minimax_worst_losses(p3, MinimaxConvention::Margins);
  CHECK(margins_worst["a"] == 3);
  CHECK(margins_worst["b"] == 1);
  CHECK(margins_worst["c"] == 1);
  CHECK(margins_worst["d"] == 1);
  auto wv_worst = minimax_worst_losses(p3, MinimaxConvention::WinningVotes);
  CHECK(wv_worst["a"] == 4);
  CHECK(wv_worst["b"] == 3);
  CHECK(wv_worst["c"] == 3);
  CHECK(wv_worst["d"] == 3);
  for (auto convention : {MinimaxConvention::Margins, MinimaxConvention::WinningVotes}) {
    WinnerSet winners = minimax(p3, convention);
    CHECK(std::find(winners.begin(), winners.end(), "b") != winners.end());
    CHECK(std::find(winners.begin(), winners.end(), "a") == winners.end());
  }

  Profile cw = parse_profile("2: a>b>c\n1: b>c>a");
  CHECK(minimax_worst_losses(cw, MinimaxConvention::Margins)["a"] == 0);
  CHECK(minimax(cw) == WinnerSet{"a"});
}

TEST_CASE("fishburn keeps the alternatives nobody improves on") {
  Profile p4 = fixture("P4");
  MarginMatrix m(p4);
  CHECK(fishburn_dominates(m, "b", "a"));
  CHECK(fishburn_dominates(m, "b", "c"));
  CHECK(fishburn_dominates(m, "b", "d"));
  CHECK_FALSE(fishburn_dominates(m, "a", "b"));
  CHECK_FALSE(fishburn_dominates(m, "a", "c"));
  CHECK(fishburn(p4) == WinnerSet{"b"});

  Profile cycle = parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b");
  CHECK(fishburn(cycle) == WinnerSet{"a", "b", "c"});
}

TEST_CASE("bucklin scores are majority cutoffs") {
  auto p5 = bucklin_scores(fixture("P5"));
  CHECK(p5["a"] == 2);
  CHECK(p5["b"] == 2);
  CHECK(p5["c"] == 3);
  CHECK(bucklin(fixture("P5")) == WinnerSet{"a", "b"});

  CHECK(bucklin(parse_profile("3: a>b")) == WinnerSet{"a"});
  CHECK(bucklin_scores(parse_profile("3: a>b"))["a"] == 1);

  auto p1 = bucklin_scores(fixture("P1"));
  CHECK(p1["a"] == 3);
  CHECK(p1["b"] == 2);
  CHECK(p1["c"] == 3);
  CHECK(p1["d"] == 3);
  CHECK(p1["e"] == 4);
  CHECK(bucklin(fixture("P1")) == WinnerSet{"b"});

  // Rational weights: the majority threshold is exactly half the unit mass.
  auto e3 = bucklin_scores(fixture("E3"));
  CHECK(e3["a"] == 2);
  CHECK(e3["b"] == 2);
  CHECK(e3["c"] == 3);
  CHECK(bucklin(fixture("E3")) == WinnerSet{"a", "b"});
}

TEST_CASE("schwartz rule returns the schwartz set") {
  CHECK(schwartz_rule(fixture("E3")) == WinnerSet{"a"});
  CHECK(schwartz_rule(parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b")) ==
        WinnerSet{"a", "b", "c"});
}

TEST_CASE("every registry rule returns a nonempty winner set") {
  std::mt19937_64 rng(1003);
  for (int trial = 0; trial < 40; ++trial) {
    int n_alts = 2 + static_cast<int>(rng() % 3);
    std::vector<Alternative> alts;
    for (int i = 0; i < n_alts; ++i) alts.emplace_back(1, static_cast<char>('a' + i));
    std::vector<std::pair<Ranking, Rational>> entries;
    int voters = 1 + static_cast<int>(rng() % 5);
    for (int v = 0; v < voters; ++v) {
      std::vector<Alternative> order = alts;
      std::shuffle(order.begin(), order.end(), rng);
      entries.emplace_back(Ranking(order), Rational(1));
    }
    Profile p = Profile::from_entries(entries);
    for (const auto& d : rule_registry()) {
      RuleOptions options;
      if (d.needs_weights) options.weights = borda_weights(p.num_alternatives());
      WinnerSet winners = apply_rule(d.name, p, options);
      CAPTURE(d.name);
      CHECK_FALSE(winners.empty());
      CHECK(std::is_sorted(winners.begin(), winners.end()));
    }
  }
}

TEST_CASE("ballot order does not matter and relabeling maps winners through") {
  Profile p = fixture("P3");
  Profile reordered = parse_profile("2: d>c>a>b\n1: a>b>c>d\n2: b>c>d>a");
  CHECK(p == reordered);

  std::map<Alternative, Alternative> mapping = {{"a", "z"}, {"b", "y"}, {"c", "x"}, {"d", "w"}};
  std::map<Alternative, Alternative> inverse;
  for (const auto& [k, v] : mapping) inverse[v] = k;
  Profile renamed = relabeled(p, mapping);
  for (const auto& d : rule_registry()) {
    RuleOptions options;
    if (d.needs_weights) options.weights = borda_weights(p.num_alternatives());
    CAPTURE(d.name);
    CHECK(apply_rule(d.name, p, options) ==
          mapped_back(apply_rule(d.name, renamed, options), inverse));
  }
}

TEST_CASE("condorcet-consistent rules select the weak winners on preorder profiles") {
  // Exhaustive over anonymous unit profiles with three alternatives and up to
  // five voters: whenever weak Condorcet winners exist and the majority
  // relation is a total preorder, the eight condorcet-consistent rules all
  // select exactly that set.
  const std::vector<std::string> rules = {"black",   "nanson",  "dodgson", "young",
                                          "kemeny",  "minimax", "fishburn", "schwartz"};
  long preorder_profiles = 0;
  for_each_anonymous_profile(3, 5, [&](const Profile& p) {
    auto weak = weak_condorcet_winners(p);
    if (weak.empty() || !is_total_preorder(pm_relation(p))) return true;
    ++preorder_profiles;
    for (const auto& name : rules) {
      CAPTURE(name);
      CAPTURE(p.to_ballot_text());
      CHECK(apply_rule(name, p) == weak);
    }
    return true;
  });
  CHECK(preorder_profiles > 100);
}

TEST_CASE("strictly decreasing scoring selects pos-maximal alternatives when comparable") {
  // Exhaustive over anonymous unit profiles with three alternatives and up to
  // four voters, restricted to pos-compatible profiles.
  long compatible = 0;
  for_each_anonymous_profile(3, 4, [&](const Profile& p) {
    DominanceRelation pos = pos_relation(p);
    if (!is_total_preorder(pos)) return true;
    ++compatible;
    CAPTURE(p.to_ballot_text());
    CHECK(borda(p) == pos.maximal_set());
    return true;
  });
  CHECK(compatible > 50);
}
