#include <random>

#include "doctest.h"
#include "socialchoice/dominance.hpp"
#include "socialchoice/fixtures.hpp"
#include "socialchoice/process.hpp"

using namespace socialchoice;

namespace {

Profile random_profile(std::mt19937_64& rng, int max_alts, int max_voters) {
  int n_alts = 2 + static_cast<int>(rng() % static_cast<unsigned>(max_alts - 1));
  std::vector<Alternative> alts;
  for (int i = 0; i < n_alts; ++i) alts.emplace_back(1, static_cast<char>('a' + i));
  int voters = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_voters));
  std::vector<std::pair<Ranking, Rational>> entries;
  for (int v = 0; v < voters; ++v) {
    std::vector<Alternative> order = alts;
    std::shuffle(order.begin(), order.end(), rng);
    entries.emplace_back(Ranking(order), Rational(1));
  }
  return Profile::from_entries(entries);
}

}  // namespace

TEST_CASE("pairwise majority dominance on the example profiles") {
  Profile e1a = fixture("E1a");
  CHECK(pm_dominates(e1a, "a", "b"));

  Profile p1 = fixture("P1");
  CHECK(pm_dominates(p1, "a", "b"));

  Profile e1b = fixture("E1b");
  CHECK_FALSE(pm_dominates(e1b, "a", "b"));
  CHECK(pm_dominates(e1b, "b", "a"));

  CHECK_THROWS_AS(pm_dominates(e1a, "a", "a"), std::invalid_argument);
  CHECK_THROWS_AS(pm_dominates(e1a, "a", "x"), std::out_of_range);
}

TEST_CASE("positional dominance on the example profiles") {
  Profile e1a = fixture("E1a");
  CHECK_FALSE(pos_dominates(e1a, "a", "b"));

  Profile e1b = fixture("E1b");
  CHECK(pos_dominates(e1b, "a", "b"));

  Profile e3 = fixture("E3");
  CHECK(pos_dominates(e3, "b", "a"));
  CHECK_FALSE(pos_dominates(e3, "a", "b"));
}

TEST_CASE("neither dominance relation implies the other") {
  // E1a: majority dominance without positional dominance; E1b: the reverse.
  Profile e1a = fixture("E1a");
  CHECK((pm_dominates(e1a, "a", "b") && !pos_dominates(e1a, "a", "b")));
  Profile e1b = fixture("E1b");
  CHECK((pos_dominates(e1b, "a", "b") && !pm_dominates(e1b, "a", "b")));
}

TEST_CASE("relation assembly matches the pairwise operations") {
  Profile e2 = fixture("E2");
  DominanceRelation pos = pos_relation(e2);
  CHECK(pos.holds("b", "a"));
  CHECK(pos.holds("a", "c"));
  CHECK(pos.holds("b", "c"));
  CHECK_FALSE(pos.holds("a", "b"));
  CHECK_FALSE(pos.holds("c", "a"));

  DominanceRelation pm = pm_relation(fixture("E1a"));
  CHECK(pm.complete());

  Profile cycle = parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b");
  DominanceRelation pm_cycle = pm_relation(cycle);
  CHECK(pm_cycle.holds("a", "b"));
  CHECK(pm_cycle.holds("b", "c"));
  CHECK(pm_cycle.holds("c", "a"));
  CHECK(pm_cycle.strict("a", "b"));
}

TEST_CASE("pm relations are complete and pos relations transitive") {
  std::mt19937_64 rng(911);
  for (int trial = 0; trial < 200; ++trial) {
    Profile p = random_profile(rng, 5, 7);
    CHECK(pm_relation(p).complete());
    CHECK(pos_relation(p).transitive());
  }
}

TEST_CASE("total preorder detection") {
  Profile cycle = parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b");
  CHECK_FALSE(is_total_preorder(pm_relation(cycle)));

  CHECK(is_total_preorder(pm_relation(fixture("E3"))));
  CHECK(is_total_preorder(pos_relation(fixture("E2"))));
}

TEST_CASE("condorcet cycle detection") {
  CHECK(has_condorcet_cycle(parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b")));
  CHECK_FALSE(has_condorcet_cycle(parse_profile("1: a>b\n1: b>a\n1: a>b")));
  CHECK_FALSE(has_condorcet_cycle(fixture("E3")));
  // P1 carries the strict cycle a -> b -> d -> a (and has no weak Condorcet
  // winner, which is why the two-stage rules fall through to scoring on it).
  CHECK(has_condorcet_cycle(fixture("P1")));
}

TEST_CASE("schwartz set via condensation") {
  SUBCASE("strict condorcet winner is a singleton") {
    Profile p = parse_profile("2: a>b>c\n1: b>c>a");
    CHECK(schwartz_set(p) == std::vector<Alternative>{"a"});
  }
  SUBCASE("symmetric cycle keeps everyone") {
    Profile cycle = parse_profile("1: a>b>c\n1: b>c>a\n1: c>a>b");
    CHECK(schwartz_set(cycle) == std::vector<Alternative>{"a", "b", "c"});
  }
  SUBCASE("pairwise ties pull outsiders in") {
    // In P4, a only ties c and d, so no proper subset strictly beats its
    // complement and the minimal dominant set is the full set.
    CHECK(schwartz_set(fixture("P4")) == std::vector<Alternative>{"a", "b", "c", "d"});
  }
  SUBCASE("P1 is one big strongly connected component") {
    CHECK(schwartz_set(fixture("P1")) == std::vector<Alternative>{"a", "b", "c", "d", "e"});
  }
}

TEST_CASE("schwartz set agrees with the brute-force oracle") {
  for (const auto& [name, text] : fixture_texts()) {
    CAPTURE(name);
    Profile p = parse_profile(text);
    CHECK(schwartz_set(p) == schwartz_set_bruteforce(p));
  }
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 1000; ++trial) {
    Profile p = random_profile(rng, 5, 7);
    auto efficient = schwartz_set(p);
    CHECK(efficient == schwartz_set_bruteforce(p));
    CHECK_FALSE(efficient.empty());
  }
}

TEST_CASE("dominant sets form a chain, so minimal means minimum cardinality") {
  std::mt19937_64 rng(7781);
  for (int trial = 0; trial < 300; ++trial) {
    Profile p = random_profile(rng, 5, 6);
    MarginMatrix m(p);
    auto alts = p.sorted_alternatives();
    std::size_t n = alts.size();
    std::vector<std::uint32_t> dominant;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) {
        if (!(mask & (1u << i))) continue;
        for (std::size_t o = 0; o < n && ok; ++o) {
          if (mask & (1u << o)) continue;
          if (m.weakly_beats(alts[o], alts[i])) ok = false;
        }
      }
      if (ok) dominant.push_back(mask);
    }
    REQUIRE_FALSE(dominant.empty());
    for (std::uint32_t x : dominant) {
      for (std::uint32_t y : dominant) {
        CHECK(((x & y) == x || (x & y) == y));
      }
    }
  }
}

TEST_CASE("pm relations restrict consistently on exact plackett-luce profiles") {
  ProcessSpec spec;
  spec.family = Family::Gumbel;
  spec.params = {{"a", 1.7}, {"b", 0.9}, {"c", 0.4}, {"d", -0.2}};
  std::vector<Alternative> all = {"a", "b", "c", "d"};
  Profile full = plackett_luce_exact(spec, all);
  DominanceRelation full_pm = pm_relation(full);
  for (std::uint32_t mask = 1; mask < (1u << 4); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::vector<Alternative> subset;
    for (std::size_t i = 0; i < 4; ++i) {
      if (mask & (1u << i)) subset.push_back(all[i]);
    }
    CHECK(pm_relation(full.restrict(subset)) == full_pm.restricted_to(subset));
    CHECK(pm_relation(plackett_luce_exact(spec, subset)) == full_pm.restricted_to(subset));
  }
}

TEST_CASE("pos restriction consistency fails on the two-voter example") {
  Profile e2 = fixture("E2");
  CHECK(pos_dominates(e2, "b", "a"));
  CHECK_FALSE(pos_dominates(e2, "a", "b"));
  Profile pair = e2.restrict({"a", "b"});
  CHECK(pos_dominates(pair, "a", "b"));
  CHECK(pos_dominates(pair, "b", "a"));
}

TEST_CASE("relation adjacency text is deterministic") {
  CHECK(pm_relation(fixture("E3")).to_adjacency_text() == "a: b c\nb: c\nc:\n");
  CHECK(pos_relation(fixture("E3")).to_adjacency_text() == "a: c\nb: a c\nc:\n");
}
