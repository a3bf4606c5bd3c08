#include "socialchoice/rules.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace socialchoice {

namespace {

WinnerSet argmax(const std::map<Alternative, Rational>& scores) {
  WinnerSet winners;
  const Rational* best = nullptr;
  for (const auto& [a, s] : scores) {
    if (!best || s > *best) best = &s;
  }
  for (const auto& [a, s] : scores) {
    if (s == *best) winners.push_back(a);
  }
  return winners;
}

template <typename Score>
WinnerSet argmin(const std::map<Alternative, Score>& scores) {
  WinnerSet winners;
  const Score* best = nullptr;
  for (const auto& [a, s] : scores) {
    if (!best || s < *best) best = &s;
  }
  for (const auto& [a, s] : scores) {
    if (s == *best) winners.push_back(a);
  }
  return winners;
}

void validate_weights(const WeightsVector& w, std::size_t m) {
  if (w.size() != m) {
    throw std::invalid_argument("weights length " + std::to_string(w.size()) +
                                " does not match " + std::to_string(m) + " alternatives");
  }
  if (!nonincreasing(w)) throw std::invalid_argument("weights must be nonincreasing");
}

}  // namespace

WeightsVector borda_weights(std::size_t m) {
  WeightsVector w;
  for (std::size_t i = 0; i < m; ++i) w.emplace_back(static_cast<long>(m - i));
  return w;
}

WeightsVector plurality_weights(std::size_t m) {
  WeightsVector w(m, Rational(0));
  if (m) w[0] = 1;
  return w;
}

WeightsVector antiplurality_weights(std::size_t m) {
  WeightsVector w(m, Rational(1));
  if (m) w[m - 1] = 0;
  return w;
}

bool nonincreasing(const WeightsVector& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] < w[i + 1]) return false;
  }
  return true;
}

bool strictly_decreasing(const WeightsVector& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] <= w[i + 1]) return false;
  }
  return true;
}

WeightsVector parse_weights(const std::string& comma_separated) {
  WeightsVector w;
  std::stringstream ss(comma_separated);
  std::string token;
  while (std::getline(ss, token, ',')) {
    w.push_back(parse_rational(token));
  }
  if (w.empty()) throw std::invalid_argument("empty weights vector");
  return w;
}

std::map<Alternative, Rational> scoring_scores(const Profile& profile, const WeightsVector& w) {
  validate_weights(w, profile.num_alternatives());
  std::map<Alternative, Rational> scores;
  for (const auto& a : profile.alternatives()) scores[a] = 0;
  for (const auto& [ranking, weight] : profile.entries()) {
    const auto& order = ranking.order();
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      scores[order[pos]] += weight * w[pos];
    }
  }
  return scores;
}

WinnerSet scoring_rule(const Profile& profile, const WeightsVector& w) {
  return argmax(scoring_scores(profile, w));
}

WinnerSet plurality(const Profile& profile) {
  return scoring_rule(profile, plurality_weights(profile.num_alternatives()));
}

WinnerSet antiplurality(const Profile& profile) {
  return scoring_rule(profile, antiplurality_weights(profile.num_alternatives()));
}

WinnerSet borda(const Profile& profile) {
  return scoring_rule(profile, borda_weights(profile.num_alternatives()));
}

std::vector<Alternative> weak_condorcet_winners(const Profile& profile) {
  MarginMatrix m(profile);
  std::vector<Alternative> winners;
  for (const auto& a : m.alternatives()) {
    bool beats_or_ties_all = true;
    for (const auto& b : m.alternatives()) {
      if (a != b && !m.weakly_beats(a, b)) {
        beats_or_ties_all = false;
        break;
      }
    }
    if (beats_or_ties_all) winners.push_back(a);
  }
  return winners;
}

std::optional<Alternative> strict_condorcet_winner(const Profile& profile) {
  MarginMatrix m(profile);
  for (const auto& a : m.alternatives()) {
    bool beats_all = true;
    for (const auto& b : m.alternatives()) {
      if (a != b && !m.strictly_beats(a, b)) {
        beats_all = false;
        break;
      }
    }
    if (beats_all) return a;
  }
  return std::nullopt;
}

WinnerSet black(const Profile& profile, const std::optional<WeightsVector>& w) {
  auto weak = weak_condorcet_winners(profile);
  if (!weak.empty()) return weak;
  return scoring_rule(profile, w ? *w : borda_weights(profile.num_alternatives()));
}

namespace {

struct UnitBallots {
  std::vector<std::vector<Alternative>> ballots;  // one per unit of weight
};

UnitBallots expand_to_unit_ballots(const Profile& profile) {
  if (!profile.has_integer_weights()) {
    throw std::invalid_argument("dodgson requires integer ballot weights");
  }
  if (profile.total_weight() > 8) {
    throw std::invalid_argument("dodgson search supports at most 8 ballots");
  }
  UnitBallots out;
  for (const auto& [ranking, weight] : profile.entries()) {
    long copies = weight.get_num().get_si();
    for (long i = 0; i < copies; ++i) out.ballots.push_back(ranking.order());
  }
  return out;
}

// Exhaustive search over per-ballot lifts of `candidate`. Lifting a candidate
// k steps in a ballot crosses exactly the k alternatives directly above it,
// flipping one unit of pairwise support each; nothing else ever helps.
long dodgson_score_for(const Profile& profile, const UnitBallots& units,
                       const Alternative& candidate) {
  MarginMatrix m(profile);
  const auto& alts = m.alternatives();
  std::size_t n_alts = alts.size();
  auto idx = [&](const Alternative& a) {
    return static_cast<std::size_t>(std::lower_bound(alts.begin(), alts.end(), a) - alts.begin());
  };
  // Flips still required against each opponent: f crossings satisfy
  // support(c,x) + f > support(x,c) - f.
  std::vector<long> required(n_alts, 0);
  long total_required = 0;
  for (std::size_t j = 0; j < n_alts; ++j) {
    if (alts[j] == candidate) continue;
    Rational deficit = m.support(alts[j], candidate) - m.support(candidate, alts[j]);
    if (deficit >= 0) {
      long f = 0;  // smallest integer with 2f > deficit
      while (Rational(2 * f) <= deficit) ++f;
      required[j] = f;
      total_required += f;
    }
  }
  if (total_required == 0) return 0;

  std::size_t n_ballots = units.ballots.size();
  // crossings[i][k] = index of the alternative crossed by the k-th lift step
  // in ballot i (the alternative at position pos(c)-1-k).
  std::vector<std::vector<std::size_t>> crossings(n_ballots);
  for (std::size_t i = 0; i < n_ballots; ++i) {
    const auto& order = units.ballots[i];
    std::size_t cpos = static_cast<std::size_t>(
        std::find(order.begin(), order.end(), candidate) - order.begin());
    for (std::size_t k = 0; k < cpos; ++k) {
      crossings[i].push_back(idx(order[cpos - 1 - k]));
    }
  }

  long best = 0;
  for (std::size_t i = 0; i < n_ballots; ++i) best += static_cast<long>(crossings[i].size());

  std::vector<long> have(n_alts, 0);
  std::function<void(std::size_t, long, long)> search = [&](std::size_t ballot, long cost,
                                                            long shortfall) {
    if (shortfall == 0) {
      best = std::min(best, cost);
      return;
    }
    if (ballot == n_ballots || cost + shortfall >= best) return;
    long max_lift = static_cast<long>(crossings[ballot].size());
    // lift = 0 first keeps the search biased toward cheap solutions.
    for (long lift = 0; lift <= max_lift; ++lift) {
      if (lift > 0) {
        std::size_t crossed = crossings[ballot][lift - 1];
        ++have[crossed];
        if (have[crossed] <= required[crossed]) --shortfall;
      }
      search(ballot + 1, cost + lift, shortfall);
      if (lift == max_lift) {
        for (long k = lift; k > 0; --k) {
          std::size_t crossed = crossings[ballot][k - 1];
          if (have[crossed] <= required[crossed]) ++shortfall;
          --have[crossed];
        }
      }
    }
  };
  search(0, 0, total_required);
  return best;
}

}  // namespace

std::map<Alternative, long> dodgson_scores(const Profile& profile) {
  if (profile.num_alternatives() > 6) {
    throw std::invalid_argument("dodgson search supports at most 6 alternatives");
  }
  UnitBallots units = expand_to_unit_ballots(profile);
  if (units.ballots.size() > 8) {
    throw std::invalid_argument("dodgson search supports at most 8 ballots");
  }
  std::map<Alternative, long> scores;
  for (const auto& a : profile.sorted_alternatives()) {
    scores[a] = dodgson_score_for(profile, units, a);
  }
  return scores;
}

WinnerSet dodgson(const Profile& profile) {
  if (auto cw = strict_condorcet_winner(profile)) return {*cw};
  return argmin(dodgson_scores(profile));
}

std::map<Alternative, int> young_scores(const Profile& profile) {
  std::size_t n = profile.num_alternatives();
  if (n > 8) throw std::invalid_argument("young supports at most 8 alternatives");
  MarginMatrix m(profile);
  const auto& alts = m.alternatives();
  std::map<Alternative, int> scores;
  for (std::size_t ci = 0; ci < n; ++ci) {
    int best = static_cast<int>(n) - 1;  // deleting everyone else always works
    // Keep-sets containing the candidate; deletions = alternatives left out.
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (!(mask & (1u << ci))) continue;
      bool condorcet = true;
      for (std::size_t j = 0; j < n && condorcet; ++j) {
        if (j == ci || !(mask & (1u << j))) continue;
        if (!m.strictly_beats(alts[ci], alts[j])) condorcet = false;
      }
      if (condorcet) {
        best = std::min(best, static_cast<int>(n) - __builtin_popcount(mask));
      }
    }
    scores[alts[ci]] = best;
  }
  return scores;
}

WinnerSet young(const Profile& profile) { return argmin(young_scores(profile)); }

KemenyResult kemeny_full(const Profile& profile) {
  std::size_t n = profile.num_alternatives();
  if (n > 8) throw std::invalid_argument("kemeny supports at most 8 alternatives");
  MarginMatrix m(profile);
  std::vector<Alternative> order = m.alternatives();
  KemenyResult result;
  bool first = true;
  do {
    Rational disagreement = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        disagreement += m.support(order[j], order[i]);
      }
    }
    if (first || disagreement < result.min_disagreement) {
      result.min_disagreement = disagreement;
      result.optimal_orderings.clear();
      first = false;
    }
    if (disagreement == result.min_disagreement) {
      result.optimal_orderings.emplace_back(order);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::set<Alternative> tops;
  for (const auto& r : result.optimal_orderings) tops.insert(r.order().front());
  result.winners.assign(tops.begin(), tops.end());
  return result;
}

WinnerSet kemeny(const Profile& profile) { return kemeny_full(profile).winners; }

std::vector<NansonRound> nanson_trace(const Profile& profile,
                                      const std::optional<WeightsVector>& w) {
  if (w) {
    if (w->size() != profile.num_alternatives()) {
      throw std::invalid_argument("weights length does not match alternatives");
    }
    if (!strictly_decreasing(*w)) {
      throw std::invalid_argument("nanson requires strictly decreasing weights");
    }
  }
  std::vector<NansonRound> rounds;
  std::vector<Alternative> current = profile.sorted_alternatives();
  while (true) {
    Profile stage = profile.restrict(current);
    WeightsVector weights;
    if (w) {
      weights.assign(w->begin(), w->begin() + static_cast<long>(current.size()));
    } else {
      weights = borda_weights(current.size());
    }
    NansonRound round;
    round.candidates = current;
    round.scores = scoring_scores(stage, weights);
    Rational sum = 0;
    for (const auto& [a, s] : round.scores) sum += s;
    round.average = sum / Rational(static_cast<long>(current.size()));
    for (const auto& [a, s] : round.scores) {
      if (s < round.average) round.eliminated.push_back(a);
    }
    bool done = round.eliminated.empty();
    if (!done) {
      std::vector<Alternative> next;
      std::set<Alternative> out(round.eliminated.begin(), round.eliminated.end());
      for (const auto& a : current) {
        if (!out.count(a)) next.push_back(a);
      }
      current = std::move(next);
    }
    rounds.push_back(std::move(round));
    if (done) break;
  }
  return rounds;
}

WinnerSet nanson(const Profile& profile, const std::optional<WeightsVector>& w) {
  return nanson_trace(profile, w).back().candidates;
}

std::map<Alternative, Rational> minimax_worst_losses(const Profile& profile,
                                                     MinimaxConvention convention) {
  MarginMatrix m(profile);
  std::map<Alternative, Rational> worst;
  for (const auto& a : m.alternatives()) {
    Rational w(0);
    for (const auto& b : m.alternatives()) {
      if (a == b) continue;
      if (convention == MinimaxConvention::Margins) {
        w = std::max(w, m.margin(b, a));
      } else if (m.strictly_beats(b, a)) {
        w = std::max(w, m.support(b, a));
      }
    }
    worst[a] = w;
  }
  return worst;
}

WinnerSet minimax(const Profile& profile, MinimaxConvention convention) {
  return argmin(minimax_worst_losses(profile, convention));
}

bool fishburn_dominates(const MarginMatrix& m, const Alternative& x, const Alternative& y) {
  if (x == y) return false;
  const auto& alts = m.alternatives();
  bool strict = false;
  for (const auto& z : alts) {
    bool beats_x = z != x && m.strictly_beats(z, x);
    bool beats_y = z != y && m.strictly_beats(z, y);
    bool x_beats = z != x && m.strictly_beats(x, z);
    bool y_beats = z != y && m.strictly_beats(y, z);
    if (beats_x && !beats_y) return false;  // B(x) not contained in B(y)
    if (y_beats && !x_beats) return false;  // D(y) not contained in D(x)
    if ((beats_y && !beats_x) || (x_beats && !y_beats)) strict = true;
  }
  return strict;
}

WinnerSet fishburn(const Profile& profile) {
  MarginMatrix m(profile);
  WinnerSet winners;
  for (const auto& y : m.alternatives()) {
    bool dominated = false;
    for (const auto& x : m.alternatives()) {
      if (fishburn_dominates(m, x, y)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) winners.push_back(y);
  }
  return winners;
}

std::map<Alternative, int> bucklin_scores(const Profile& profile) {
  PositionalTally tally(profile);
  Rational half = tally.total_weight() / 2;
  std::map<Alternative, int> scores;
  for (const auto& a : tally.alternatives()) {
    for (std::size_t k = 1; k <= tally.num_positions(); ++k) {
      if (tally.cumulative(k, a) > half) {
        scores[a] = static_cast<int>(k);
        break;
      }
    }
  }
  return scores;
}

WinnerSet bucklin(const Profile& profile) { return argmin(bucklin_scores(profile)); }

WinnerSet schwartz_rule(const Profile& profile) { return schwartz_set(profile); }

const std::vector<RuleDescriptor>& rule_registry() {
  static const std::vector<RuleDescriptor> registry = {
      {.name = "plurality"},
      {.name = "antiplurality"},
      {.name = "borda", .strongly_pos_efficient = true},
      {.name = "scoring", .needs_weights = true, .accepts_weights = true},
      {.name = "black", .accepts_weights = true, .strongly_pm_efficient_on_compatible = true},
      {.name = "dodgson", .strongly_pm_efficient_on_compatible = true},
      {.name = "young", .strongly_pm_efficient_on_compatible = true},
      {.name = "kemeny", .strongly_pm_efficient_on_compatible = true},
      {.name = "nanson", .accepts_weights = true, .strongly_pm_efficient_on_compatible = true},
      {.name = "minimax", .strongly_pm_efficient_on_compatible = true},
      {.name = "fishburn", .strongly_pm_efficient_on_compatible = true},
      {.name = "bucklin"},
      {.name = "schwartz", .strongly_pm_efficient_on_compatible = true},
  };
  return registry;
}

const RuleDescriptor& rule_descriptor(const std::string& name) {
  for (const auto& d : rule_registry()) {
    if (d.name == name) return d;
  }
  throw std::invalid_argument("unknown rule: '" + name + "'");
}

WinnerSet apply_rule(const std::string& name, const Profile& profile, const RuleOptions& options) {
  const RuleDescriptor& d = rule_descriptor(name);
  if (d.needs_weights && !options.weights) {
    throw std::invalid_argument("rule '" + name + "' requires a weights vector");
  }
  if (options.weights && !d.needs_weights && !d.accepts_weights) {
    throw std::invalid_argument("rule '" + name + "' does not take a weights vector");
  }
  if (name == "plurality") return plurality(profile);
  if (name == "antiplurality") return antiplurality(profile);
  if (name == "borda") return borda(profile);
  if (name == "scoring") return scoring_rule(profile, *options.weights);
  if (name == "black") return black(profile, options.weights);
  if (name == "dodgson") return dodgson(profile);
  if (name == "young") return young(profile);
  if (name == "kemeny") return kemeny(profile);
  if (name == "nanson") return nanson(profile, options.weights);
  if (name == "minimax") return minimax(profile, options.minimax_convention);
  if (name == "fishburn") return fishburn(profile);
  if (name == "bucklin") return bucklin(profile);
  if (name == "schwartz") return schwartz_rule(profile);
  throw std::logic_error("rule registered but not dispatched: '" + name + "'");
}

}  // namespace socialchoice
