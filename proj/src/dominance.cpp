#include "socialchoice/dominance.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace socialchoice {

std::string dominance_kind_name(DominanceKind kind) {
  return kind == DominanceKind::PairwiseMajority ? "pm" : "pos";
}

DominanceRelation::DominanceRelation(DominanceKind kind, std::vector<Alternative> alternatives,
                                     std::vector<bool> holds)
    : kind_(kind), alternatives_(std::move(alternatives)), holds_(std::move(holds)) {
  if (!std::is_sorted(alternatives_.begin(), alternatives_.end())) {
    std::sort(alternatives_.begin(), alternatives_.end());
  }
  if (holds_.size() != alternatives_.size() * alternatives_.size()) {
    throw std::invalid_argument("dominance matrix size mismatch");
  }
}

std::size_t DominanceRelation::index(const Alternative& a) const {
  auto it = std::lower_bound(alternatives_.begin(), alternatives_.end(), a);
  if (it == alternatives_.end() || *it != a) {
    throw std::out_of_range("unknown alternative: '" + a + "'");
  }
  return static_cast<std::size_t>(it - alternatives_.begin());
}

bool DominanceRelation::holds(const Alternative& a, const Alternative& b) const {
  if (a == b) throw std::invalid_argument("dominance is undefined for identical alternatives");
  return holds_[index(a) * alternatives_.size() + index(b)];
}

bool DominanceRelation::strict(const Alternative& a, const Alternative& b) const {
  return holds(a, b) && !holds(b, a);
}

bool DominanceRelation::complete() const {
  std::size_t m = alternatives_.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!holds_[i * m + j] && !holds_[j * m + i]) return false;
    }
  }
  return true;
}

bool DominanceRelation::transitive() const {
  std::size_t m = alternatives_.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j || !holds_[i * m + j]) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == j || k == i) continue;
        if (holds_[j * m + k] && !holds_[i * m + k]) return false;
      }
    }
  }
  return true;
}

DominanceRelation DominanceRelation::restricted_to(const std::vector<Alternative>& subset) const {
  std::vector<Alternative> alts(subset.begin(), subset.end());
  std::sort(alts.begin(), alts.end());
  alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
  std::size_t m = alts.size();
  std::vector<bool> holds(m * m, false);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      holds[i * m + j] = this->holds(alts[i], alts[j]);
    }
  }
  return DominanceRelation(kind_, std::move(alts), std::move(holds));
}

std::vector<Alternative> DominanceRelation::maximal_set() const {
  std::vector<Alternative> maximal;
  std::size_t m = alternatives_.size();
  for (std::size_t i = 0; i < m; ++i) {
    bool dominates_all = true;
    for (std::size_t j = 0; j < m && dominates_all; ++j) {
      if (j != i && !holds_[i * m + j]) dominates_all = false;
    }
    if (dominates_all) maximal.push_back(alternatives_[i]);
  }
  return maximal;
}

std::string DominanceRelation::to_adjacency_text() const {
  std::string out;
  std::size_t m = alternatives_.size();
  for (std::size_t i = 0; i < m; ++i) {
    out += alternatives_[i];
    out += ':';
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i && holds_[i * m + j]) {
        out += ' ';
        out += alternatives_[j];
      }
    }
    out += '\n';
  }
  return out;
}

bool DominanceRelation::operator==(const DominanceRelation& other) const {
  return kind_ == other.kind_ && alternatives_ == other.alternatives_ && holds_ == other.holds_;
}

namespace {

void require_pair(const Profile& profile, const Alternative& a, const Alternative& b) {
  if (a == b) throw std::invalid_argument("dominance is undefined for identical alternatives");
  if (!profile.contains(a)) throw std::out_of_range("unknown alternative: '" + a + "'");
  if (!profile.contains(b)) throw std::out_of_range("unknown alternative: '" + b + "'");
}

bool pos_dominates(const PositionalTally& tally, const Alternative& a, const Alternative& b) {
  for (std::size_t j = 1; j <= tally.num_positions(); ++j) {
    if (tally.cumulative(j, a) < tally.cumulative(j, b)) return false;
  }
  return true;
}

// Strict-beat adjacency over lexicographic indices.
std::vector<std::vector<std::size_t>> strict_digraph(const MarginMatrix& m) {
  const auto& alts = m.alternatives();
  std::vector<std::vector<std::size_t>> adj(alts.size());
  for (std::size_t i = 0; i < alts.size(); ++i) {
    for (std::size_t j = 0; j < alts.size(); ++j) {
      if (i != j && m.strictly_beats(alts[i], alts[j])) adj[i].push_back(j);
    }
  }
  return adj;
}

}  // namespace

bool pm_dominates(const Profile& profile, const Alternative& a, const Alternative& b) {
  require_pair(profile, a, b);
  return margins(profile).weakly_beats(a, b);
}

bool pos_dominates(const Profile& profile, const Alternative& a, const Alternative& b) {
  require_pair(profile, a, b);
  return pos_dominates(positional_tally(profile), a, b);
}

DominanceRelation pm_relation(const Profile& profile) {
  MarginMatrix m(profile);
  const auto& alts = m.alternatives();
  std::size_t n = alts.size();
  std::vector<bool> holds(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) holds[i * n + j] = m.weakly_beats(alts[i], alts[j]);
    }
  }
  return DominanceRelation(DominanceKind::PairwiseMajority, alts, std::move(holds));
}

DominanceRelation pos_relation(const Profile& profile) {
  PositionalTally tally(profile);
  const auto& alts = tally.alternatives();
  std::size_t n = alts.size();
  std::vector<bool> holds(n * n, false);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) holds[i * n + j] = pos_dominates(tally, alts[i], alts[j]);
    }
  }
  return DominanceRelation(DominanceKind::Positional, alts, std::move(holds));
}

bool is_total_preorder(const DominanceRelation& relation) {
  return relation.complete() && relation.transitive();
}

bool has_condorcet_cycle(const Profile& profile) {
  auto adj = strict_digraph(margins(profile));
  std::size_t n = adj.size();
  // 0 = unvisited, 1 = on stack, 2 = done.
  std::vector<int> state(n, 0);
  std::function<bool(std::size_t)> dfs = [&](std::size_t v) {
    state[v] = 1;
    for (std::size_t w : adj[v]) {
      if (state[w] == 1) return true;
      if (state[w] == 0 && dfs(w)) return true;
    }
    state[v] = 2;
    return false;
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (state[v] == 0 && dfs(v)) return true;
  }
  return false;
}

std::vector<Alternative> schwartz_set(const Profile& profile) {
  MarginMatrix m(profile);
  const auto& alts = m.alternatives();
  std::size_t n = alts.size();
  // Weak digraph: edge i -> j iff alts[i] weakly beats alts[j].
  auto edge = [&](std::size_t i, std::size_t j) { return m.weakly_beats(alts[i], alts[j]); };
  // Kosaraju: order by finish time on the forward graph, then collect
  // components on the transpose.
  std::vector<int> visited(n, 0);
  std::vector<std::size_t> order;
  std::function<void(std::size_t)> dfs1 = [&](std::size_t v) {
    visited[v] = 1;
    for (std::size_t w = 0; w < n; ++w) {
      if (w != v && !visited[w] && edge(v, w)) dfs1(w);
    }
    order.push_back(v);
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (!visited[v]) dfs1(v);
  }
  std::vector<int> component(n, -1);
  int components = 0;
  std::function<void(std::size_t, int)> dfs2 = [&](std::size_t v, int c) {
    component[v] = c;
    for (std::size_t w = 0; w < n; ++w) {
      if (w != v && component[w] == -1 && edge(w, v)) dfs2(w, c);
    }
  };
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (component[*it] == -1) dfs2(*it, components++);
  }
  // The weak relation is complete, so the condensation is a total order and
  // exactly one component has no incoming edge.
  std::vector<bool> has_incoming(components, false);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (v != w && component[v] != component[w] && edge(v, w)) {
        has_incoming[component[w]] = true;
      }
    }
  }
  std::vector<Alternative> result;
  for (int c = 0; c < components; ++c) {
    if (has_incoming[c]) continue;
    for (std::size_t v = 0; v < n; ++v) {
      if (component[v] == c) result.push_back(alts[v]);
    }
    return result;
  }
  throw std::logic_error("no source component in a complete relation");
}

std::vector<Alternative> schwartz_set_bruteforce(const Profile& profile) {
  MarginMatrix m(profile);
  const auto& alts = m.alternatives();
  std::size_t n = alts.size();
  if (n > 12) throw std::invalid_argument("schwartz_set_bruteforce supports at most 12 alternatives");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t x, std::uint32_t y) {
    int px = __builtin_popcount(x), py = __builtin_popcount(y);
    return px != py ? px < py : x < y;
  });
  for (std::uint32_t mask : masks) {
    bool ok = true;
    for (std::size_t inside = 0; inside < n && ok; ++inside) {
      if (!(mask & (1u << inside))) continue;
      for (std::size_t outside = 0; outside < n && ok; ++outside) {
        if (mask & (1u << outside)) continue;
        if (m.weakly_beats(alts[outside], alts[inside])) ok = false;
      }
    }
    if (ok) {
      std::vector<Alternative> result;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) result.push_back(alts[i]);
      }
      return result;
    }
  }
  throw std::logic_error("no subset satisfies the dominant-set condition");
}

}  // namespace socialchoice
