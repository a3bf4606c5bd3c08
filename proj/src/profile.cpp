#include "socialchoice/profile.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace socialchoice {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

bool valid_alternative_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '>' || c == ',') return false;
  }
  return true;
}

Ranking::Ranking(std::vector<Alternative> order) : order_(std::move(order)) {
  if (order_.empty()) throw std::invalid_argument("ranking must not be empty");
  std::set<Alternative> seen;
  for (const auto& a : order_) {
    if (!valid_alternative_id(a)) {
      throw std::invalid_argument("invalid alternative id: '" + a + "'");
    }
    if (!seen.insert(a).second) {
      throw std::invalid_argument("duplicate alternative in ranking: '" + a + "'");
    }
  }
}

int Ranking::position(const Alternative& a) const {
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (order_[i] == a) return static_cast<int>(i) + 1;
  }
  throw std::out_of_range("alternative not in ranking: '" + a + "'");
}

bool Ranking::prefers(const Alternative& a, const Alternative& b) const {
  return position(a) < position(b);
}

bool Ranking::contains(const Alternative& a) const {
  return std::find(order_.begin(), order_.end(), a) != order_.end();
}

Ranking Ranking::restricted_to(const std::vector<Alternative>& subset) const {
  std::set<Alternative> keep(subset.begin(), subset.end());
  std::vector<Alternative> restricted;
  restricted.reserve(keep.size());
  for (const auto& a : order_) {
    if (keep.count(a)) restricted.push_back(a);
  }
  if (restricted.size() != keep.size()) {
    throw std::invalid_argument("subset contains alternatives outside the ranking");
  }
  return Ranking(std::move(restricted));
}

std::string Ranking::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += '>';
    out += order_[i];
  }
  return out;
}

Ranking Ranking::parse(std::string_view text) {
  std::vector<Alternative> order;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('>', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = trim(text.substr(start, end - start));
    if (!valid_alternative_id(token)) {
      throw std::invalid_argument("invalid alternative id: '" + std::string(token) + "'");
    }
    order.emplace_back(token);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (order.size() < 2) {
    throw std::invalid_argument("ranking needs at least two alternatives: '" + std::string(text) + "'");
  }
  return Ranking(std::move(order));
}

Profile Profile::from_entries(const std::vector<std::pair<Ranking, Rational>>& entries) {
  if (entries.empty()) throw std::invalid_argument("empty profile");
  Profile p;
  p.alternatives_ = entries.front().first.order();
  std::set<Alternative> ground(p.alternatives_.begin(), p.alternatives_.end());
  p.total_weight_ = 0;
  for (const auto& [ranking, weight] : entries) {
    if (weight < 0) {
      throw std::invalid_argument("negative weight for ranking '" + ranking.to_string() + "'");
    }
    std::set<Alternative> alt_set(ranking.order().begin(), ranking.order().end());
    if (alt_set != ground) {
      throw std::invalid_argument("rankings over inconsistent alternative sets: '" +
                                  ranking.to_string() + "'");
    }
    if (weight == 0) continue;
    p.entries_[ranking] += weight;
    p.total_weight_ += weight;
  }
  if (p.total_weight_ <= 0) throw std::invalid_argument("empty profile: total weight is zero");
  return p;
}

std::vector<Alternative> Profile::sorted_alternatives() const {
  std::vector<Alternative> sorted = alternatives_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

Rational Profile::weight(const Ranking& r) const {
  auto it = entries_.find(r);
  return it == entries_.end() ? Rational(0) : it->second;
}

bool Profile::contains(const Alternative& a) const {
  return std::find(alternatives_.begin(), alternatives_.end(), a) != alternatives_.end();
}

Profile Profile::restrict(const std::vector<Alternative>& subset) const {
  if (subset.empty()) throw std::invalid_argument("restriction subset must not be empty");
  std::set<Alternative> keep(subset.begin(), subset.end());
  for (const auto& a : keep) {
    if (!contains(a)) throw std::invalid_argument("unknown alternative in subset: '" + a + "'");
  }
  std::vector<Alternative> new_order;
  for (const auto& a : alternatives_) {
    if (keep.count(a)) new_order.push_back(a);
  }
  Profile restricted;
  restricted.alternatives_ = new_order;
  restricted.total_weight_ = 0;
  for (const auto& [ranking, weight] : entries_) {
    Ranking sub = ranking.restricted_to(new_order);
    restricted.entries_[sub] += weight;
    restricted.total_weight_ += weight;
  }
  return restricted;
}

bool Profile::has_integer_weights() const {
  for (const auto& [ranking, weight] : entries_) {
    if (weight.get_den() != 1) return false;
  }
  return true;
}

std::string Profile::to_ballot_text() const {
  std::string out;
  for (const auto& [ranking, weight] : entries_) {
    out += to_string(weight);
    out += ": ";
    out += ranking.to_string();
    out += '\n';
  }
  return out;
}

bool Profile::operator==(const Profile& other) const {
  if (entries_ != other.entries_) return false;
  std::set<Alternative> mine(alternatives_.begin(), alternatives_.end());
  std::set<Alternative> theirs(other.alternatives_.begin(), other.alternatives_.end());
  return mine == theirs && total_weight_ == other.total_weight_;
}

Profile parse_profile(std::string_view text) {
  std::vector<std::pair<Ranking, Rational>> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    ++line_no;
    bool last = eol == text.size();
    pos = eol + 1;
    if (line.empty() || line.front() == '#') {
      if (last) break;
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected 'weight: ranking'");
    }
    Rational weight;
    try {
      weight = parse_rational(trim(line.substr(0, colon)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (weight < 0) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": negative weight");
    }
    Ranking ranking = [&] {
      try {
        return Ranking::parse(trim(line.substr(colon + 1)));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
      }
    }();
    entries.emplace_back(std::move(ranking), std::move(weight));
    if (last) break;
  }
  if (entries.empty()) throw std::invalid_argument("empty profile: no ranking lines");
  try {
    return Profile::from_entries(entries);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("profile: ") + e.what());
  }
}

MarginMatrix::MarginMatrix(const Profile& profile)
    : alternatives_(profile.sorted_alternatives()), total_weight_(profile.total_weight()) {
  std::size_t m = alternatives_.size();
  support_.assign(m * m, Rational(0));
  for (const auto& [ranking, weight] : profile.entries()) {
    const auto& order = ranking.order();
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::size_t above = index(order[i]);
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        support_[above * m + index(order[j])] += weight;
      }
    }
  }
}

std::size_t MarginMatrix::index(const Alternative& a) const {
  auto it = std::lower_bound(alternatives_.begin(), alternatives_.end(), a);
  if (it == alternatives_.end() || *it != a) {
    throw std::out_of_range("unknown alternative: '" + a + "'");
  }
  return static_cast<std::size_t>(it - alternatives_.begin());
}

const Rational& MarginMatrix::support(const Alternative& a, const Alternative& b) const {
  if (a == b) throw std::invalid_argument("support is undefined for identical alternatives");
  return support_[index(a) * alternatives_.size() + index(b)];
}

Rational MarginMatrix::margin(const Alternative& a, const Alternative& b) const {
  return support(a, b) - support(b, a);
}

bool MarginMatrix::weakly_beats(const Alternative& a, const Alternative& b) const {
  return support(a, b) >= support(b, a);
}

bool MarginMatrix::strictly_beats(const Alternative& a, const Alternative& b) const {
  return support(a, b) > support(b, a);
}

PositionalTally::PositionalTally(const Profile& profile)
    : alternatives_(profile.sorted_alternatives()), total_weight_(profile.total_weight()) {
  std::size_t m = alternatives_.size();
  cumulative_.assign(m * m, Rational(0));
  auto index = [&](const Alternative& a) {
    return static_cast<std::size_t>(
        std::lower_bound(alternatives_.begin(), alternatives_.end(), a) - alternatives_.begin());
  };
  for (const auto& [ranking, weight] : profile.entries()) {
    const auto& order = ranking.order();
    for (std::size_t p = 0; p < order.size(); ++p) {
      std::size_t a = index(order[p]);
      for (std::size_t j = p; j < m; ++j) {
        cumulative_[j * m + a] += weight;
      }
    }
  }
}

const Rational& PositionalTally::cumulative(std::size_t j, const Alternative& a) const {
  if (j < 1 || j > alternatives_.size()) throw std::out_of_range("position out of range");
  auto it = std::lower_bound(alternatives_.begin(), alternatives_.end(), a);
  if (it == alternatives_.end() || *it != a) {
    throw std::out_of_range("unknown alternative: '" + a + "'");
  }
  std::size_t idx = static_cast<std::size_t>(it - alternatives_.begin());
  return cumulative_[(j - 1) * alternatives_.size() + idx];
}

MarginMatrix margins(const Profile& profile) { return MarginMatrix(profile); }

PositionalTally positional_tally(const Profile& profile) { return PositionalTally(profile); }

}  // namespace socialchoice
