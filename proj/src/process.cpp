#include "socialchoice/process.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "socialchoice/dominance.hpp"

namespace socialchoice {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

// Streamed counter-based generator: cheap to construct per draw, which keeps
// every (alternative, sample) pair on an independent reproducible stream.
struct SplitMix64 {
  std::uint64_t state;

  using result_type = std::uint64_t;
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ull; }

  std::uint64_t operator()() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
};

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t stream_for(std::uint64_t seed, std::string_view alt, std::uint64_t index) {
  std::uint64_t h = mix64(seed ^ 0x6a09e667f3bcc908ull);
  h = mix64(h ^ fnv1a64(alt));
  h = mix64(h ^ index);
  return h;
}

double uniform_open01(SplitMix64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * (1.0 / 9007199254740992.0);
}

double require_shared(const ProcessSpec& spec, const std::string& key) {
  auto it = spec.shared.find(key);
  if (it == spec.shared.end()) {
    throw std::invalid_argument("family '" + family_name(spec.family) +
                                "' needs shared parameter '" + key + "'");
  }
  return it->second;
}

long as_positive_integer(double value, const std::string& what) {
  if (!(value >= 1) || value != std::floor(value) || value > 1e9) {
    throw std::invalid_argument(what + " must be a positive integer");
  }
  return static_cast<long>(value);
}

void check_probability(double p, const std::string& what) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::invalid_argument(what + " must lie in (0,1)");
  }
}

double lchoose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

long integral_point(double u, const std::string& what) {
  if (u != std::floor(u) || u < 0) {
    throw std::domain_error(what + ": grid point outside support");
  }
  return static_cast<long>(u);
}

}  // namespace

Family family_from_name(const std::string& name) {
  if (name == "normal") return Family::Normal;
  if (name == "gumbel") return Family::Gumbel;
  if (name == "poisson") return Family::Poisson;
  if (name == "gamma_fixed_shape") return Family::GammaFixedShape;
  if (name == "binomial_fixed_n") return Family::BinomialFixedN;
  if (name == "binomial_fixed_p") return Family::BinomialFixedP;
  if (name == "negbinomial_fixed_r") return Family::NegBinomialFixedR;
  if (name == "negbinomial_fixed_p") return Family::NegBinomialFixedP;
  throw std::invalid_argument("unknown family: '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Normal: return "normal";
    case Family::Gumbel: return "gumbel";
    case Family::Poisson: return "poisson";
    case Family::GammaFixedShape: return "gamma_fixed_shape";
    case Family::BinomialFixedN: return "binomial_fixed_n";
    case Family::BinomialFixedP: return "binomial_fixed_p";
    case Family::NegBinomialFixedR: return "negbinomial_fixed_r";
    case Family::NegBinomialFixedP: return "negbinomial_fixed_p";
  }
  throw std::logic_error("unhandled family");
}

double ProcessSpec::param(const Alternative& a) const {
  auto it = params.find(a);
  if (it == params.end()) {
    throw std::invalid_argument("missing parameter for alternative '" + a + "'");
  }
  return it->second;
}

double ProcessSpec::shared_value(const std::string& key, double fallback) const {
  auto it = shared.find(key);
  return it == shared.end() ? fallback : it->second;
}

void ProcessSpec::validate() const {
  if (params.empty()) throw std::invalid_argument("process spec has no per-alternative parameters");
  for (const auto& [a, v] : params) {
    if (!valid_alternative_id(a)) throw std::invalid_argument("invalid alternative id: '" + a + "'");
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite parameter for '" + a + "'");
  }
  switch (family) {
    case Family::Normal:
      if (!(shared_value("variance", 0.5) > 0)) throw std::invalid_argument("variance must be positive");
      break;
    case Family::Gumbel:
      if (!(shared_value("scale", 1.0) > 0)) throw std::invalid_argument("scale must be positive");
      break;
    case Family::Poisson:
      for (const auto& [a, v] : params) {
        if (!(v > 0)) throw std::invalid_argument("poisson rate for '" + a + "' must be positive");
      }
      break;
    case Family::GammaFixedShape:
      if (!(require_shared(*this, "shape") > 0)) throw std::invalid_argument("shape must be positive");
      for (const auto& [a, v] : params) {
        if (!(v > 0)) throw std::invalid_argument("gamma rate for '" + a + "' must be positive");
      }
      break;
    case Family::BinomialFixedN:
      as_positive_integer(require_shared(*this, "n"), "n");
      for (const auto& [a, v] : params) check_probability(v, "success probability for '" + a + "'");
      break;
    case Family::BinomialFixedP:
      check_probability(require_shared(*this, "p"), "p");
      for (const auto& [a, v] : params) as_positive_integer(v, "trial count for '" + a + "'");
      break;
    case Family::NegBinomialFixedR:
      as_positive_integer(require_shared(*this, "r"), "r");
      for (const auto& [a, v] : params) check_probability(v, "success probability for '" + a + "'");
      break;
    case Family::NegBinomialFixedP:
      check_probability(require_shared(*this, "p"), "p");
      for (const auto& [a, v] : params) as_positive_integer(v, "success count for '" + a + "'");
      break;
  }
}

ProcessSpec ProcessSpec::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("process spec: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j.contains("params")) {
    throw std::invalid_argument("process spec needs 'family' and 'params'");
  }
  ProcessSpec spec;
  spec.family = family_from_name(j.at("family").get<std::string>());
  if (j.contains("shared")) {
    for (const auto& [key, value] : j.at("shared").items()) {
      spec.shared[key] = value.get<double>();
    }
  }
  for (const auto& [key, value] : j.at("params").items()) {
    spec.params[key] = value.get<double>();
  }
  spec.validate();
  return spec;
}

std::string ProcessSpec::to_json() const {
  nlohmann::json j;
  j["family"] = family_name(family);
  j["shared"] = nlohmann::json::object();
  for (const auto& [key, value] : shared) j["shared"][key] = value;
  j["params"] = nlohmann::json::object();
  for (const auto& [key, value] : params) j["params"][key] = value;
  return j.dump();
}

Profile plackett_luce_exact_from_strengths(
    const std::vector<std::pair<Alternative, Rational>>& strengths) {
  if (strengths.empty()) throw std::invalid_argument("no strengths given");
  for (const auto& [a, v] : strengths) {
    if (v <= 0) throw std::invalid_argument("strength for '" + a + "' must be positive");
  }
  std::vector<std::size_t> order(strengths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto by_name = [&](std::size_t x, std::size_t y) {
    return strengths[x].first < strengths[y].first;
  };
  std::sort(order.begin(), order.end(), by_name);
  Rational total(0);
  for (const auto& [alt, strength] : strengths) total += strength;
  std::vector<std::pair<Ranking, Rational>> entries;
  do {
    Rational probability(1);
    Rational pool = total;
    std::vector<Alternative> ranking;
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto& [alt, strength] = strengths[order[k]];
      ranking.push_back(alt);
      probability *= strength / pool;
      pool -= strength;
    }
    entries.emplace_back(Ranking(std::move(ranking)), std::move(probability));
  } while (std::next_permutation(order.begin(), order.end(), by_name));
  return Profile::from_entries(entries);
}

Profile plackett_luce_exact(const ProcessSpec& spec, const std::vector<Alternative>& alternatives) {
  if (spec.family != Family::Gumbel) {
    throw std::invalid_argument("exact profiles require the gumbel family");
  }
  spec.validate();
  if (alternatives.empty() || alternatives.size() > 7) {
    throw std::invalid_argument("exact profiles support 1 to 7 alternatives");
  }
  double scale = spec.shared_value("scale", 1.0);
  std::vector<std::pair<Alternative, Rational>> strengths;
  for (const auto& a : alternatives) {
    strengths.emplace_back(a, rational_from_double(std::exp(spec.param(a) / scale)));
  }
  return plackett_luce_exact_from_strengths(strengths);
}

double sample_utility(const ProcessSpec& spec, const Alternative& a, std::uint64_t seed,
                      std::uint64_t index) {
  SplitMix64 rng{stream_for(seed, a, index)};
  double p = spec.param(a);
  switch (spec.family) {
    case Family::Normal: {
      std::normal_distribution<double> d(p, std::sqrt(spec.shared_value("variance", 0.5)));
      return d(rng);
    }
    case Family::Gumbel: {
      double scale = spec.shared_value("scale", 1.0);
      return p - scale * std::log(-std::log(uniform_open01(rng)));
    }
    case Family::Poisson: {
      std::poisson_distribution<long> d(p);
      return static_cast<double>(d(rng));
    }
    case Family::GammaFixedShape: {
      std::gamma_distribution<double> d(require_shared(spec, "shape"), 1.0 / p);
      return d(rng);
    }
    case Family::BinomialFixedN: {
      std::binomial_distribution<long> d(as_positive_integer(require_shared(spec, "n"), "n"), p);
      return static_cast<double>(d(rng));
    }
    case Family::BinomialFixedP: {
      std::binomial_distribution<long> d(as_positive_integer(p, "trial count"),
                                         require_shared(spec, "p"));
      return static_cast<double>(d(rng));
    }
    case Family::NegBinomialFixedR: {
      std::negative_binomial_distribution<long> d(
          as_positive_integer(require_shared(spec, "r"), "r"), p);
      return static_cast<double>(d(rng));
    }
    case Family::NegBinomialFixedP: {
      std::negative_binomial_distribution<long> d(as_positive_integer(p, "success count"),
                                                  require_shared(spec, "p"));
      return static_cast<double>(d(rng));
    }
  }
  throw std::logic_error("unhandled family");
}

Profile sample_profile(const ProcessSpec& spec, const std::vector<Alternative>& alternatives,
                       long samples, std::uint64_t seed) {
  spec.validate();
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (alternatives.empty()) throw std::invalid_argument("empty alternative set");
  for (const auto& a : alternatives) spec.param(a);

  std::map<std::vector<std::size_t>, long> counts;
  std::vector<std::size_t> idx(alternatives.size());
  std::vector<double> utilities(alternatives.size());
  for (long sample = 0; sample < samples; ++sample) {
    for (std::size_t i = 0; i < alternatives.size(); ++i) {
      utilities[i] = sample_utility(spec, alternatives[i], seed, static_cast<std::uint64_t>(sample));
      idx[i] = i;
    }
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
      if (utilities[x] != utilities[y]) return utilities[x] > utilities[y];
      return alternatives[x] < alternatives[y];  // exact ties: lexicographic id
    });
    ++counts[idx];
  }
  std::vector<std::pair<Ranking, Rational>> entries;
  for (const auto& [order, count] : counts) {
    std::vector<Alternative> names;
    names.reserve(order.size());
    for (std::size_t i : order) names.push_back(alternatives[i]);
    entries.emplace_back(Ranking(std::move(names)), Rational(count));
  }
  return Profile::from_entries(entries);
}

namespace {

// Families where a larger per-alternative parameter means stochastically
// smaller utilities; the dominance inequality reverses there.
bool reversed_family(Family family) {
  return family == Family::GammaFixedShape || family == Family::NegBinomialFixedR;
}

}  // namespace

bool param_dominates(const ProcessSpec& spec, const Alternative& a, const Alternative& b) {
  double pa = spec.param(a), pb = spec.param(b);
  return reversed_family(spec.family) ? pb >= pa : pa >= pb;
}

bool param_dominates_strictly(const ProcessSpec& spec, const Alternative& a,
                              const Alternative& b) {
  double pa = spec.param(a), pb = spec.param(b);
  return reversed_family(spec.family) ? pb > pa : pa > pb;
}

double log_density(const ProcessSpec& spec, const Alternative& a, double u) {
  double p = spec.param(a);
  switch (spec.family) {
    case Family::Normal: {
      double variance = spec.shared_value("variance", 0.5);
      return -0.5 * std::log(kTau * variance) - (u - p) * (u - p) / (2.0 * variance);
    }
    case Family::Gumbel: {
      double scale = spec.shared_value("scale", 1.0);
      double z = (u - p) / scale;
      return -std::log(scale) - z - std::exp(-z);
    }
    case Family::Poisson: {
      long k = integral_point(u, "poisson");
      return static_cast<double>(k) * std::log(p) - p - std::lgamma(static_cast<double>(k) + 1.0);
    }
    case Family::GammaFixedShape: {
      double shape = require_shared(spec, "shape");
      if (!(u > 0)) throw std::domain_error("gamma: grid point outside support");
      return shape * std::log(p) + (shape - 1.0) * std::log(u) - p * u - std::lgamma(shape);
    }
    case Family::BinomialFixedN:
    case Family::BinomialFixedP: {
      double n = spec.family == Family::BinomialFixedN
                     ? require_shared(spec, "n")
                     : static_cast<double>(as_positive_integer(p, "trial count"));
      double success = spec.family == Family::BinomialFixedN ? p : require_shared(spec, "p");
      long k = integral_point(u, "binomial");
      if (k > static_cast<long>(n)) throw std::domain_error("binomial: grid point outside support");
      return lchoose(n, static_cast<double>(k)) + static_cast<double>(k) * std::log(success) +
             (n - static_cast<double>(k)) * std::log(1.0 - success);
    }
    case Family::NegBinomialFixedR:
    case Family::NegBinomialFixedP: {
      double r = spec.family == Family::NegBinomialFixedR
                     ? require_shared(spec, "r")
                     : static_cast<double>(as_positive_integer(p, "success count"));
      double success = spec.family == Family::NegBinomialFixedR ? p : require_shared(spec, "p");
      long k = integral_point(u, "negative binomial");
      return lchoose(static_cast<double>(k) + r - 1.0, static_cast<double>(k)) +
             r * std::log(success) + static_cast<double>(k) * std::log(1.0 - success);
    }
  }
  throw std::logic_error("unhandled family");
}

bool density_swap_check(const ProcessSpec& spec, const Alternative& a, const Alternative& b,
                        const std::vector<std::pair<double, double>>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty density grid");
  for (const auto& [u1, u2] : grid) {
    if (u1 < u2) throw std::invalid_argument("grid pairs must satisfy u1 >= u2");
    double lhs = log_density(spec, a, u1) + log_density(spec, b, u2);
    double rhs = log_density(spec, a, u2) + log_density(spec, b, u1);
    if (lhs < rhs - 1e-9) return false;
  }
  return true;
}

std::vector<std::pair<double, double>> default_density_grid(const ProcessSpec& spec,
                                                            const Alternative& a,
                                                            const Alternative& b) {
  std::vector<double> levels;
  std::vector<double> gaps;
  switch (spec.family) {
    case Family::Normal:
    case Family::Gumbel: {
      double lo = std::min(spec.param(a), spec.param(b));
      double hi = std::max(spec.param(a), spec.param(b));
      levels = {lo - 1.0, lo, (lo + hi) / 2.0, hi, hi + 1.0};
      gaps = {0.5, 1.0, 2.0, 3.0};
      break;
    }
    case Family::Poisson:
    case Family::NegBinomialFixedR:
    case Family::NegBinomialFixedP:
      levels = {0, 1, 2, 3, 4};
      gaps = {1, 2, 3, 5};
      break;
    case Family::BinomialFixedN:
    case Family::BinomialFixedP: {
      long n = spec.family == Family::BinomialFixedN
                   ? as_positive_integer(require_shared(spec, "n"), "n")
                   : std::min(as_positive_integer(spec.param(a), "trial count"),
                              as_positive_integer(spec.param(b), "trial count"));
      if (n < 10) throw std::invalid_argument("default binomial grid needs n >= 10");
      levels = {0, 1, 2, 3, 4};
      gaps = {1, 2, 3, 5};
      break;
    }
    case Family::GammaFixedShape:
      levels = {0.25, 0.5, 1.0, 2.0, 4.0};
      gaps = {0.5, 1.0, 2.0, 4.0};
      break;
  }
  std::vector<std::pair<double, double>> grid;
  for (double u2 : levels) {
    for (double gap : gaps) {
      grid.emplace_back(u2 + gap, u2);
    }
  }
  return grid;
}

DominanceReport process_dominance_in_profiles(const ProcessSpec& spec,
                                              const std::vector<Alternative>& alternatives,
                                              const Alternative& a, const Alternative& b,
                                              long samples, std::uint64_t seed) {
  DominanceReport report;
  bool has_a = std::find(alternatives.begin(), alternatives.end(), a) != alternatives.end();
  bool has_b = std::find(alternatives.begin(), alternatives.end(), b) != alternatives.end();
  if (alternatives.size() < 2 || a == b || !has_a || !has_b) {
    report.pm_holds = report.pos_holds = true;  // vacuous
    return report;
  }
  if (!param_dominates_strictly(spec, a, b)) {
    throw std::invalid_argument("process dominance check needs strict parameter dominance");
  }
  if (spec.family == Family::Gumbel) {
    Profile profile = plackett_luce_exact(spec, alternatives);
    MarginMatrix m(profile);
    report.exact = true;
    report.pm_holds = pm_dominates(profile, a, b);
    report.pos_holds = pos_dominates(profile, a, b);
    report.above_share = Rational(m.support(a, b) / m.total_weight()).get_d();
    return report;
  }
  Profile profile = sample_profile(spec, alternatives, samples, seed);
  MarginMatrix m(profile);
  report.pm_holds = pm_dominates(profile, a, b);
  report.pos_holds = pos_dominates(profile, a, b);
  report.above_share = Rational(m.support(a, b) / m.total_weight()).get_d();
  long ties = 0;
  for (long i = 0; i < samples; ++i) {
    if (sample_utility(spec, a, seed, static_cast<std::uint64_t>(i)) ==
        sample_utility(spec, b, seed, static_cast<std::uint64_t>(i))) {
      ++ties;
    }
  }
  report.tie_share = static_cast<double>(ties) / static_cast<double>(samples);
  double variance = std::max(report.above_share * (1.0 - report.above_share), 1e-12);
  report.std_error = std::sqrt(variance / static_cast<double>(samples));
  report.inconclusive = std::abs(report.above_share - 0.5) <= 3.0 * report.std_error;
  return report;
}

}  // namespace socialchoice
