#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "socialchoice/profile.hpp"

namespace socialchoice {

// Exponential-family utility processes. Each family fixes the shared
// hyperparameters and varies one real parameter per alternative.
enum class Family {
  Normal,             // N(mu_a, variance), variance shared (default 1/2)
  Gumbel,             // G(mu_a, scale), scale shared (default 1)
  Poisson,            // P(lambda_a)
  GammaFixedShape,    // Gamma(shape, rate lambda_a), shape shared
  BinomialFixedN,     // B(n, p_a), n shared
  BinomialFixedP,     // B(n_a, p), p shared
  NegBinomialFixedR,  // NB(r, p_a), r shared (failures before r successes)
  NegBinomialFixedP,  // NB(r_a, p), p shared
};

Family family_from_name(const std::string& name);
std::string family_name(Family family);

struct ProcessSpec {
  Family family = Family::Normal;
  std::map<std::string, double> shared;
  std::map<Alternative, double> params;

  double param(const Alternative& a) const;  // throws on missing parameter
  double shared_value(const std::string& key, double fallback) const;
  void validate() const;

  // JSON shape: {"family": "...", "shared": {...}, "params": {"a": 1.0}}.
  // Serialization is canonical (sorted keys, shortest round-trip doubles), so
  // from_json(to_json(s)) == s bit-exactly.
  static ProcessSpec from_json(const std::string& text);
  std::string to_json() const;

  bool operator==(const ProcessSpec& other) const = default;
};

// Exact Plackett-Luce profile from strength weights. The profile weight of a
// ranking x1>...>xn is the product over k of v(xk) / (v(xk) + ... + v(xn)).
// Weights sum to exactly 1.
Profile plackett_luce_exact_from_strengths(
    const std::vector<std::pair<Alternative, Rational>>& strengths);

// Exact profile of a Gumbel process: strengths v_x = exp(mu_x / scale) are
// evaluated in binary floating point and promoted to exact rationals once, so
// downstream order comparisons are exact. Requires family == gumbel, |A| <= 7.
Profile plackett_luce_exact(const ProcessSpec& spec, const std::vector<Alternative>& alternatives);

// One utility draw for (alternative, sample index). The stream is derived by
// hashing (seed, alternative id, index): adding an alternative to a set never
// perturbs the draws of the others.
double sample_utility(const ProcessSpec& spec, const Alternative& a, std::uint64_t seed,
                      std::uint64_t index);

// Empirical profile of `samples` independent utility vectors, each sorted
// into a ranking with exact utility ties broken by lexicographic id. A pure
// function of (spec, alternatives, samples, seed).
Profile sample_profile(const ProcessSpec& spec, const std::vector<Alternative>& alternatives,
                       long samples, std::uint64_t seed);

// Weak parameter dominance per family: for normal/gumbel/poisson/
// binomial-fixed-n/negbinomial-fixed-p the higher parameter dominates; for
// gamma-fixed-shape and negbinomial-fixed-r the inequality reverses
// (rate/failure parametrization); parameter ties dominate mutually.
bool param_dominates(const ProcessSpec& spec, const Alternative& a, const Alternative& b);
bool param_dominates_strictly(const ProcessSpec& spec, const Alternative& a, const Alternative& b);

double log_density(const ProcessSpec& spec, const Alternative& a, double u);

// Numerical witness for the density swap inequality: true iff for every grid
// pair (u1, u2) with u1 >= u2,
//   density(a at u1) * density(b at u2) >= density(a at u2) * density(b at u1).
// Grid points outside the support of either alternative are rejected.
bool density_swap_check(const ProcessSpec& spec, const Alternative& a, const Alternative& b,
                        const std::vector<std::pair<double, double>>& grid);

// Deterministic 20-point grid within the common support of a and b.
std::vector<std::pair<double, double>> default_density_grid(const ProcessSpec& spec,
                                                            const Alternative& a,
                                                            const Alternative& b);

struct DominanceReport {
  bool exact = false;        // gumbel: exact Plackett-Luce profile
  bool pm_holds = false;     // a weakly PM-dominates b on the realized profile
  bool pos_holds = false;
  double above_share = 0.0;  // share of ranking mass with a above b
  double tie_share = 0.0;    // share of samples with exactly tied utilities
  double std_error = 0.0;    // binomial standard error of above_share
  bool inconclusive = false; // above_share within 3 standard errors of 1/2
};

// Checks that strict parameter dominance shows up as PM- and Pos-dominance in
// the induced profile: exactly for gumbel, by seeded sampling otherwise.
DominanceReport process_dominance_in_profiles(const ProcessSpec& spec,
                                              const std::vector<Alternative>& alternatives,
                                              const Alternative& a, const Alternative& b,
                                              long samples, std::uint64_t seed);

}  // namespace socialchoice
