// Seeded Monte Carlo engine and exact strategy evaluators: Cover's
// randomized probe, switching policies, and the truncated heavy-tail
// "expectation is no guide" experiment.
//
// Every kernel exists in a serial and an OpenMP variant. Draws are keyed by
// (seed, counter), chunk results are combined in fixed index order, so both
// variants produce bit-identical results for any thread count.
#pragma once

#include "tep/joint.hpp"

#include <cstdint>
#include <vector>

namespace tep {

// Counter-based 64-bit generator (splitmix-style finalizer over
// seed + counter * golden gamma). Stateless draws make partitioned
// simulation deterministic.
class SeededSampler {
 public:
  explicit SeededSampler(std::uint64_t seed) : seed_(seed) {}

  static std::uint64_t mix(std::uint64_t seed, std::uint64_t counter);
  // Uniform double in [0, 1) from the draw at `counter`.
  static double unit(std::uint64_t seed, std::uint64_t counter);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t next_u64() { return mix(seed_, counter_++); }
  double next_unit() { return unit(seed_, counter_++); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

// Inverse-CDF sampling table (double precision rendering of a Dist).
class InverseCdfTable {
 public:
  explicit InverseCdfTable(const Dist& d);
  double sample(double u) const;  // u in [0, 1)

 private:
  bool discrete_;
  std::vector<double> cum_;        // cumulative mass per atom / piece
  std::vector<double> values_;     // atom values
  std::vector<double> lo_, wid_;   // piece geometry
};

std::vector<double> sample(const Dist& d, SeededSampler& sampler, std::uint64_t n);

enum class RunMode { Serial, Parallel };

struct ProbeStrategy {
  Dist probe;
  // Tie rule is fixed: A equal to the probe means "guess mine is smaller",
  // so the winning probe interval is half-open [x, y).
};

// 1/2 + (1/2) P(probe in [x, y)). Requires 0 < x < y.
Rat cover_win_prob_exact(const Rat& x, const Rat& y, const ProbeStrategy& s);

struct CoverSimResult {
  std::uint64_t n = 0;
  std::uint64_t wins = 0;
  double win_freq = 0;
  double ci_halfwidth = 0;  // normal-approximation 95%
};

CoverSimResult cover_simulate(double x, double y, const ProbeStrategy& s,
                              std::uint64_t n, std::uint64_t seed,
                              RunMode mode = RunMode::Parallel);

struct SwitchPolicy {
  enum class Rule { Never, Always, Threshold, Informed };
  Rule rule = Rule::Never;
  Rat threshold = Rat(0);  // switch iff a < threshold

  static SwitchPolicy never() { return {Rule::Never, Rat(0)}; }
  static SwitchPolicy always() { return {Rule::Always, Rat(0)}; }
  static SwitchPolicy at_threshold(Rat t) { return {Rule::Threshold, std::move(t)}; }
  static SwitchPolicy informed() { return {Rule::Informed, Rat(0)}; }
};

// Exact expected final amount under the policy.
Rat policy_value_exact(const TepJoint& j, const SwitchPolicy& p);

struct BroomeExperimentReport {
  long truncation = 0;
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  Rat exact_mean;                // E(X') of the truncated renormalized prior
  Rat switch_favorable_mass;     // exact P(E(B|A) > A) = 1 - p(2^K)/2
  double sample_mean = 0;
  double mean_ratio = 0;         // sample_mean / E(X')
  double always_gain_mean = 0;   // empirical mean of B - A under always-switch
  double always_gain_sigma = 0;  // standard error of that mean
};

// Draws n samples from broome(1/3, K). Requires K >= 10, n >= 1000.
BroomeExperimentReport broome_truncation_experiment(long K, std::uint64_t n,
                                                    std::uint64_t seed,
                                                    RunMode mode = RunMode::Parallel);

}  // namespace tep
