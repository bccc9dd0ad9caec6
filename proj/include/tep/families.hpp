// Parameterized prior families approaching the improper log-uniform prior,
// deviation profiles of the conditional law of Delta, the TV bound check,
// the corollary statistics, the doubling-invariant window construction and
// the sweep machinery that surfaces all of it as CSV.
#pragma once

#include "tep/joint.hpp"

#include <string>
#include <utility>
#include <vector>

namespace tep {

struct PriorFamily {
  enum class Kind {
    LogGridUniform,     // uniform on {2^k : k = 0..N}
    TwoSidedLogGrid,    // uniform on {2^k : k = -N..N}
    LogDensityGrid,     // step density ~ 1/x on [2^-N, 2^N], m pieces/octave
    UniformContinuous,  // uniform density on [1, N]
    UniformIntegers,    // uniform on {1..N}
    Broome,             // P(X = 2^n) ~ p (1-p)^n, n = 0..K, renormalized
  };
  Kind kind = Kind::LogGridUniform;
  Rat broome_p = Rat(1, 3);
  long pieces_per_octave = 4;
};

std::string family_name(PriorFamily::Kind k);
PriorFamily::Kind parse_family(const std::string& name);

// Exact normalized member; throws on invalid parameters.
Dist family_member(const PriorFamily& f, long index);

// The distribution of |P(Delta=1 | A) - 1/2| under the law of A: finitely
// many exact levels with their masses.
struct DeviationProfile {
  std::vector<std::pair<Rat, Rat>> levels;  // (deviation, mass), ascending

  Rat mass_above(const Rat& eps) const;  // delta(eps) = P(deviation > eps)
  Rat nonhalf_mass() const;              // P(deviation > 0)
};

DeviationProfile deviation_profile(const TepJoint& j);

struct Theorem3Bound {
  Rat lhs;  // TV(law X, law 2X)
  Rat rhs;  // 2 delta(eps) + 4 eps / (1 - 2 eps)
};

// Requires 0 < eps < 1/2; asserts lhs <= rhs (a violation would contradict
// the bound's derivation and throws logic_error).
Theorem3Bound theorem3_bound_check(const TepJoint& j, const Rat& eps);

// Mass per octave [2^k, 2^{k+1}) of a law, both backends.
std::vector<std::pair<long, Rat>> octave_masses(const Dist& d);

struct CorollaryStats {
  Rat sup_octave_mass;
  double quantile_gap_log2;  // log2(z_{alpha2} / z_{alpha1}), alpha1 > alpha2
  Rat below_mean_mass;       // P(X < delta E(X))
  Rat c1_bound_min;          // min over m <= m_max of 1/(m+1) + m TV/2
};

// Also asserts the finite-m bound sup_k P(octave = k) <= 1/(m+1) + m TV/2
// for every m = 1..m_max.
CorollaryStats corollary_stats(const TepJoint& j, const Rat& delta, const Rat& alpha1,
                               const Rat& alpha2, long m_max);

// Proper prior on {2^k * v : k = -M..N, v in the support of `fractional`}
// with uniform octave weights. `fractional` holds within-octave multipliers
// in [1, 2). Interior conditionals are exactly 1/2 (verified).
Dist invariant_measure_window(const DiscreteDist& fractional, long M, long N);

// Diagnostics for the independence of octave and within-octave position.
// Reported, never asserted.
struct ConjectureDiagnostics {
  Rat dependence_gap;  // max |joint - product| over (octave, multiplier)
  Rat uniformity_gap;  // max deviation of octave marginal from uniform
                       // over its occupied range
  Rat nonhalf_mass;
};

ConjectureDiagnostics conjecture_diagnostics(const TepJoint& j);

struct SweepParams {
  Rat eps = Rat(1, 8);
  Rat delta = Rat(1, 100);
  Rat alpha1 = Rat(1, 2);
  Rat alpha2 = Rat(1, 4);
  long m_max = 8;
};

struct SweepRow {
  std::string family;
  long index = 0;
  Rat tv, nonhalf_mass, dev_mass_eps, sup_octave_mass;
  double quantile_gap_log2 = 0;
  Rat below_mean_mass, t3_lhs, t3_rhs, c1_bound_min;
};

SweepRow sweep_row(const std::string& family, long index, const Dist& prior,
                   const SweepParams& params);

// Members are independent; computed in parallel when requested, assembled
// in index order either way.
std::vector<SweepRow> run_sweep(const PriorFamily& f, long from, long to,
                                const SweepParams& params, bool parallel = true);

// Named columns hold exact "p/q" values; decimal companions are appended.
std::string sweep_csv(const std::vector<SweepRow>& rows, int decimal_digits = 15);

}  // namespace tep
