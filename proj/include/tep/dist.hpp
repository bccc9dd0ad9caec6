// One-dimensional distributions with exact rational bookkeeping.
//
// Two backends: finite atom lists (DiscreteDist) and piecewise-constant
// densities on finitely many intervals (StepDensityDist). Operations that
// combine two distributions require the same backend.
#pragma once

#include "tep/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace tep {

struct Atom {
  Rat value;  // strictly positive
  Rat mass;   // strictly positive
};

// Atoms sorted by strictly increasing value; masses sum exactly to 1.
class DiscreteDist {
 public:
  // Normalizes: merges duplicate values, drops zero masses, divides by the
  // total. Throws on non-positive values, negative masses, zero total.
  static DiscreteDist normalize(std::vector<Atom> raw);

  const std::vector<Atom>& atoms() const { return atoms_; }

  // Mass at an exact point (0 outside the support).
  Rat mass_at(const Rat& v) const;
  Rat cdf(const Rat& v) const;              // P(X <= v)
  Rat survival_geq(const Rat& v) const;     // P(X >= v)

 private:
  DiscreteDist() = default;
  std::vector<Atom> atoms_;
};

struct Piece {
  Rat lo, hi;   // 0 < lo < hi
  Rat density;  // strictly positive after normalization
};

// Non-overlapping sorted pieces; total integral exactly 1.
class StepDensityDist {
 public:
  static StepDensityDist normalize(std::vector<Piece> raw);
  static StepDensityDist uniform(const Rat& lo, const Rat& hi);

  const std::vector<Piece>& pieces() const { return pieces_; }

  // Density at a point; right-continuous ([lo, hi) convention).
  Rat density_at(const Rat& v) const;
  Rat cdf(const Rat& v) const;
  Rat survival_geq(const Rat& v) const;

 private:
  StepDensityDist() = default;
  std::vector<Piece> pieces_;
};

using Dist = std::variant<DiscreteDist, StepDensityDist>;

bool is_discrete(const Dist& d);

// Pushforward under multiplication by 2: discrete values double, step
// endpoints double with densities halved. Mass is preserved exactly.
Dist double_of(const Dist& d);
DiscreteDist double_of(const DiscreteDist& d);
StepDensityDist double_of(const StepDensityDist& d);

// Half the L1 distance between the two laws; exact, in [0, 1].
// Throws on mixed backends.
Rat tv_distance(const Dist& a, const Dist& b);

Rat expectation(const Dist& d);

// Upper alpha-quantile: the largest z with P(X >= z) >= alpha.
Rat quantile(const Dist& d, const Rat& alpha);

struct Interval {
  Rat lo, hi;  // half-open [lo, hi)
};

// Probability of a disjoint union of half-open intervals.
Rat prob_event(const Dist& d, const std::vector<Interval>& intervals);

// w1 * d1 + w2 * d2 with w1 + w2 == 1; same backend required.
Dist mixture(const Dist& d1, const Rat& w1, const Dist& d2, const Rat& w2);

// Base-2 decomposition of a discrete law: per octave k (2^k <= v < 2^{k+1})
// the total mass and the normalized profile of within-octave multipliers
// v / 2^k in [1, 2). Exact; log2 of the multiplier is taken only at render
// time.
struct Log2Decomposition {
  struct Row {
    long octave;
    Rat total_mass;
    DiscreteDist profile;  // multipliers in [1, 2), masses summing to 1
  };
  std::vector<Row> rows;  // sorted by octave
};

Log2Decomposition log2_decompose(const DiscreteDist& d);

}  // namespace tep
