// Joint law of (A, Delta, B): a prior on the smaller amount X plus a fair
// coin. A is the amount in the chosen envelope, Delta the indicator that it
// is the larger one (A = 2X), B the amount in the other envelope.
#pragma once

#include "tep/dist.hpp"

#include <vector>

namespace tep {

enum class Conditioning { GivenSmaller, Unconditional, GivenLarger };

enum class PointClass { Interior, ForcedSmaller, ForcedLarger };

struct ConditionalReport {
  Rat a;
  Rat p_delta1;  // P(Delta = 1 | A = a)
  Rat e_b;       // E(B | A = a)
  PointClass cls;
};

// A maximal region of the support of A on which the conditional law of Delta
// is constant. Discrete: one cell per atom of the law of A. Step: one cell
// per interval of the refinement by prior endpoints and their doubles.
struct SupportCell {
  Rat lo, hi;    // equal for atoms; half-open [lo, hi) otherwise
  Rat rep;       // the atom value, or the interval midpoint
  Rat mass;      // P(A in cell), strictly positive
  Rat p_delta1;  // constant over the cell
};

class TepJoint {
 public:
  // Prior must have strictly positive support (enforced by the Dist types).
  explicit TepJoint(Dist prior);

  const Dist& prior() const { return prior_; }
  const Dist& law_of_a() const { return law_of_a_; }
  bool discrete() const { return is_discrete(prior_); }

  bool in_support(const Rat& a) const;

  // P(Delta = 1 | A = a) = p(a/2) / (p(a) + p(a/2)) for atoms,
  // (f(a/2)/2) / (f(a) + f(a/2)/2) for densities. Throws if a is outside
  // the support of the law of A.
  Rat p_delta_given_a(const Rat& a) const;

  // 2a (1 - p) + (a/2) p with p = p_delta_given_a(a).
  Rat e_b_given_a(const Rat& a) const;

  ConditionalReport report_at(const Rat& a) const;

  // Exactly (3/2) E(X); equals E(A) by exchange symmetry.
  Rat e_b_unconditional() const;

  struct Decomposition {
    Rat e_given_larger;   // 2 E(X)
    Rat e_given_smaller;  // E(X)
    Rat total;            // (3/2) E(X)
  };
  Decomposition philosopher_decomposition() const;

  // GivenSmaller -> the prior itself, GivenLarger -> its double.
  Dist conditional_law_of_a(Conditioning which) const;

  std::vector<SupportCell> support_cells() const;

 private:
  Dist prior_;
  Dist law_of_a_;
};

PointClass classify(const Rat& p_delta1);

}  // namespace tep
