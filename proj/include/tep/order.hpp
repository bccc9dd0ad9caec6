// Order properties of the exchangeable pair (A, B): non-independence of A
// and Delta, strict stochastic ordering of the conditional laws of A,
// average ordering of P(A < B | A), positive orthant dependence, and strict
// expectation gaps under monotone transforms.
//
// Violations of any of these are impossible for a valid joint; the checks
// throw std::logic_error if one is ever observed.
#pragma once

#include "tep/joint.hpp"

#include <optional>

namespace tep {

struct OrderingCertificate {
  bool stochastic_order_ok = false;
  std::optional<Rat> strict_witness_a;
  bool orthant_ok = false;
  std::optional<Rat> orthant_strict_witness;
};

struct MonotoneProbe {
  enum class Kind { Identity, RationalClamp, ArctanSurrogate };
  Kind kind = Kind::Identity;
  Rat clamp_scale = Rat(1);  // c in v -> v / (v + c); bounded, strictly increasing

  static MonotoneProbe identity() { return {Kind::Identity, Rat(1)}; }
  static MonotoneProbe clamp(Rat c) { return {Kind::RationalClamp, std::move(c)}; }
  static MonotoneProbe arctan() { return {Kind::ArctanSurrogate, Rat(1)}; }
};

// TV distance between the laws of A given Delta=0 and given Delta=1.
// Always strictly positive.
Rat check_nonindependence(const TepJoint& j);

// P(A > a | A<B) <= P(A > a) <= P(A > a | A>B) at every support threshold,
// with a recorded strict witness.
OrderingCertificate check_stochastic_order(const TepJoint& j);

struct AverageOrdering {
  Rat left_avg;    // E(P(A<B | A) | A <  a0)
  Rat right_avg;   // E(P(A<B | A) | A >= a0)
  Rat left_mass;   // P(A < a0)
  Rat right_mass;  // P(A >= a0)
};

// Both conditioning events must have positive mass. Asserts
// left_avg >= 1/2 >= right_avg.
AverageOrdering check_average_ordering(const TepJoint& j, const Rat& a0);

// P(A >= a, Delta = 1) >= P(A >= a) / 2 at every threshold, strict somewhere.
OrderingCertificate check_orthant_dependence(const TepJoint& j);

struct MonotoneGap {
  Rat low;   // E(g(A) | A < B)
  Rat mid;   // E(g(A))
  Rat high;  // E(g(A) | A > B)
};

// Exact expectation gaps; asserts low < mid < high. Identity works on both
// backends; the rational clamp only on discrete ones (its integral over an
// interval is not rational). ArctanSurrogate is never exact here — use
// monotone_gap_float.
MonotoneGap monotone_gap(const TepJoint& j, const MonotoneProbe& g);

struct MonotoneGapFloat {
  double low, mid, high;
};

// Floating-point evaluation, all probe kinds and both backends.
MonotoneGapFloat monotone_gap_float(const TepJoint& j, const MonotoneProbe& g);

}  // namespace tep
