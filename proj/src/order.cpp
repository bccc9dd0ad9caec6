#include "tep/order.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tep {

namespace {

// P(X > a), exact on both backends.
Rat surv_gt(const Dist& d, const Rat& a) {
  if (is_discrete(d)) {
    const auto& dd = std::get<DiscreteDist>(d);
    return dd.survival_geq(a) - dd.mass_at(a);
  }
  return Rat(1) - std::get<StepDensityDist>(d).cdf(a);
}

Rat surv_geq(const Dist& d, const Rat& a) {
  if (is_discrete(d)) return std::get<DiscreteDist>(d).survival_geq(a);
  return Rat(1) - std::get<StepDensityDist>(d).cdf(a);
}

// Thresholds where the survival functions of the prior or its double can
// change: atom values, or piece endpoints. Checking the order inequalities
// there covers the whole line (step functions / piecewise linear).
std::vector<Rat> order_thresholds(const TepJoint& j) {
  std::vector<Rat> pts;
  if (j.discrete()) {
    for (const Atom& a : std::get<DiscreteDist>(j.law_of_a()).atoms())
      pts.push_back(a.value);
  } else {
    for (const Piece& p : std::get<StepDensityDist>(j.law_of_a()).pieces()) {
      pts.push_back(p.lo);
      pts.push_back(p.hi);
    }
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

Rat check_nonindependence(const TepJoint& j) {
  Rat gap = tv_distance(j.prior(), double_of(j.prior()));
  if (gap == 0)
    throw std::logic_error("check_nonindependence: zero TV gap (impossible)");
  return gap;
}

OrderingCertificate check_stochastic_order(const TepJoint& j) {
  OrderingCertificate cert;
  const Dist lower = j.conditional_law_of_a(Conditioning::GivenSmaller);
  const Dist upper = j.conditional_law_of_a(Conditioning::GivenLarger);
  for (const Rat& a : order_thresholds(j)) {
    Rat s0 = surv_gt(lower, a);
    Rat sm = surv_gt(j.law_of_a(), a);
    Rat s1 = surv_gt(upper, a);
    if (s0 > sm || sm > s1)
      throw std::logic_error("check_stochastic_order: ordering violated");
    if (!cert.strict_witness_a && s0 < s1) cert.strict_witness_a = a;
  }
  if (!cert.strict_witness_a)
    throw std::logic_error("check_stochastic_order: no strict witness (impossible)");
  cert.stochastic_order_ok = true;
  return cert;
}

AverageOrdering check_average_ordering(const TepJoint& j, const Rat& a0) {
  Rat lm(0), ls(0), rm(0), rs(0);
  for (const SupportCell& c : j.support_cells()) {
    Rat p_smaller = 1 - c.p_delta1;  // P(A < B | A = a), constant on the cell
    Rat below(0);
    if (c.lo == c.hi) {
      below = c.lo < a0 ? c.mass : Rat(0);
    } else if (a0 >= c.hi) {
      below = c.mass;
    } else if (a0 > c.lo) {
      below = c.mass * (a0 - c.lo) / (c.hi - c.lo);
    }
    lm += below;
    ls += below * p_smaller;
    rm += c.mass - below;
    rs += (c.mass - below) * p_smaller;
  }
  if (lm == 0 || rm == 0)
    throw std::invalid_argument("check_average_ordering: empty conditioning event");
  AverageOrdering out{ls / lm, rs / rm, lm, rm};
  if (out.left_avg < Rat(1, 2) || out.right_avg > Rat(1, 2))
    throw std::logic_error("check_average_ordering: average ordering violated");
  return out;
}

OrderingCertificate check_orthant_dependence(const TepJoint& j) {
  OrderingCertificate cert;
  const Dist doubled = double_of(j.prior());
  for (const Rat& a : order_thresholds(j)) {
    // P(A >= a, Delta=1) = P(2X >= a)/2 ; P(A >= a)/2 = (P(X>=a)+P(2X>=a))/4
    Rat joint4 = 2 * surv_geq(doubled, a);
    Rat prod4 = surv_geq(j.prior(), a) + surv_geq(doubled, a);
    if (joint4 < prod4)
      throw std::logic_error("check_orthant_dependence: violated");
    if (!cert.orthant_strict_witness && joint4 > prod4)
      cert.orthant_strict_witness = a;
  }
  if (!cert.orthant_strict_witness)
    throw std::logic_error("check_orthant_dependence: no strict witness (impossible)");
  cert.orthant_ok = true;
  return cert;
}

namespace {

Rat expect_exact(const Dist& d, const MonotoneProbe& g) {
  switch (g.kind) {
    case MonotoneProbe::Kind::Identity:
      return expectation(d);
    case MonotoneProbe::Kind::RationalClamp: {
      if (!is_discrete(d))
        throw std::invalid_argument("monotone_gap: clamp probe needs a discrete prior");
      if (g.clamp_scale <= 0)
        throw std::invalid_argument("monotone_gap: clamp scale must be > 0");
      Rat s(0);
      for (const Atom& a : std::get<DiscreteDist>(d).atoms())
        s += a.mass * a.value / (a.value + g.clamp_scale);
      return s;
    }
    case MonotoneProbe::Kind::ArctanSurrogate:
      throw std::invalid_argument("monotone_gap: arctan probe is float-only");
  }
  throw std::logic_error("expect_exact: bad probe kind");
}

double expect_float(const Dist& d, const MonotoneProbe& g) {
  const double c = to_double(g.clamp_scale);
  auto gv = [&](double v) {
    switch (g.kind) {
      case MonotoneProbe::Kind::Identity: return v;
      case MonotoneProbe::Kind::RationalClamp: return v / (v + c);
      case MonotoneProbe::Kind::ArctanSurrogate: return std::atan(v);
    }
    return v;
  };
  if (is_discrete(d)) {
    double s = 0;
    for (const Atom& a : std::get<DiscreteDist>(d).atoms())
      s += to_double(a.mass) * gv(to_double(a.value));
    return s;
  }
  // closed-form antiderivatives per piece
  auto prim = [&](double x) {
    switch (g.kind) {
      case MonotoneProbe::Kind::Identity: return x * x / 2;
      case MonotoneProbe::Kind::RationalClamp: return x - c * std::log(x + c);
      case MonotoneProbe::Kind::ArctanSurrogate:
        return x * std::atan(x) - std::log1p(x * x) / 2;
    }
    return x;
  };
  double s = 0;
  for (const Piece& p : std::get<StepDensityDist>(d).pieces())
    s += to_double(p.density) * (prim(to_double(p.hi)) - prim(to_double(p.lo)));
  return s;
}

}  // namespace

MonotoneGap monotone_gap(const TepJoint& j, const MonotoneProbe& g) {
  MonotoneGap out{expect_exact(j.conditional_law_of_a(Conditioning::GivenSmaller), g),
                  Rat(0),
                  expect_exact(j.conditional_law_of_a(Conditioning::GivenLarger), g)};
  out.mid = (out.low + out.high) / 2;  // law of A is the half/half mixture
  if (!(out.low < out.mid && out.mid < out.high))
    throw std::logic_error("monotone_gap: strict ordering violated");
  return out;
}

MonotoneGapFloat monotone_gap_float(const TepJoint& j, const MonotoneProbe& g) {
  MonotoneGapFloat out{
      expect_float(j.conditional_law_of_a(Conditioning::GivenSmaller), g), 0.0,
      expect_float(j.conditional_law_of_a(Conditioning::GivenLarger), g)};
  out.mid = (out.low + out.high) / 2;
  return out;
}

}  // namespace tep
