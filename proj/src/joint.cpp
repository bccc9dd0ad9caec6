#include "tep/joint.hpp"

#include <algorithm>
#include <stdexcept>

namespace tep {

TepJoint::TepJoint(Dist prior)
    : prior_(std::move(prior)),
      law_of_a_(mixture(prior_, Rat(1, 2), double_of(prior_), Rat(1, 2))) {
  // envelope amounts are strictly positive (atom values already are)
  if (!is_discrete(prior_) &&
      std::get<StepDensityDist>(prior_).pieces().front().lo == 0)
    throw std::invalid_argument("TepJoint: prior support must be positive");
}

namespace {

// Unnormalized weights of the two branches at a: (A = X = a, A = 2X = a).
std::pair<Rat, Rat> branch_weights(const Dist& prior, const Rat& a) {
  if (is_discrete(prior)) {
    const auto& d = std::get<DiscreteDist>(prior);
    return {d.mass_at(a), d.mass_at(a / 2)};
  }
  const auto& d = std::get<StepDensityDist>(prior);
  return {d.density_at(a), d.density_at(a / 2) / 2};
}

}  // namespace

bool TepJoint::in_support(const Rat& a) const {
  if (a <= 0) return false;
  auto [w0, w1] = branch_weights(prior_, a);
  return w0 + w1 > 0;
}

Rat TepJoint::p_delta_given_a(const Rat& a) const {
  auto [w0, w1] = branch_weights(prior_, a);
  if (w0 + w1 == 0)
    throw std::invalid_argument("p_delta_given_a: a outside the support of A");
  return w1 / (w0 + w1);
}

Rat TepJoint::e_b_given_a(const Rat& a) const {
  Rat p = p_delta_given_a(a);
  return 2 * a * (1 - p) + (a / 2) * p;
}

PointClass classify(const Rat& p_delta1) {
  if (p_delta1 == 0) return PointClass::ForcedSmaller;
  if (p_delta1 == 1) return PointClass::ForcedLarger;
  return PointClass::Interior;
}

ConditionalReport TepJoint::report_at(const Rat& a) const {
  Rat p = p_delta_given_a(a);
  return {a, p, 2 * a * (1 - p) + (a / 2) * p, classify(p)};
}

Rat TepJoint::e_b_unconditional() const { return Rat(3, 2) * expectation(prior_); }

TepJoint::Decomposition TepJoint::philosopher_decomposition() const {
  Rat e = expectation(prior_);
  return {2 * e, e, Rat(3, 2) * e};
}

Dist TepJoint::conditional_law_of_a(Conditioning which) const {
  switch (which) {
    case Conditioning::GivenSmaller: return prior_;
    case Conditioning::Unconditional: return law_of_a_;
    case Conditioning::GivenLarger: return double_of(prior_);
  }
  throw std::logic_error("conditional_law_of_a: bad enum");
}

std::vector<SupportCell> TepJoint::support_cells() const {
  std::vector<SupportCell> cells;
  if (discrete()) {
    for (const Atom& a : std::get<DiscreteDist>(law_of_a_).atoms())
      cells.push_back({a.value, a.value, a.value, a.mass, p_delta_given_a(a.value)});
    return cells;
  }
  // Refine by the prior's endpoints and their doubles; on each resulting
  // interval both f(a) and f(a/2) are constant.
  std::vector<Rat> pts;
  for (const Piece& p : std::get<StepDensityDist>(prior_).pieces()) {
    pts.push_back(p.lo);
    pts.push_back(p.hi);
    pts.push_back(p.lo * 2);
    pts.push_back(p.hi * 2);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const auto& law = std::get<StepDensityDist>(law_of_a_);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rat mass = law.cdf(pts[i + 1]) - law.cdf(pts[i]);
    if (mass == 0) continue;
    cells.push_back({pts[i], pts[i + 1], (pts[i] + pts[i + 1]) / 2, mass,
                     p_delta_given_a(pts[i])});
  }
  return cells;
}

}  // namespace tep
