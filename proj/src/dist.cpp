#include "tep/dist.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace tep {

DiscreteDist DiscreteDist::normalize(std::vector<Atom> raw) {
  if (raw.empty()) throw std::invalid_argument("normalize: no atoms");
  std::sort(raw.begin(), raw.end(),
            [](const Atom& a, const Atom& b) { return a.value < b.value; });
  DiscreteDist d;
  Rat total(0);
  for (const Atom& a : raw) {
    if (a.value <= 0) throw std::invalid_argument("normalize: non-positive atom value");
    if (a.mass < 0) throw std::invalid_argument("normalize: negative mass");
    if (a.mass == 0) continue;
    total += a.mass;
    if (!d.atoms_.empty() && d.atoms_.back().value == a.value)
      d.atoms_.back().mass += a.mass;
    else
      d.atoms_.push_back(a);
  }
  if (total == 0) throw std::invalid_argument("normalize: zero total mass");
  for (Atom& a : d.atoms_) a.mass /= total;
  return d;
}

Rat DiscreteDist::mass_at(const Rat& v) const {
  auto it = std::lower_bound(atoms_.begin(), atoms_.end(), v,
                             [](const Atom& a, const Rat& x) { return a.value < x; });
  if (it != atoms_.end() && it->value == v) return it->mass;
  return Rat(0);
}

Rat DiscreteDist::cdf(const Rat& v) const {
  Rat s(0);
  for (const Atom& a : atoms_) {
    if (a.value > v) break;
    s += a.mass;
  }
  return s;
}

Rat DiscreteDist::survival_geq(const Rat& v) const {
  Rat s(0);
  for (auto it = atoms_.rbegin(); it != atoms_.rend() && it->value >= v; ++it)
    s += it->mass;
  return s;
}

StepDensityDist StepDensityDist::normalize(std::vector<Piece> raw) {
  if (raw.empty()) throw std::invalid_argument("normalize: no pieces");
  std::sort(raw.begin(), raw.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  StepDensityDist d;
  Rat total(0);
  for (const Piece& p : raw) {
    // lo = 0 is allowed: probe distributions need not be envelope amounts
    if (p.lo < 0 || p.hi <= p.lo)
      throw std::invalid_argument("normalize: piece needs 0 <= lo < hi");
    if (p.density < 0) throw std::invalid_argument("normalize: negative density");
    if (!d.pieces_.empty() && p.lo < d.pieces_.back().hi)
      throw std::invalid_argument("normalize: overlapping pieces");
    if (p.density == 0) continue;
    total += p.density * (p.hi - p.lo);
    d.pieces_.push_back(p);
  }
  if (total == 0) throw std::invalid_argument("normalize: zero total mass");
  for (Piece& p : d.pieces_) p.density /= total;
  return d;
}

StepDensityDist StepDensityDist::uniform(const Rat& lo, const Rat& hi) {
  return normalize({Piece{lo, hi, Rat(1)}});
}

Rat StepDensityDist::density_at(const Rat& v) const {
  for (const Piece& p : pieces_) {
    if (v < p.lo) break;
    if (v < p.hi) return p.density;
  }
  return Rat(0);
}

Rat StepDensityDist::cdf(const Rat& v) const {
  Rat s(0);
  for (const Piece& p : pieces_) {
    if (v <= p.lo) break;
    s += p.density * (std::min(v, p.hi) - p.lo);
  }
  return s;
}

Rat StepDensityDist::survival_geq(const Rat& v) const { return Rat(1) - cdf(v); }

bool is_discrete(const Dist& d) { return std::holds_alternative<DiscreteDist>(d); }

DiscreteDist double_of(const DiscreteDist& d) {
  std::vector<Atom> atoms = d.atoms();
  for (Atom& a : atoms) a.value *= 2;
  return DiscreteDist::normalize(std::move(atoms));
}

StepDensityDist double_of(const StepDensityDist& d) {
  std::vector<Piece> pieces = d.pieces();
  for (Piece& p : pieces) {
    p.lo *= 2;
    p.hi *= 2;
    p.density /= 2;
  }
  return StepDensityDist::normalize(std::move(pieces));
}

Dist double_of(const Dist& d) {
  return std::visit([](const auto& x) -> Dist { return double_of(x); }, d);
}

namespace {

Rat tv_discrete(const DiscreteDist& a, const DiscreteDist& b) {
  Rat sum(0);
  std::size_t i = 0, j = 0;
  const auto& x = a.atoms();
  const auto& y = b.atoms();
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].value < y[j].value)) {
      sum += x[i++].mass;
    } else if (i == x.size() || y[j].value < x[i].value) {
      sum += y[j++].mass;
    } else {
      sum += abs(x[i].mass - y[j].mass);
      ++i;
      ++j;
    }
  }
  return sum / 2;
}

std::vector<Rat> merged_endpoints(const StepDensityDist& a, const StepDensityDist& b) {
  std::vector<Rat> pts;
  for (const Piece& p : a.pieces()) {
    pts.push_back(p.lo);
    pts.push_back(p.hi);
  }
  for (const Piece& p : b.pieces()) {
    pts.push_back(p.lo);
    pts.push_back(p.hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Rat tv_step(const StepDensityDist& a, const StepDensityDist& b) {
  Rat sum(0);
  auto pts = merged_endpoints(a, b);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Rat& lo = pts[i];
    const Rat& hi = pts[i + 1];
    sum += abs(a.density_at(lo) - b.density_at(lo)) * (hi - lo);
  }
  return sum / 2;
}

}  // namespace

Rat tv_distance(const Dist& a, const Dist& b) {
  if (is_discrete(a) != is_discrete(b))
    throw std::invalid_argument("tv_distance: mixed backends");
  if (is_discrete(a))
    return tv_discrete(std::get<DiscreteDist>(a), std::get<DiscreteDist>(b));
  return tv_step(std::get<StepDensityDist>(a), std::get<StepDensityDist>(b));
}

Rat expectation(const Dist& d) {
  if (is_discrete(d)) {
    Rat s(0);
    for (const Atom& a : std::get<DiscreteDist>(d).atoms()) s += a.value * a.mass;
    return s;
  }
  Rat s(0);
  for (const Piece& p : std::get<StepDensityDist>(d).pieces())
    s += p.density * (p.hi * p.hi - p.lo * p.lo) / 2;
  return s;
}

Rat quantile(const Dist& d, const Rat& alpha) {
  if (alpha <= 0 || alpha >= 1)
    throw std::invalid_argument("quantile: alpha must be in (0,1)");
  if (is_discrete(d)) {
    const auto& atoms = std::get<DiscreteDist>(d).atoms();
    Rat tail(0);
    for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) {
      if (alpha <= tail + it->mass) return it->value;
      tail += it->mass;
    }
  } else {
    const auto& pieces = std::get<StepDensityDist>(d).pieces();
    Rat tail(0);
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      Rat mass = it->density * (it->hi - it->lo);
      if (alpha <= tail + mass) return it->hi - (alpha - tail) / it->density;
      tail += mass;
    }
  }
  throw std::logic_error("quantile: mass did not sum to 1");
}

Rat prob_event(const Dist& d, const std::vector<Interval>& intervals) {
  std::vector<Interval> iv = intervals;
  std::sort(iv.begin(), iv.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < iv.size(); ++i) {
    if (iv[i].hi < iv[i].lo) throw std::invalid_argument("prob_event: hi < lo");
    if (i > 0 && iv[i].lo < iv[i - 1].hi)
      throw std::invalid_argument("prob_event: overlapping intervals");
  }
  Rat s(0);
  if (is_discrete(d)) {
    for (const Atom& a : std::get<DiscreteDist>(d).atoms())
      for (const Interval& v : iv)
        if (v.lo <= a.value && a.value < v.hi) s += a.mass;
  } else {
    const auto& st = std::get<StepDensityDist>(d);
    for (const Interval& v : iv) s += st.cdf(v.hi) - st.cdf(v.lo);
  }
  return s;
}

Dist mixture(const Dist& d1, const Rat& w1, const Dist& d2, const Rat& w2) {
  if (w1 < 0 || w2 < 0 || w1 + w2 != 1)
    throw std::invalid_argument("mixture: weights must be nonnegative and sum to 1");
  if (w1 == 0) return d2;
  if (w2 == 0) return d1;
  if (is_discrete(d1) != is_discrete(d2))
    throw std::invalid_argument("mixture: mixed backends");
  if (is_discrete(d1)) {
    std::vector<Atom> atoms;
    for (const Atom& a : std::get<DiscreteDist>(d1).atoms())
      atoms.push_back({a.value, a.mass * w1});
    for (const Atom& a : std::get<DiscreteDist>(d2).atoms())
      atoms.push_back({a.value, a.mass * w2});
    return DiscreteDist::normalize(std::move(atoms));
  }
  const auto& s1 = std::get<StepDensityDist>(d1);
  const auto& s2 = std::get<StepDensityDist>(d2);
  auto pts = merged_endpoints(s1, s2);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    Rat dens = w1 * s1.density_at(pts[i]) + w2 * s2.density_at(pts[i]);
    if (dens > 0) pieces.push_back({pts[i], pts[i + 1], dens});
  }
  return StepDensityDist::normalize(std::move(pieces));
}

Log2Decomposition log2_decompose(const DiscreteDist& d) {
  std::map<long, std::vector<Atom>> octaves;
  std::map<long, Rat> totals;
  for (const Atom& a : d.atoms()) {
    long k = floor_log2(a.value);
    octaves[k].push_back({a.value / pow2(k), a.mass});
    totals.try_emplace(k, 0);
    totals[k] += a.mass;
  }
  Log2Decomposition out;
  for (auto& [k, atoms] : octaves)
    out.rows.push_back({k, totals[k], DiscreteDist::normalize(std::move(atoms))});
  return out;
}

}  // namespace tep
