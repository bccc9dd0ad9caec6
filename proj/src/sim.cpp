#include "tep/sim.hpp"

#include "tep/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tep {

std::uint64_t SeededSampler::mix(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + counter * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SeededSampler::unit(std::uint64_t seed, std::uint64_t counter) {
  return static_cast<double>(mix(seed, counter) >> 11) * 0x1.0p-53;
}

InverseCdfTable::InverseCdfTable(const Dist& d) : discrete_(is_discrete(d)) {
  double cum = 0;
  if (discrete_) {
    for (const Atom& a : std::get<DiscreteDist>(d).atoms()) {
      cum += to_double(a.mass);
      cum_.push_back(cum);
      values_.push_back(to_double(a.value));
    }
  } else {
    for (const Piece& p : std::get<StepDensityDist>(d).pieces()) {
      double lo = to_double(p.lo), hi = to_double(p.hi);
      cum += to_double(p.density * (p.hi - p.lo));
      cum_.push_back(cum);
      lo_.push_back(lo);
      wid_.push_back(hi - lo);
    }
  }
  cum_.back() = 1.0;  // guard against rounding in the last bucket
}

double InverseCdfTable::sample(double u) const {
  auto it = std::upper_bound(cum_.begin(), cum_.end(), u);
  std::size_t i = std::min(static_cast<std::size_t>(it - cum_.begin()), cum_.size() - 1);
  if (discrete_) return values_[i];
  double prev = i == 0 ? 0.0 : cum_[i - 1];
  double frac = (u - prev) / (cum_[i] - prev);
  return lo_[i] + frac * wid_[i];
}

std::vector<double> sample(const Dist& d, SeededSampler& sampler, std::uint64_t n) {
  InverseCdfTable table(d);
  std::vector<double> out;
  out.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(table.sample(sampler.next_unit()));
  return out;
}

Rat cover_win_prob_exact(const Rat& x, const Rat& y, const ProbeStrategy& s) {
  if (x <= 0 || y <= x) throw std::invalid_argument("cover: need 0 < x < y");
  return Rat(1, 2) + prob_event(s.probe, {{x, y}}) / 2;
}

namespace {

constexpr std::uint64_t kChunk = 1 << 14;
constexpr std::uint64_t kDrawsPerRound = 2;

template <typename ChunkFn, typename T>
std::vector<T> run_chunks(std::uint64_t n, RunMode mode, ChunkFn fn) {
  const std::uint64_t n_chunks = (n + kChunk - 1) / kChunk;
  std::vector<T> partial(n_chunks);
  if (mode == RunMode::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long c = 0; c < static_cast<long long>(n_chunks); ++c) {
      std::uint64_t b = static_cast<std::uint64_t>(c) * kChunk;
      partial[static_cast<std::size_t>(c)] = fn(b, std::min(b + kChunk, n));
    }
  } else {
    for (std::uint64_t c = 0; c < n_chunks; ++c) {
      std::uint64_t b = c * kChunk;
      partial[c] = fn(b, std::min(b + kChunk, n));
    }
  }
  return partial;
}

}  // namespace

CoverSimResult cover_simulate(double x, double y, const ProbeStrategy& s,
                              std::uint64_t n, std::uint64_t seed, RunMode mode) {
  if (n < 1) throw std::invalid_argument("cover_simulate: n must be >= 1");
  if (!(x < y)) throw std::invalid_argument("cover_simulate: need x < y");
  const InverseCdfTable table(s.probe);

  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> std::uint64_t {
    std::uint64_t wins = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t base = i * kDrawsPerRound;
      const bool hold_larger = SeededSampler::unit(seed, base) < 0.5;
      const double probe = table.sample(SeededSampler::unit(seed, base + 1));
      // guess "mine is larger" iff held amount strictly exceeds the probe
      if (hold_larger ? (y > probe) : (x <= probe)) ++wins;
    }
    return wins;
  };

  CoverSimResult out;
  out.n = n;
  for (std::uint64_t w : run_chunks<decltype(chunk), std::uint64_t>(n, mode, chunk))
    out.wins += w;
  out.win_freq = static_cast<double>(out.wins) / static_cast<double>(n);
  out.ci_halfwidth =
      1.96 * std::sqrt(out.win_freq * (1 - out.win_freq) / static_cast<double>(n));
  return out;
}

Rat policy_value_exact(const TepJoint& j, const SwitchPolicy& p) {
  Rat value(0);
  std::vector<SupportCell> cells = j.support_cells();

  // a threshold interior to a cell splits it; the decision is then constant
  // per sub-cell
  if (p.rule == SwitchPolicy::Rule::Threshold) {
    std::vector<SupportCell> split;
    for (const SupportCell& c : cells) {
      if (c.lo < c.hi && c.lo < p.threshold && p.threshold < c.hi) {
        Rat frac = (p.threshold - c.lo) / (c.hi - c.lo);
        split.push_back({c.lo, p.threshold, (c.lo + p.threshold) / 2, c.mass * frac,
                         c.p_delta1});
        split.push_back({p.threshold, c.hi, (p.threshold + c.hi) / 2,
                         c.mass * (1 - frac), c.p_delta1});
      } else {
        split.push_back(c);
      }
    }
    cells = std::move(split);
  }

  for (const SupportCell& c : cells) {
    bool do_switch = false;
    switch (p.rule) {
      case SwitchPolicy::Rule::Never: break;
      case SwitchPolicy::Rule::Always: do_switch = true; break;
      case SwitchPolicy::Rule::Threshold: do_switch = c.lo < p.threshold; break;
      case SwitchPolicy::Rule::Informed:
        // E(B | A=a) > a  <=>  P(Delta=1 | A=a) < 2/3
        do_switch = c.p_delta1 < Rat(2, 3);
        break;
    }
    // E(B | A=a) and a are both linear in a over the cell, so the cell mean
    // at the midpoint is exact.
    if (do_switch) {
      Rat coef = 2 * (1 - c.p_delta1) + c.p_delta1 / 2;
      value += c.mass * coef * c.rep;
    } else {
      value += c.mass * c.rep;
    }
  }
  return value;
}

BroomeExperimentReport broome_truncation_experiment(long K, std::uint64_t n,
                                                    std::uint64_t seed, RunMode mode) {
  if (K < 10) throw std::invalid_argument("broome experiment: K must be >= 10");
  if (n < 1000) throw std::invalid_argument("broome experiment: n must be >= 1000");

  PriorFamily fam;
  fam.kind = PriorFamily::Kind::Broome;
  Dist prior = family_member(fam, K);
  const auto& dd = std::get<DiscreteDist>(prior);

  BroomeExperimentReport rep;
  rep.truncation = K;
  rep.n = n;
  rep.seed = seed;
  rep.exact_mean = expectation(prior);
  rep.switch_favorable_mass = 1 - dd.atoms().back().mass / 2;

  const InverseCdfTable table(prior);
  struct Sums {
    double x = 0, gain = 0, gain_sq = 0;
  };
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) -> Sums {
    Sums s;
    for (std::uint64_t i = begin; i < end; ++i) {
      const std::uint64_t base = i * kDrawsPerRound;
      const double x = table.sample(SeededSampler::unit(seed, base));
      const bool hold_larger = SeededSampler::unit(seed, base + 1) < 0.5;
      const double gain = hold_larger ? -x : x;  // B - A under always-switch
      s.x += x;
      s.gain += gain;
      s.gain_sq += gain * gain;
    }
    return s;
  };

  Sums total;
  for (const Sums& s : run_chunks<decltype(chunk), Sums>(n, mode, chunk)) {
    total.x += s.x;
    total.gain += s.gain;
    total.gain_sq += s.gain_sq;
  }
  const double dn = static_cast<double>(n);
  rep.sample_mean = total.x / dn;
  rep.mean_ratio = rep.sample_mean / to_double(rep.exact_mean);
  rep.always_gain_mean = total.gain / dn;
  const double var = total.gain_sq / dn - rep.always_gain_mean * rep.always_gain_mean;
  rep.always_gain_sigma = std::sqrt(std::max(var, 0.0) / dn);
  return rep;
}

}  // namespace tep
