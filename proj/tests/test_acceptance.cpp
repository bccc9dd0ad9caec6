// Acceptance gate: ten end-to-end criteria, one printed pass/fail line each.
// Criterion 6 includes a strict exact-mass threshold that the exact value
// does not reach (see the printed message); it is asserted faithfully.
#include "tep/families.hpp"
#include "tep/json_io.hpp"
#include "tep/order.hpp"
#include "tep/sim.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdio>

using namespace tep;
using tep_test::random_dyadic_prior;

namespace {

class Criterion {
 public:
  Criterion(int id, const char* label)
      : id_(id), label_(label), t0_(std::chrono::steady_clock::now()) {}
  ~Criterion() {
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok_ ? "PASS" : "FAIL", id_,
                label_, s);
    std::fflush(stdout);
  }
  void note(bool c) { ok_ = ok_ && c; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  int id_;
  const char* label_;
  bool ok_ = true;
  std::chrono::steady_clock::time_point t0_;
};

// record into the criterion line and into the doctest report
#define EXPECT(crit, cond)   \
  do {                       \
    bool c__ = (cond);       \
    (crit).note(c__);        \
    CHECK(c__);              \
  } while (0)

Dist broome_prior(long K) {
  PriorFamily f;
  f.kind = PriorFamily::Kind::Broome;
  return family_member(f, K);
}

Dist log_grid(long N) {
  PriorFamily f;
  f.kind = PriorFamily::Kind::LogGridUniform;
  return family_member(f, N);
}

constexpr std::uint64_t kFrozenSeed = 1;

}  // namespace

TEST_CASE("acceptance") {
  {
    Criterion c(1, "geometric prior conditional expectations, exact");
    TepJoint j(broome_prior(20));
    for (long k = 1; k <= 20; ++k)
      EXPECT(c, j.e_b_given_a(pow2(k)) == Rat(11) * pow2(k) / 10);
    EXPECT(c, j.e_b_given_a(Rat(1)) == Rat(2));
    EXPECT(c, c.elapsed() < 1.0);
  }

  {
    Criterion c(2, "uniform continuous prior: interior 2/3 and 3/4 event mass");
    TepJoint j(StepDensityDist::uniform(Rat(1), Rat(10)));
    for (long a : {3L, 5L, 9L})
      EXPECT(c, 1 - j.p_delta_given_a(Rat(a)) == Rat(2, 3));
    TepJoint jn(StepDensityDist::uniform(Rat(1), Rat(1000)));
    Rat mass = prob_event(jn.law_of_a(), {{Rat(2), Rat(1000)}});
    EXPECT(c, mass == Rat(3, 4) * Rat(998, 999));
    EXPECT(c, abs(mass - Rat(3, 4)) <= Rat(1, 100));
    EXPECT(c, c.elapsed() < 1.0);
  }

  {
    Criterion c(3, "log-uniform interior coin flips, exact deviation mass");
    for (long N : {4L, 16L, 64L, 256L}) {
      TepJoint j(log_grid(N));
      for (long k = 1; k <= N; ++k)
        EXPECT(c, j.p_delta_given_a(pow2(k)) == Rat(1, 2));
      EXPECT(c, deviation_profile(j).nonhalf_mass() == Rat(1, N + 1));
    }
    auto frac = DiscreteDist::normalize(
        {{Rat(1), Rat(2)}, {Rat(5, 4), Rat(1)}, {Rat(3, 2), Rat(3)}});
    for (long N : {4L, 16L, 64L}) {
      TepJoint j(invariant_measure_window(frac, 2, N));
      EXPECT(c, deviation_profile(j).nonhalf_mass() == Rat(1, N + 3));
    }
    EXPECT(c, c.elapsed() < 5.0);
  }

  {
    Criterion c(4, "ordering certificates on 500 randomized priors");
    SeededSampler rng(20240824);
    for (int i = 0; i < 500; ++i) {
      TepJoint j(random_dyadic_prior(rng));
      EXPECT(c, check_nonindependence(j) > 0);
      auto so = check_stochastic_order(j);
      EXPECT(c, so.stochastic_order_ok && so.strict_witness_a.has_value());
      auto od = check_orthant_dependence(j);
      EXPECT(c, od.orthant_ok && od.orthant_strict_witness.has_value());
      auto g = monotone_gap(j, MonotoneProbe::identity());
      EXPECT(c, g.low < g.mid && g.mid < g.high);
      Rat mass(0), p_sum(0), eb_sum(0);
      for (const SupportCell& cell : j.support_cells()) {
        mass += cell.mass;
        p_sum += cell.mass * cell.p_delta1;
        eb_sum += cell.mass *
                  (2 * (1 - cell.p_delta1) + cell.p_delta1 / 2) * cell.rep;
      }
      EXPECT(c, mass == 1);
      EXPECT(c, p_sum == Rat(1, 2));
      EXPECT(c, eb_sum == j.e_b_unconditional());
    }
    EXPECT(c, c.elapsed() < 60.0);
  }

  {
    Criterion c(5, "TV bound holds across the standard sweep");
    const PriorFamily::Kind kinds[] = {
        PriorFamily::Kind::LogGridUniform, PriorFamily::Kind::TwoSidedLogGrid,
        PriorFamily::Kind::UniformContinuous, PriorFamily::Kind::UniformIntegers};
    const Rat eps_grid[] = {Rat(1, 100), Rat(1, 8), Rat(1, 4), Rat(2, 5)};
    for (auto kind : kinds) {
      PriorFamily f;
      f.kind = kind;
      for (long idx = 4; idx <= 64; idx += 3) {
        TepJoint j(family_member(f, idx));
        for (const Rat& eps : eps_grid) {
          auto b = theorem3_bound_check(j, eps);  // throws on violation
          EXPECT(c, b.lhs <= b.rhs);
        }
      }
    }
  }

  {
    Criterion c(6, "octave concentration trio on the log grid");
    SweepParams p;  // delta = 1/100, alpha1 = 1/2, alpha2 = 1/4
    Rat prev_sup(1), prev_below(-1);
    double prev_gap = -1;
    Rat below64;
    for (long N : {8L, 16L, 32L, 64L}) {
      auto cs = corollary_stats(TepJoint(log_grid(N)), p.delta, p.alpha1,
                                p.alpha2, p.m_max);
      EXPECT(c, cs.sup_octave_mass == Rat(1, N + 1));
      EXPECT(c, cs.sup_octave_mass < prev_sup);
      EXPECT(c, cs.quantile_gap_log2 > prev_gap);
      EXPECT(c, cs.below_mean_mass > prev_below);
      prev_sup = cs.sup_octave_mass;
      prev_gap = cs.quantile_gap_log2;
      prev_below = cs.below_mean_mass;
      below64 = cs.below_mean_mass;
    }
    MESSAGE("exact below-mean mass at N=64 is "
            << to_fraction_string(below64) << " = "
            << to_decimal_string(below64, 6)
            << "; the > 0.99 threshold is not attainable at this N");
    EXPECT(c, below64 > Rat(99, 100));
    EXPECT(c, c.elapsed() < 5.0);
  }

  {
    Criterion c(7, "negative examples keep deviation mass >= 1/2");
    for (auto kind : {PriorFamily::Kind::UniformIntegers,
                      PriorFamily::Kind::UniformContinuous}) {
      PriorFamily f;
      f.kind = kind;
      for (long N = 4; N <= 64; ++N) {
        auto prof = deviation_profile(TepJoint(family_member(f, N)));
        EXPECT(c, prof.mass_above(Rat(1, 8)) >= Rat(1, 2));
      }
    }
  }

  {
    Criterion c(8, "probe strategy: exact 7/10 and simulation agreement");
    ProbeStrategy probe{StepDensityDist::uniform(Rat(0), Rat(10))};
    EXPECT(c, cover_win_prob_exact(Rat(3), Rat(7), probe) == Rat(7, 10));
    auto sim = cover_simulate(3.0, 7.0, probe, 1000000, kFrozenSeed);
    EXPECT(c, std::abs(sim.win_freq - 0.7) < 0.002);
    EXPECT(c, cover_win_prob_exact(Rat(20), Rat(40), probe) == Rat(1, 2));
    EXPECT(c, c.elapsed() < 10.0);
  }

  {
    Criterion c(9, "heavy tail: sample mean trails expectation");
    auto rep = broome_truncation_experiment(40, 1000000, kFrozenSeed);
    EXPECT(c, rep.mean_ratio < 0.5);
    EXPECT(c, rep.switch_favorable_mass > Rat(9999, 10000));
    EXPECT(c, std::abs(rep.always_gain_mean) < 4 * rep.always_gain_sigma);
    EXPECT(c, c.elapsed() < 30.0);
  }

  {
    Criterion c(10, "experiment reports reproduce byte for byte");
    ProbeStrategy probe{StepDensityDist::uniform(Rat(0), Rat(10))};
    Json cov1 = cover_report(Rat(3), Rat(7), probe, 1000000, kFrozenSeed);
    Json cov2 = cover_report(Rat(3), Rat(7), probe, 1000000, kFrozenSeed);
    EXPECT(c, cov1.dump() == cov2.dump());
    Json br1 = broome_report(broome_truncation_experiment(40, 1000000, kFrozenSeed));
    Json br2 = broome_report(broome_truncation_experiment(40, 1000000, kFrozenSeed));
    EXPECT(c, br1.dump() == br2.dump());
  }
}
