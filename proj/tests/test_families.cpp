#include "tep/families.hpp"
#include "tep/json_io.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <sstream>

using namespace tep;

namespace {

PriorFamily make(PriorFamily::Kind k) {
  PriorFamily f;
  f.kind = k;
  return f;
}

}  // namespace

TEST_CASE("family members: shapes and parameter validation") {
  auto lg = std::get<DiscreteDist>(family_member(make(PriorFamily::Kind::LogGridUniform), 4));
  REQUIRE(lg.atoms().size() == 5);
  for (const Atom& a : lg.atoms()) CHECK(a.mass == Rat(1, 5));
  CHECK(lg.atoms().back().value == Rat(16));

  auto uc = std::get<StepDensityDist>(
      family_member(make(PriorFamily::Kind::UniformContinuous), 10));
  REQUIRE(uc.pieces().size() == 1);
  CHECK(uc.pieces()[0].density == Rat(1, 9));

  auto br = std::get<DiscreteDist>(family_member(make(PriorFamily::Kind::Broome), 6));
  Rat s(0), mass(1, 3);
  for (long n = 0; n <= 6; ++n) {
    s += mass;
    mass *= Rat(2, 3);
  }
  CHECK(br.atoms()[0].mass == Rat(1, 3) / s);  // renormalized geometric

  auto ts = std::get<DiscreteDist>(
      family_member(make(PriorFamily::Kind::TwoSidedLogGrid), 3));
  REQUIRE(ts.atoms().size() == 7);
  CHECK(ts.atoms()[0].value == Rat(1, 8));

  CHECK_THROWS_AS(family_member(make(PriorFamily::Kind::LogGridUniform), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(family_member(make(PriorFamily::Kind::UniformContinuous), 1),
                  std::invalid_argument);
  PriorFamily bad = make(PriorFamily::Kind::Broome);
  bad.broome_p = Rat(2);
  CHECK_THROWS_AS(family_member(bad, 5), std::invalid_argument);

  CHECK(parse_family("log_grid_uniform") == PriorFamily::Kind::LogGridUniform);
  CHECK_THROWS_AS(parse_family("nope"), std::invalid_argument);
}

TEST_CASE("log density grid: doubling maps the grid onto itself") {
  PriorFamily f = make(PriorFamily::Kind::LogDensityGrid);
  f.pieces_per_octave = 4;
  Dist d = family_member(f, 3);  // support [1/8, 8]
  TepJoint j(d);
  // every interior conditional is an exact coin flip
  const auto& st = std::get<StepDensityDist>(d);
  for (const Piece& p : st.pieces())
    if (p.lo >= Rat(1, 4))
      CHECK(j.p_delta_given_a((p.lo + p.hi) / 2) == Rat(1, 2));
}

TEST_CASE("deviation profiles") {
  PriorFamily lg = make(PriorFamily::Kind::LogGridUniform);
  for (long N : {4L, 16L, 64L}) {
    auto prof = deviation_profile(TepJoint(family_member(lg, N)));
    for (Rat eps : {Rat(1, 100), Rat(1, 8), Rat(49, 100)})
      CHECK(prof.mass_above(eps) == Rat(1, N + 1));
    CHECK(prof.nonhalf_mass() == Rat(1, N + 1));
  }

  auto pu = deviation_profile(
      TepJoint(family_member(make(PriorFamily::Kind::UniformContinuous), 20)));
  CHECK(pu.nonhalf_mass() == 1);  // conditional is 1/3, 0 or 1 -- never 1/2
  CHECK(pu.mass_above(Rat(1, 8)) == 1);
  // for eps above the interior deviation 1/6 only the edges remain
  CHECK(pu.mass_above(Rat(1, 4)) == 1 - Rat(3, 4) * Rat(18, 19));

  auto pp = deviation_profile(TepJoint(DiscreteDist::normalize({{Rat(3), Rat(1)}})));
  CHECK(pp.mass_above(Rat(49, 100)) == 1);  // conditionals are all 0/1
}

TEST_CASE("theorem 3 bound: examples and exhaustive family grid") {
  PriorFamily lg = make(PriorFamily::Kind::LogGridUniform);
  auto b = theorem3_bound_check(TepJoint(family_member(lg, 9)), Rat(1, 10));
  CHECK(b.lhs == Rat(1, 10));
  CHECK(b.rhs == Rat(1, 5) + Rat(1, 2));

  auto bp = theorem3_bound_check(TepJoint(DiscreteDist::normalize({{Rat(2), Rat(1)}})),
                                 Rat(1, 4));
  CHECK(bp.lhs == 1);
  CHECK(bp.rhs == 4);

  CHECK_NOTHROW(theorem3_bound_check(TepJoint(family_member(make(PriorFamily::Kind::Broome), 8)),
                                     Rat(1, 8)));
  CHECK_THROWS_AS(theorem3_bound_check(TepJoint(family_member(lg, 4)), Rat(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("corollary stats on the log grid") {
  PriorFamily lg = make(PriorFamily::Kind::LogGridUniform);
  SweepParams p;
  Rat prev_sup(1), prev_below(-1);
  double prev_gap = -1;
  for (long N : {4L, 8L, 16L, 32L}) {
    auto cs = corollary_stats(TepJoint(family_member(lg, N)), p.delta, p.alpha1,
                              p.alpha2, p.m_max);
    CHECK(cs.sup_octave_mass == Rat(1, N + 1));
    CHECK(cs.sup_octave_mass < prev_sup);
    CHECK(cs.quantile_gap_log2 > prev_gap);
    CHECK(cs.below_mean_mass >= prev_below);  // 0 until delta E(X) reaches 1
    CHECK(cs.sup_octave_mass <= cs.c1_bound_min);
    prev_sup = cs.sup_octave_mass;
    prev_gap = cs.quantile_gap_log2;
    prev_below = cs.below_mean_mass;
  }
  // once delta E(X) clears the bottom of the support the mass is positive
  // and strictly increasing in N
  auto c16 = corollary_stats(TepJoint(family_member(lg, 16)), p.delta, p.alpha1,
                             p.alpha2, p.m_max);
  auto c64 = corollary_stats(TepJoint(family_member(lg, 64)), p.delta, p.alpha1,
                             p.alpha2, p.m_max);
  CHECK(c16.below_mean_mass == Rat(7, 17));
  CHECK(c64.below_mean_mass == Rat(53, 65));

  CHECK_THROWS_AS(corollary_stats(TepJoint(family_member(lg, 4)), Rat(1, 100),
                                  Rat(1, 4), Rat(1, 2), 4),
                  std::invalid_argument);
}

TEST_CASE("negative example families keep deviation mass bounded away from 0") {
  for (auto kind : {PriorFamily::Kind::UniformContinuous,
                    PriorFamily::Kind::UniformIntegers}) {
    for (long N = 4; N <= 64; N += 12) {
      auto prof = deviation_profile(TepJoint(family_member(make(kind), N)));
      CHECK(prof.mass_above(Rat(1, 8)) >= Rat(1, 2));
    }
  }
}

TEST_CASE("invariant measure window") {
  auto frac_point = DiscreteDist::normalize({{Rat(1), Rat(1)}});
  Dist w = invariant_measure_window(frac_point, 0, 4);
  CHECK(tv_distance(w, family_member(make(PriorFamily::Kind::LogGridUniform), 4)) == 0);

  auto frac2 = DiscreteDist::normalize({{Rat(1), Rat(1)}, {Rat(3, 2), Rat(1)}});
  Dist w2 = invariant_measure_window(frac2, 1, 1);
  CHECK(std::get<DiscreteDist>(w2).atoms().size() == 6);
  TepJoint j2(w2);
  CHECK(j2.p_delta_given_a(Rat(1)) == Rat(1, 2));
  CHECK(j2.p_delta_given_a(Rat(3, 2)) == Rat(1, 2));
  CHECK(j2.p_delta_given_a(Rat(2)) == Rat(1, 2));
  CHECK(j2.p_delta_given_a(Rat(3)) == Rat(1, 2));

  // doubling only moves the edge octaves: TV = 1/(M+N+1)
  auto frac3 = DiscreteDist::normalize(
      {{Rat(1), Rat(2)}, {Rat(5, 4), Rat(1)}, {Rat(7, 4), Rat(3)}});
  Dist w3 = invariant_measure_window(frac3, 2, 2);
  CHECK(tv_distance(w3, double_of(w3)) == Rat(1, 5));

  CHECK_THROWS_AS(invariant_measure_window(
                      DiscreteDist::normalize({{Rat(3), Rat(1)}}), 1, 1),
                  std::invalid_argument);
}

TEST_CASE("conjecture diagnostics are reported, not asserted") {
  auto d1 = conjecture_diagnostics(
      TepJoint(family_member(make(PriorFamily::Kind::LogGridUniform), 8)));
  CHECK(d1.dependence_gap == 0);
  CHECK(d1.uniformity_gap == 0);

  auto frac = DiscreteDist::normalize({{Rat(1), Rat(1)}, {Rat(3, 2), Rat(2)}});
  auto d2 = conjecture_diagnostics(TepJoint(invariant_measure_window(frac, 2, 2)));
  CHECK(d2.dependence_gap == 0);

  auto d3 = conjecture_diagnostics(
      TepJoint(family_member(make(PriorFamily::Kind::Broome), 8)));
  CHECK(d3.uniformity_gap > 0);
}

TEST_CASE("sweep: determinism, CSV shape, re-parse of exact values") {
  PriorFamily lg = make(PriorFamily::Kind::LogGridUniform);
  SweepParams params;
  auto serial = run_sweep(lg, 4, 12, params, false);
  auto parallel = run_sweep(lg, 4, 12, params, true);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].tv == parallel[i].tv);
    CHECK(serial[i].tv == Rat(1, serial[i].index + 1));
    CHECK(serial[i].below_mean_mass == parallel[i].below_mean_mass);
  }

  std::string csv = sweep_csv(serial);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header.rfind("family,index,tv,nonhalf_mass,dev_mass_eps,sup_octave_mass,"
                     "quantile_gap_log2,below_mean_mass,t3_lhs,t3_rhs,c1_bound_min",
                     0) == 0);
  std::string row;
  std::getline(lines, row);
  // third field re-parses to the exact tv of the first member
  std::istringstream fields(row);
  std::string cell;
  std::getline(fields, cell, ',');
  CHECK(cell == "log_grid_uniform");
  std::getline(fields, cell, ',');
  std::getline(fields, cell, ',');
  CHECK(parse_rational(cell) == serial[0].tv);

  CHECK(run_sweep(lg, 5, 4, params).empty());
  CHECK(sweep_csv({}).find('\n') == sweep_csv({}).size() - 1);  // header only

  auto un = run_sweep(make(PriorFamily::Kind::UniformContinuous), 4, 10, params);
  for (const SweepRow& r : un) CHECK(r.nonhalf_mass == 1);
}
