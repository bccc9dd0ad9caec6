#include "tep/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tep {

std::string family_name(PriorFamily::Kind k) {
  switch (k) {
    case PriorFamily::Kind::LogGridUniform: return "log_grid_uniform";
    case PriorFamily::Kind::TwoSidedLogGrid: return "two_sided_log_grid";
    case PriorFamily::Kind::LogDensityGrid: return "log_density_grid";
    case PriorFamily::Kind::UniformContinuous: return "uniform_continuous";
    case PriorFamily::Kind::UniformIntegers: return "uniform_integers";
    case PriorFamily::Kind::Broome: return "broome";
  }
  throw std::logic_error("family_name: bad kind");
}

PriorFamily::Kind parse_family(const std::string& name) {
  for (auto k : {PriorFamily::Kind::LogGridUniform, PriorFamily::Kind::TwoSidedLogGrid,
                 PriorFamily::Kind::LogDensityGrid, PriorFamily::Kind::UniformContinuous,
                 PriorFamily::Kind::UniformIntegers, PriorFamily::Kind::Broome})
    if (family_name(k) == name) return k;
  throw std::invalid_argument("unknown family: " + name);
}

Dist family_member(const PriorFamily& f, long index) {
  switch (f.kind) {
    case PriorFamily::Kind::LogGridUniform: {
      if (index < 1) throw std::invalid_argument("log_grid_uniform: N must be >= 1");
      std::vector<Atom> atoms;
      for (long k = 0; k <= index; ++k) atoms.push_back({pow2(k), Rat(1)});
      return DiscreteDist::normalize(std::move(atoms));
    }
    case PriorFamily::Kind::TwoSidedLogGrid: {
      if (index < 1) throw std::invalid_argument("two_sided_log_grid: N must be >= 1");
      std::vector<Atom> atoms;
      for (long k = -index; k <= index; ++k) atoms.push_back({pow2(k), Rat(1)});
      return DiscreteDist::normalize(std::move(atoms));
    }
    case PriorFamily::Kind::LogDensityGrid: {
      if (index < 1) throw std::invalid_argument("log_density_grid: N must be >= 1");
      const long m = f.pieces_per_octave;
      if (m < 1) throw std::invalid_argument("log_density_grid: pieces_per_octave >= 1");
      // Support [2^-N, 2^N]; within each octave the grid 1 + j/m, so that
      // doubling maps the grid onto itself. Cell density ~ 1/lo.
      std::vector<Piece> pieces;
      for (long k = -index; k < index; ++k)
        for (long j = 0; j < m; ++j) {
          Rat lo = pow2(k) * (Rat(1) + Rat(j, m));
          Rat hi = pow2(k) * (Rat(1) + Rat(j + 1, m));
          pieces.push_back({lo, hi, 1 / lo});
        }
      return StepDensityDist::normalize(std::move(pieces));
    }
    case PriorFamily::Kind::UniformContinuous:
      if (index < 2) throw std::invalid_argument("uniform_continuous: N must be >= 2");
      return StepDensityDist::uniform(Rat(1), Rat(index));
    case PriorFamily::Kind::UniformIntegers: {
      if (index < 2) throw std::invalid_argument("uniform_integers: N must be >= 2");
      std::vector<Atom> atoms;
      for (long v = 1; v <= index; ++v) atoms.push_back({Rat(v), Rat(1)});
      return DiscreteDist::normalize(std::move(atoms));
    }
    case PriorFamily::Kind::Broome: {
      if (index < 0) throw std::invalid_argument("broome: K must be >= 0");
      const Rat& p = f.broome_p;
      if (p <= 0 || p >= 1) throw std::invalid_argument("broome: p must be in (0,1)");
      std::vector<Atom> atoms;
      Rat mass = p;
      for (long n = 0; n <= index; ++n) {
        atoms.push_back({pow2(n), mass});
        mass *= (1 - p);
      }
      return DiscreteDist::normalize(std::move(atoms));
    }
  }
  throw std::logic_error("family_member: bad kind");
}

Rat DeviationProfile::mass_above(const Rat& eps) const {
  Rat s(0);
  for (auto it = levels.rbegin(); it != levels.rend() && it->first > eps; ++it)
    s += it->second;
  return s;
}

Rat DeviationProfile::nonhalf_mass() const { return mass_above(Rat(0)); }

DeviationProfile deviation_profile(const TepJoint& j) {
  std::map<Rat, Rat> acc;
  for (const SupportCell& c : j.support_cells()) {
    Rat dev = abs(c.p_delta1 - Rat(1, 2));
    acc.try_emplace(dev, 0);
    acc[dev] += c.mass;
  }
  DeviationProfile out;
  for (auto& [dev, mass] : acc) out.levels.emplace_back(dev, mass);
  return out;
}

Theorem3Bound theorem3_bound_check(const TepJoint& j, const Rat& eps) {
  if (eps <= 0 || eps >= Rat(1, 2))
    throw std::invalid_argument("theorem3_bound_check: eps must be in (0, 1/2)");
  Theorem3Bound b;
  b.lhs = tv_distance(j.prior(), double_of(j.prior()));
  b.rhs = 2 * deviation_profile(j).mass_above(eps) + 4 * eps / (1 - 2 * eps);
  if (b.lhs > b.rhs)
    throw std::logic_error("theorem3_bound_check: bound violated (impossible)");
  return b;
}

std::vector<std::pair<long, Rat>> octave_masses(const Dist& d) {
  std::map<long, Rat> acc;
  if (is_discrete(d)) {
    for (const Atom& a : std::get<DiscreteDist>(d).atoms()) {
      long k = floor_log2(a.value);
      acc.try_emplace(k, 0);
      acc[k] += a.mass;
    }
  } else {
    const auto& st = std::get<StepDensityDist>(d);
    for (const Piece& p : st.pieces()) {
      for (long k = floor_log2(p.lo); pow2(k) < p.hi; ++k) {
        Rat lo = std::max(p.lo, pow2(k));
        Rat hi = std::min(p.hi, pow2(k + 1));
        acc.try_emplace(k, 0);
        acc[k] += p.density * (hi - lo);
      }
    }
  }
  return {acc.begin(), acc.end()};
}

CorollaryStats corollary_stats(const TepJoint& j, const Rat& delta, const Rat& alpha1,
                               const Rat& alpha2, long m_max) {
  if (alpha1 <= alpha2)
    throw std::invalid_argument("corollary_stats: need alpha1 > alpha2 (upper quantiles)");
  CorollaryStats out;
  out.sup_octave_mass = Rat(0);
  for (const auto& [k, mass] : octave_masses(j.prior()))
    out.sup_octave_mass = std::max(out.sup_octave_mass, mass);

  Rat z1 = quantile(j.prior(), alpha1);
  Rat z2 = quantile(j.prior(), alpha2);
  out.quantile_gap_log2 = std::log2(to_double(z2 / z1));

  Rat threshold = delta * expectation(j.prior());
  out.below_mean_mass = prob_event(j.prior(), {{Rat(0), threshold}});

  Rat tv = tv_distance(j.prior(), double_of(j.prior()));
  out.c1_bound_min = Rat(1);
  for (long m = 1; m <= m_max; ++m) {
    Rat bound = Rat(1, m + 1) + Rat(m) * tv / 2;
    if (out.sup_octave_mass > bound)
      throw std::logic_error("corollary_stats: finite-m octave bound violated");
    out.c1_bound_min = std::min(out.c1_bound_min, bound);
  }
  return out;
}

Dist invariant_measure_window(const DiscreteDist& fractional, long M, long N) {
  if (M < 0 || N < 0)
    throw std::invalid_argument("invariant_measure_window: M, N must be >= 0");
  for (const Atom& a : fractional.atoms())
    if (a.value < 1 || a.value >= 2)
      throw std::invalid_argument(
          "invariant_measure_window: multipliers must lie in [1, 2)");
  std::vector<Atom> atoms;
  for (long k = -M; k <= N; ++k)
    for (const Atom& a : fractional.atoms())
      atoms.push_back({pow2(k) * a.value, a.mass});
  Dist prior = DiscreteDist::normalize(std::move(atoms));
  // The construction makes every interior conditional an exact coin flip.
  TepJoint j(prior);
  for (long k = -M + 1; k <= N; ++k)
    for (const Atom& a : fractional.atoms())
      if (j.p_delta_given_a(pow2(k) * a.value) != Rat(1, 2))
        throw std::logic_error("invariant_measure_window: interior conditional != 1/2");
  return prior;
}

ConjectureDiagnostics conjecture_diagnostics(const TepJoint& j) {
  if (!j.discrete())
    throw std::invalid_argument("conjecture_diagnostics: discrete priors only");
  Log2Decomposition dec = log2_decompose(std::get<DiscreteDist>(j.prior()));

  // multiplier marginal across octaves
  std::map<Rat, Rat> mult_marginal;
  for (const auto& row : dec.rows)
    for (const Atom& a : row.profile.atoms()) {
      mult_marginal.try_emplace(a.value, 0);
      mult_marginal[a.value] += a.mass * row.total_mass;
    }

  ConjectureDiagnostics out;
  out.dependence_gap = Rat(0);
  for (const auto& row : dec.rows)
    for (const auto& [v, pv] : mult_marginal) {
      Rat joint = row.profile.mass_at(v) * row.total_mass;
      out.dependence_gap = std::max(out.dependence_gap, Rat(abs(joint - row.total_mass * pv)));
    }

  long k_min = dec.rows.front().octave, k_max = dec.rows.back().octave;
  Rat unif(1, k_max - k_min + 1);
  out.uniformity_gap = Rat(0);
  std::map<long, Rat> occ;
  for (const auto& row : dec.rows) occ[row.octave] = row.total_mass;
  for (long k = k_min; k <= k_max; ++k) {
    Rat pk = occ.count(k) ? occ[k] : Rat(0);
    out.uniformity_gap = std::max(out.uniformity_gap, Rat(abs(pk - unif)));
  }
  out.nonhalf_mass = deviation_profile(j).nonhalf_mass();
  return out;
}

SweepRow sweep_row(const std::string& family, long index, const Dist& prior,
                   const SweepParams& params) {
  TepJoint j(prior);
  SweepRow row;
  row.family = family;
  row.index = index;
  row.tv = tv_distance(prior, double_of(prior));
  DeviationProfile prof = deviation_profile(j);
  row.nonhalf_mass = prof.nonhalf_mass();
  row.dev_mass_eps = prof.mass_above(params.eps);
  Theorem3Bound b = theorem3_bound_check(j, params.eps);
  row.t3_lhs = b.lhs;
  row.t3_rhs = b.rhs;
  CorollaryStats cs =
      corollary_stats(j, params.delta, params.alpha1, params.alpha2, params.m_max);
  row.sup_octave_mass = cs.sup_octave_mass;
  row.quantile_gap_log2 = cs.quantile_gap_log2;
  row.below_mean_mass = cs.below_mean_mass;
  row.c1_bound_min = cs.c1_bound_min;
  return row;
}

std::vector<SweepRow> run_sweep(const PriorFamily& f, long from, long to,
                                const SweepParams& params, bool parallel) {
  if (to < from) return {};
  const long n = to - from + 1;
  std::vector<SweepRow> rows(static_cast<std::size_t>(n));
  const std::string name = family_name(f.kind);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i)
      rows[static_cast<std::size_t>(i)] =
          sweep_row(name, from + i, family_member(f, from + i), params);
  } else {
    for (long i = 0; i < n; ++i)
      rows[static_cast<std::size_t>(i)] =
          sweep_row(name, from + i, family_member(f, from + i), params);
  }
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, int decimal_digits) {
  std::ostringstream out;
  out << "family,index,tv,nonhalf_mass,dev_mass_eps,sup_octave_mass,"
         "quantile_gap_log2,below_mean_mass,t3_lhs,t3_rhs,c1_bound_min,"
         "tv_dec,nonhalf_mass_dec,dev_mass_eps_dec,sup_octave_mass_dec,"
         "below_mean_mass_dec,t3_lhs_dec,t3_rhs_dec,c1_bound_min_dec\n";
  for (const SweepRow& r : rows) {
    out << r.family << ',' << r.index << ',' << to_fraction_string(r.tv) << ','
        << to_fraction_string(r.nonhalf_mass) << ','
        << to_fraction_string(r.dev_mass_eps) << ','
        << to_fraction_string(r.sup_octave_mass) << ',';
    std::ostringstream qg;
    qg.precision(decimal_digits);
    qg << r.quantile_gap_log2;
    out << qg.str() << ',' << to_fraction_string(r.below_mean_mass) << ','
        << to_fraction_string(r.t3_lhs) << ',' << to_fraction_string(r.t3_rhs) << ','
        << to_fraction_string(r.c1_bound_min) << ','
        << to_decimal_string(r.tv, decimal_digits) << ','
        << to_decimal_string(r.nonhalf_mass, decimal_digits) << ','
        << to_decimal_string(r.dev_mass_eps, decimal_digits) << ','
        << to_decimal_string(r.sup_octave_mass, decimal_digits) << ','
        << to_decimal_string(r.below_mean_mass, decimal_digits) << ','
        << to_decimal_string(r.t3_lhs, decimal_digits) << ','
        << to_decimal_string(r.t3_rhs, decimal_digits) << ','
        << to_decimal_string(r.c1_bound_min, decimal_digits) << '\n';
  }
  return out.str();
}

}  // namespace tep
