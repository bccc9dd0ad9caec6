#include "tep/json_io.hpp"

#include "tep/order.hpp"

#include <stdexcept>

namespace tep {

namespace {

Rat rat_field(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rat(v.get<long long>());
  throw std::invalid_argument("distribution spec: numbers must be strings");
}

const char* class_name(PointClass c) {
  switch (c) {
    case PointClass::Interior: return "interior";
    case PointClass::ForcedSmaller: return "forced-smaller";
    case PointClass::ForcedLarger: return "forced-larger";
  }
  return "?";
}

Json rat_pair(const Rat& x, int digits) {
  return Json{{"exact", to_fraction_string(x)}, {"dec", to_decimal_string(x, digits)}};
}

}  // namespace

Dist dist_from_json(const Json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw std::invalid_argument("distribution spec: missing \"kind\"");
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "discrete") {
    std::vector<Atom> atoms;
    for (const Json& a : spec.at("atoms")) {
      if (!a.is_array() || a.size() != 2)
        throw std::invalid_argument("distribution spec: atom must be [value, mass]");
      atoms.push_back({rat_field(a[0]), rat_field(a[1])});
    }
    return DiscreteDist::normalize(std::move(atoms));
  }
  if (kind == "step") {
    std::vector<Piece> pieces;
    for (const Json& p : spec.at("pieces")) {
      if (!p.is_array() || p.size() != 3)
        throw std::invalid_argument("distribution spec: piece must be [lo, hi, density]");
      pieces.push_back({rat_field(p[0]), rat_field(p[1]), rat_field(p[2])});
    }
    return StepDensityDist::normalize(std::move(pieces));
  }
  throw std::invalid_argument("distribution spec: unknown kind \"" + kind + "\"");
}

Json dist_to_json(const Dist& d) {
  Json out;
  if (is_discrete(d)) {
    out["kind"] = "discrete";
    Json atoms = Json::array();
    for (const Atom& a : std::get<DiscreteDist>(d).atoms())
      atoms.push_back({to_fraction_string(a.value), to_fraction_string(a.mass)});
    out["atoms"] = std::move(atoms);
  } else {
    out["kind"] = "step";
    Json pieces = Json::array();
    for (const Piece& p : std::get<StepDensityDist>(d).pieces())
      pieces.push_back({to_fraction_string(p.lo), to_fraction_string(p.hi),
                        to_fraction_string(p.density)});
    out["pieces"] = std::move(pieces);
  }
  return out;
}

Json analyze_report(const TepJoint& j, int digits) {
  Json out;
  out["command"] = "analyze";

  Json rows = Json::array();
  for (const SupportCell& c : j.support_cells()) {
    ConditionalReport r = j.report_at(c.rep);
    Json row;
    row["a"] = rat_pair(r.a, digits);
    if (c.lo != c.hi) {
      row["cell_lo"] = to_fraction_string(c.lo);
      row["cell_hi"] = to_fraction_string(c.hi);
    }
    row["mass"] = rat_pair(c.mass, digits);
    row["p_delta1"] = rat_pair(r.p_delta1, digits);
    row["e_b_given_a"] = rat_pair(r.e_b, digits);
    row["class"] = class_name(r.cls);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);

  TepJoint::Decomposition dec = j.philosopher_decomposition();
  out["philosopher"] = Json{{"e_given_larger", rat_pair(dec.e_given_larger, digits)},
                            {"e_given_smaller", rat_pair(dec.e_given_smaller, digits)},
                            {"total", rat_pair(dec.total, digits)}};

  Rat gap = check_nonindependence(j);
  OrderingCertificate so = check_stochastic_order(j);
  OrderingCertificate od = check_orthant_dependence(j);
  out["certificates"] =
      Json{{"nonindependence_tv_gap", rat_pair(gap, digits)},
           {"stochastic_order_ok", so.stochastic_order_ok},
           {"stochastic_order_witness", to_fraction_string(*so.strict_witness_a)},
           {"orthant_ok", od.orthant_ok},
           {"orthant_witness", to_fraction_string(*od.orthant_strict_witness)}};
  return out;
}

Json cover_report(const Rat& x, const Rat& y, const ProbeStrategy& probe,
                  std::uint64_t n, std::uint64_t seed, int digits) {
  Rat exact = cover_win_prob_exact(x, y, probe);
  CoverSimResult sim =
      cover_simulate(to_double(x), to_double(y), probe, n, seed, RunMode::Parallel);
  Json out;
  out["experiment"] = "cover";
  out["params"] = Json{{"x", to_fraction_string(x)},
                       {"y", to_fraction_string(y)},
                       {"probe", dist_to_json(probe.probe)},
                       {"n", n}};
  out["seed"] = seed;
  out["exact"] = Json{{"win_prob", rat_pair(exact, digits)}};
  out["empirical"] = Json{{"wins", sim.wins},
                          {"win_freq", sim.win_freq},
                          {"ci_halfwidth", sim.ci_halfwidth}};
  return out;
}

Json broome_report(const BroomeExperimentReport& rep, int digits) {
  Json out;
  out["experiment"] = "broome_truncation";
  out["params"] = Json{{"K", rep.truncation}, {"n", rep.n}};
  out["seed"] = rep.seed;
  out["exact"] = Json{{"mean", rat_pair(rep.exact_mean, digits)},
                      {"switch_favorable_mass",
                       rat_pair(rep.switch_favorable_mass, digits)}};
  out["empirical"] = Json{{"sample_mean", rep.sample_mean},
                          {"mean_ratio", rep.mean_ratio},
                          {"always_gain_mean", rep.always_gain_mean},
                          {"always_gain_sigma", rep.always_gain_sigma}};
  return out;
}

}  // namespace tep
