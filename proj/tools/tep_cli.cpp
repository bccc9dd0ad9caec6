// Command-line front end.
//
//   tep_cli analyze --spec dist.json            conditional table + certificates
//   tep_cli analyze --family broome --index 6
//   tep_cli sweep --family log_grid_uniform --from 4 --to 64 --out sweep.csv
//   tep_cli cover --x 3 --y 7 --probe-lo 0 --probe-hi 10 --n 1000000 --seed 1
//   tep_cli broome --k 40 --n 1000000 --seed 1
//
// Exit codes: 0 ok, 2 malformed input, 3 math invariant failure (never
// expected to occur).
#include "tep/families.hpp"
#include "tep/json_io.hpp"
#include "tep/order.hpp"
#include "tep/sim.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << text;
}

tep::Dist load_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  tep::Json spec;
  try {
    in >> spec;
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
  return tep::dist_from_json(spec);
}

struct Options {
  std::string spec_path, family, out_path, probe_spec;
  long index = 8, from = 4, to = 16, k = 40, m_max = 8;
  std::uint64_t n = 1'000'000, seed = 1;
  int decimal_digits = 15;
  bool serial = false;
  std::string eps = "1/8", delta = "1/100", alpha1 = "1/2", alpha2 = "1/4";
  std::string x = "3", y = "7", probe_lo = "0", probe_hi = "10";
  std::string broome_p = "1/3";
  std::vector<std::string> at_points;
};

tep::Dist resolve_prior(const Options& opt) {
  if (!opt.spec_path.empty()) return load_spec(opt.spec_path);
  if (opt.family.empty())
    throw std::invalid_argument("provide either --spec or --family");
  tep::PriorFamily fam;
  fam.kind = tep::parse_family(opt.family);
  fam.broome_p = tep::parse_rational(opt.broome_p);
  return tep::family_member(fam, opt.index);
}

int cmd_analyze(const Options& opt) {
  tep::TepJoint joint(resolve_prior(opt));
  tep::Json report = tep::analyze_report(joint, opt.decimal_digits);
  for (const std::string& s : opt.at_points) {
    tep::ConditionalReport r = joint.report_at(tep::parse_rational(s));
    report["queries"].push_back(
        tep::Json{{"a", tep::to_fraction_string(r.a)},
                  {"p_delta1", tep::to_fraction_string(r.p_delta1)},
                  {"e_b_given_a", tep::to_fraction_string(r.e_b)}});
  }
  emit(report.dump(2) + "\n", opt.out_path);
  return 0;
}

int cmd_sweep(const Options& opt) {
  if (opt.family.empty()) throw std::invalid_argument("sweep needs --family");
  tep::PriorFamily fam;
  fam.kind = tep::parse_family(opt.family);
  fam.broome_p = tep::parse_rational(opt.broome_p);
  tep::SweepParams params;
  params.eps = tep::parse_rational(opt.eps);
  params.delta = tep::parse_rational(opt.delta);
  params.alpha1 = tep::parse_rational(opt.alpha1);
  params.alpha2 = tep::parse_rational(opt.alpha2);
  params.m_max = opt.m_max;
  auto rows = tep::run_sweep(fam, opt.from, opt.to, params, !opt.serial);
  emit(tep::sweep_csv(rows, opt.decimal_digits), opt.out_path);
  return 0;
}

int cmd_cover(const Options& opt) {
  if (opt.n == 0) throw std::invalid_argument("cover: n must be positive");
  tep::ProbeStrategy probe{
      opt.probe_spec.empty()
          ? tep::Dist(tep::StepDensityDist::uniform(tep::parse_rational(opt.probe_lo),
                                                    tep::parse_rational(opt.probe_hi)))
          : load_spec(opt.probe_spec)};
  tep::Json report =
      tep::cover_report(tep::parse_rational(opt.x), tep::parse_rational(opt.y), probe,
                        opt.n, opt.seed, opt.decimal_digits);
  emit(report.dump(2) + "\n", opt.out_path);
  return 0;
}

int cmd_broome(const Options& opt) {
  if (opt.n == 0) throw std::invalid_argument("broome: n must be positive");
  auto rep = tep::broome_truncation_experiment(
      opt.k, opt.n, opt.seed, opt.serial ? tep::RunMode::Serial : tep::RunMode::Parallel);
  emit(tep::broome_report(rep, opt.decimal_digits).dump(2) + "\n", opt.out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo laboratory for the two envelopes problem"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_path, "output file (default: stdout)");
    sub->add_option("--decimal-digits", opt.decimal_digits, "significant digits");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "conditional table + certificates");
  analyze->add_option("--spec", opt.spec_path, "distribution spec JSON");
  analyze->add_option("--family", opt.family, "named prior family");
  analyze->add_option("--index", opt.index, "family index");
  analyze->add_option("--broome-p", opt.broome_p, "broome success parameter");
  analyze->add_option("--at", opt.at_points, "extra query points a");
  add_common(analyze);

  CLI::App* sweep = app.add_subcommand("sweep", "family sweep, CSV per member");
  sweep->add_option("--family", opt.family)->required();
  sweep->add_option("--from", opt.from);
  sweep->add_option("--to", opt.to);
  sweep->add_option("--eps", opt.eps);
  sweep->add_option("--delta", opt.delta);
  sweep->add_option("--alpha1", opt.alpha1);
  sweep->add_option("--alpha2", opt.alpha2);
  sweep->add_option("--m-max", opt.m_max);
  sweep->add_option("--broome-p", opt.broome_p);
  sweep->add_flag("--serial", opt.serial, "disable the parallel kernel");
  add_common(sweep);

  CLI::App* cover = app.add_subcommand("cover", "randomized probe experiment");
  cover->add_option("--x", opt.x);
  cover->add_option("--y", opt.y);
  cover->add_option("--probe-lo", opt.probe_lo);
  cover->add_option("--probe-hi", opt.probe_hi);
  cover->add_option("--probe-spec", opt.probe_spec, "probe distribution JSON");
  cover->add_option("--n", opt.n);
  cover->add_option("--seed", opt.seed);
  add_common(cover);

  CLI::App* broome = app.add_subcommand("broome", "truncated heavy-tail experiment");
  broome->add_option("--k", opt.k, "truncation exponent (>= 10)");
  broome->add_option("--n", opt.n);
  broome->add_option("--seed", opt.seed);
  broome->add_flag("--serial", opt.serial, "disable the parallel kernel");
  add_common(broome);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return cmd_analyze(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
    if (cover->parsed()) return cmd_cover(opt);
    if (broome->parsed()) return cmd_broome(opt);
  } catch (const std::logic_error& e) {
    // domain/length/invalid_argument all derive from logic_error; tell the
    // math failures apart explicitly
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr) {
      std::cerr << "invariant failure: " << e.what() << "\n";
      return 3;
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
