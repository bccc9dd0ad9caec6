// Timing comparison between the serial reference kernels and the OpenMP
// ones, with a result-identity check (the kernels are required to agree
// bit for bit regardless of thread count).
#include "tep/families.hpp"
#include "tep/sim.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

namespace {

double seconds(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t n = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 4'000'000;
  std::printf("threads available: %d\n", omp_get_max_threads());

  {
    tep::ProbeStrategy probe{tep::StepDensityDist::uniform(tep::Rat(0), tep::Rat(10))};
    auto t0 = std::chrono::steady_clock::now();
    auto serial = tep::cover_simulate(3, 7, probe, n, 1, tep::RunMode::Serial);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = tep::cover_simulate(3, 7, probe, n, 1, tep::RunMode::Parallel);
    double tp = seconds(t0);
    std::printf("cover_simulate  n=%llu  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                static_cast<unsigned long long>(n), ts, tp, ts / tp,
                serial.wins == par.wins ? "identical" : "MISMATCH");
  }

  {
    auto t0 = std::chrono::steady_clock::now();
    auto serial = tep::broome_truncation_experiment(40, n, 1, tep::RunMode::Serial);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = tep::broome_truncation_experiment(40, n, 1, tep::RunMode::Parallel);
    double tp = seconds(t0);
    bool same = serial.sample_mean == par.sample_mean &&
                serial.always_gain_mean == par.always_gain_mean;
    std::printf("broome_exp      n=%llu  serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                static_cast<unsigned long long>(n), ts, tp, ts / tp,
                same ? "identical" : "MISMATCH");
  }

  {
    tep::PriorFamily fam;
    fam.kind = tep::PriorFamily::Kind::LogGridUniform;
    tep::SweepParams params;
    auto t0 = std::chrono::steady_clock::now();
    auto serial = tep::run_sweep(fam, 4, 128, params, false);
    double ts = seconds(t0);
    t0 = std::chrono::steady_clock::now();
    auto par = tep::run_sweep(fam, 4, 128, params, true);
    double tp = seconds(t0);
    bool same = serial.size() == par.size();
    for (std::size_t i = 0; same && i < serial.size(); ++i)
      same = serial[i].tv == par[i].tv && serial[i].c1_bound_min == par[i].c1_bound_min;
    std::printf("sweep 4..128    serial %.3fs  parallel %.3fs  speedup %.2fx  %s\n",
                ts, tp, ts / tp, same ? "identical" : "MISMATCH");
  }
  return 0;
}
