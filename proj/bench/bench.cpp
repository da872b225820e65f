// Compares the serial reference sweeps against their OpenMP counterparts:
// identical results required, wall-clock ratio reported. On a single-core
// host the honest answer is a speedup near 1.0x.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>

#include "delcode/analysis.hpp"
#include "delcode/inner_hash.hpp"
#include "delcode/oblivious.hpp"

using namespace delcode;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void print_row(const char* name, double serial_ms, double openmp_ms, bool agree) {
  std::printf("%-38s %10.1f %10.1f %7.2fx  %s\n", name, serial_ms, openmp_ms,
              openmp_ms > 0 ? serial_ms / openmp_ms : 0.0, agree ? "agree" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  bool all_agree = true;

  std::printf("%-38s %10s %10s %8s  %s\n", "kernel", "serial_ms", "openmp_ms", "speedup",
              "check");

  {
    const int n = quick ? 10 : 16;
    const int ell = quick ? 2 : 3;
    const int t = quick ? 1 : 2;
    std::uint64_t serial_count = 0, openmp_count = 0;
    const double s_ms =
        time_ms([&] { serial_count = bad_string_census(n, ell, t, Parallelism::serial); });
    const double p_ms =
        time_ms([&] { openmp_count = bad_string_census(n, ell, t, Parallelism::openmp); });
    const bool agree = serial_count == openmp_count;
    all_agree = all_agree && agree;
    char name[64];
    std::snprintf(name, sizeof name, "bad-string census n=%d t=%d ell=%d", n, t, ell);
    print_row(name, s_ms, p_ms, agree);
  }

  {
    const int n = quick ? 8 : 12;
    const CodeParams params{n, 1, 1, 4};
    const ObliviousDescriptor d = explicit_build(params, make_vt_spec(n));
    const ChannelModelSpec channel{ChannelModel::oblivious_exhaustive};
    FailureReport serial_rep, openmp_rep;
    const double s_ms = time_ms([&] {
      serial_rep = worst_case_report(d, channel, {}, Parallelism::serial, false);
    });
    const double p_ms = time_ms([&] {
      openmp_rep = worst_case_report(d, channel, {}, Parallelism::openmp, false);
    });
    const bool agree = serial_rep.worst == openmp_rep.worst &&
                       serial_rep.mean == openmp_rep.mean &&
                       serial_rep.violations == openmp_rep.violations &&
                       serial_rep.grid_points == openmp_rep.grid_points;
    all_agree = all_agree && agree;
    char name[64];
    std::snprintf(name, sizeof name, "failure sweep explicit n=%d t=1", n);
    print_row(name, s_ms, p_ms, agree);
  }

  if (!all_agree) {
    std::printf("serial and OpenMP sweeps disagreed\n");
    return 1;
  }
  return 0;
}
