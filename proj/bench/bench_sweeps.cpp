// Times the OpenMP kernels against the serial reference on the heavier
// sweeps and checks that both paths produce identical results. Not a test;
// build and run by hand:  ./build/bench/bench_sweeps [jobs]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "carlitz/encoding.hpp"
#include "carlitz/identities.hpp"
#include "carlitz/parallel.hpp"

using namespace carlitz;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string reports_fingerprint(const std::vector<Report>& reports) {
  std::string s;
  for (const auto& r : reports) s += r.lhs + "|" + r.rhs + "|" + r.excluded + "\n";
  return s;
}

std::string window_fingerprint(const AkWindow& w) {
  std::string s;
  for (const auto& e : w.entries) s += encode(e.value) + ";";
  return s;
}

template <typename Fn>
void race(const char* name, int jobs, const Fn& run) {
  auto t0 = std::chrono::steady_clock::now();
  auto serial = run(1);
  const double ts = seconds_since(t0);

  t0 = std::chrono::steady_clock::now();
  auto parallel = run(jobs);
  const double tp = seconds_since(t0);

  const bool same = serial == parallel;
  std::printf("%-28s serial %7.3fs   %2d jobs %7.3fs   speedup %4.1fx   %s\n", name, ts,
              jobs, tp, tp > 0 ? ts / tp : 0.0, same ? "identical" : "MISMATCH");
  if (!same) std::exit(1);
}

}  // namespace

int main(int argc, char** argv) {
  const int jobs = argc > 1 ? std::atoi(argv[1]) : hardware_jobs();
  std::printf("comparing serial reference vs %d OpenMP jobs\n\n", jobs);

  auto f3 = make_field(3, 1);
  auto f2 = make_field(2, 1);

  auto primes_deep = irreducibles_up_to(f3, 6, 10'000'000);
  race("fmzv window, deg <= 6", jobs, [&](int j) {
    return window_fingerprint(
        window(WindowKind::fmzv, Composition::of({2, 1}), std::nullopt, primes_deep, j));
  });

  auto primes4 = irreducibles_up_to(f3, 4);
  race("main-theorem wt<=5 deg<=4", jobs, [&](int j) {
    return reports_fingerprint(main_theorem_sweep(f3, 5, 3, primes4, SweepConfig{j}));
  });

  auto primes3 = irreducibles_up_to(f2, 3);
  race("stuffle wt<=6 q=2", jobs, [&](int j) {
    return reports_fingerprint(stuffle_sweep(f2, 6, 2, primes3, 5, 0, SweepConfig{j}));
  });

  race("truncated sweep wt<=5 d<=4", jobs, [&](int j) {
    return reports_fingerprint(truncated_chang_sweep(f3, 5, 4, SweepConfig{j}));
  });

  return 0;
}
