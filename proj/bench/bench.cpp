// Times each OpenMP kernel against its serial twin.
// Usage: lpa_bench [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#include "lpa/cardinality.hpp"
#include "lpa/parallel.hpp"

using namespace lpa;

namespace {

bool mismatch = false;

double time_best(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

template <typename T>
void row(const std::string& name, const std::function<T()>& parallel, const std::function<T()>& serial,
         int reps) {
  T a{};
  T b{};
  const double tp = time_best([&] { a = parallel(); }, reps);
  const double ts = time_best([&] { b = serial(); }, reps);
  mismatch = mismatch || !(a == b);
  std::printf("%-34s serial %9.4fs  omp %9.4fs  speedup %5.2fx  %s\n", name.c_str(), ts, tp, ts / tp,
              a == b ? "same" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  const int reps = quick ? 1 : 3;
  const std::size_t n_count = quick ? 14 : 22;
  const std::size_t n_sweep = quick ? 12 : 18;
  std::printf("threads=%d (count rows: the serial reference filters every word, the\n"
              "OpenMP kernel also prunes prefixes, so their ratio is not a thread speedup)\n",
              thread_count());

  const auto a = CountQuery::lpa(2, n_count, 8, 4);
  row<BigInt>("count A(2," + std::to_string(n_count) + ",8,4)", [&] { return count_brute(a); },
              [&] { return count_brute_serial(a); }, reps);
  const auto r = CountQuery::rll(2, n_count, 3);
  row<BigInt>("count R(2," + std::to_string(n_count) + ",3)", [&] { return count_brute(r); },
              [&] { return count_brute_serial(r); }, reps);

  const auto params = derive_params(2, n_sweep, 3);
  row<SweepReport>("sweep q=2 n=" + std::to_string(n_sweep) + " p=3", [&] { return exhaustive_sweep(params); },
                   [&] { return exhaustive_sweep_serial(params); }, reps);
  row<StepStatistics>("step stats q=2 n=" + std::to_string(n_sweep) + " p=3",
                      [&] { return exhaustive_step_statistics(params); },
                      [&] { return exhaustive_step_statistics_serial(params); }, reps);
  return mismatch ? 1 : 0;
}
