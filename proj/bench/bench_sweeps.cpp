// Serial reference vs OpenMP kernels on the same workloads; reports must match.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "ppm/sweep.hpp"

using namespace ppm;
using Clock = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& f) {
  const auto t0 = Clock::now();
  f();
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool same) {
  std::printf("%-28s serial %9.1f ms  parallel %9.1f ms  speedup %5.2fx  %s\n", name, serial_ms, parallel_ms,
              serial_ms / parallel_ms, same ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int32_t max_n = argc > 1 ? std::atoi(argv[1]) : 7;
  int failures = 0;
  std::printf("threads %d, sweep size <= %d\n", sweep::max_threads(), max_n);

  for (auto cls : {sweep::PermClass::Av321, sweep::PermClass::Skew}) {
    const char* tag = cls == sweep::PermClass::Av321 ? "av321" : "skew";
    sweep::EquivalenceReport a, b;
    const double s = time_ms([&] { a = sweep::oracle_equivalence_serial(cls, max_n); });
    const double p = time_ms([&] { b = sweep::oracle_equivalence_parallel(cls, max_n); });
    char name[64];
    std::snprintf(name, sizeof name, "equivalence %s (%llu)", tag, static_cast<unsigned long long>(a.pairs));
    report(name, s, p, a == b);
    failures += a == b ? 0 : 1;

    sweep::LabelReport la, lb;
    const double ls = time_ms([&] { la = sweep::label_agreement_serial(cls, max_n); });
    const double lp = time_ms([&] { lb = sweep::label_agreement_parallel(cls, max_n); });
    std::snprintf(name, sizeof name, "labels %s", tag);
    report(name, ls, lp, la == lb);
    failures += la == lb ? 0 : 1;

    std::vector<sweep::TrialSpec> specs;
    for (uint64_t seed = 1; seed <= 32; ++seed) specs.push_back({cls, 100000, 100, seed});
    std::vector<sweep::TrialResult> ta, tb;
    const double ts = time_ms([&] { ta = sweep::run_trials_serial(specs); });
    const double tp = time_ms([&] { tb = sweep::run_trials_parallel(specs); });
    bool same = ta.size() == tb.size();
    for (size_t i = 0; same && i < ta.size(); ++i) same = ta[i].iterations == tb[i].iterations && ta[i].found == tb[i].found;
    std::snprintf(name, sizeof name, "trials %s n=1e5 k=100", tag);
    report(name, ts, tp, same);
    failures += same ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
