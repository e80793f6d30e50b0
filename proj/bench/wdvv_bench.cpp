#include <chrono>
#include <cstdio>
#include <cstdlib>

#include <omp.h>

#include "crc/wdvv.hpp"

using namespace crc;

namespace {

template <class F>
double seconds(F&& f, WdvvReport& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int compare(const char* label, const InvariantTable& table, const CurveClass& bound, bool unit, int threads) {
  WdvvReport serial, parallel;
  double ts = seconds([&] { return check_all_serial(table, bound, unit); }, serial);
  double tp = seconds([&] { return check_all_parallel(table, bound, unit, threads); }, parallel);
  bool same = serial.instances == parallel.instances && serial.failures == parallel.failures;
  std::printf("%-12s bound %-6s instances %7zu  serial %8.3f s  parallel %8.3f s  speedup %5.2fx  %s\n", label,
              bound.to_string().c_str(), serial.instances, ts, tp, tp > 0 ? ts / tp : 0.0,
              same ? "reports identical" : "REPORTS DIFFER");
  return same ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  int threads = argc > 1 ? std::atoi(argv[1]) : omp_get_max_threads();
  int nMax = argc > 2 ? std::atoi(argv[2]) : 12;
  std::printf("threads %d\n", threads);
  auto seeds = seed_tables();
  int rc = 0;
  rc |= compare("orbifold", seeds.x, CurveClass::x(4), true, threads);
  rc |= compare("resolution", seeds.y, CurveClass::y(6, 3), false, threads);
  auto extended = recursion_table(run_recursion(nMax, false));
  rc |= compare("recursion", extended, CurveClass::y(nMax, 3), false, threads);
  return rc;
}
