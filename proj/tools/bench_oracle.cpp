// Serial versus OpenMP oracle scan on a few holomorphs.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "holoreg/group_spec.hpp"
#include "holoreg/holomorph.hpp"

using namespace holoreg;

namespace {

template <class F>
double seconds(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> specs{
      "dihedral 16",
      "direct (cyclic 3) (dihedral 16)",
      "semidirect (cgroup 7 3 2) (dihedral 8) alpha r->id s->phi:6",
      "semidirect (cgroup 21 1 1) (dihedral 16) alpha r->id s->phi:13",
  };
  if (argc > 1) specs.assign(argv + 1, argv + argc);
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#endif
  int mismatches = 0;
  for (const auto& spec : specs) {
    const FiniteGroup n = parse_group_spec(spec);
    const Holomorph hol(n, 5'000'000);
    std::vector<std::size_t> serial, parallel;
    const double ts = seconds([&] { serial = cyclic_regular_oracle_indices_serial(hol); });
    const double tp = seconds([&] { parallel = cyclic_regular_oracle_indices(hol); });
    const bool same = serial == parallel;
    mismatches += !same;
    std::printf("%-70s |Hol|=%-8zu generators=%-7zu serial=%.3fs parallel=%.3fs speedup=%.2f %s\n", spec.c_str(),
                hol.order(), serial.size(), ts, tp, tp > 0 ? ts / tp : 0.0, same ? "match" : "MISMATCH");
  }
  return mismatches == 0 ? 0 : 1;
}
