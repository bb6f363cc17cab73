#include "sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "canondy/canon.hpp"
#include "canondy/maximizers.hpp"

namespace canondy {

int resolve_threads(int requested) {
  if (const char* env = std::getenv("CANON_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

void check_sweep_bound(int n, int bound) {
  if (n > kHardSweepLimit)
    throw Error("semilength " + std::to_string(n) +
                " exceeds the hard sweep limit " +
                std::to_string(kHardSweepLimit));
  if (n > bound)
    throw BruteForceBoundExceeded(
        "semilength " + std::to_string(n) + " exceeds the brute-force bound " +
        std::to_string(bound) + "; raise the bound to force the sweep");
}

MaximizerSweep::MaximizerSweep(const DyckPath& d) {
  n_ = d.semilength();
  budget_ = bpk(d) - lpk(d);
  at_.assign(n_ == 0 ? 1 : n_, {});
  const DescentTable t = DescentTable::build(d);
  for (auto [l, r] : t.pairs) {
    const int hi = std::max(l, r);
    at_[hi].push_back(Cmp{std::min(l, r), l < r});
  }
}

void parallel_for_index(std::size_t count, int threads,
                        const std::function<void(std::size_t)>& fn) {
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(count ? count : 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail
}  // namespace canondy
