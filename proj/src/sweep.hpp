// Internal permutation-sweep machinery shared by poly, maximizers and
// sequences.  Not installed.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "canondy/config.hpp"
#include "canondy/dyck.hpp"
#include "canondy/errors.hpp"

namespace canondy::detail {

// Adjacent-position comparisons of the canon word of d as index pairs into
// sigma (0-based).  Word position p and p+1 compare sigma[left] vs
// sigma[right]; pairs with left == right are plateaus (the low peaks) and
// never descents.
struct DescentTable {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // non-plateau (left, right)
  int plateau_count = 0;

  static DescentTable build(const DyckPath& d) {
    DescentTable t;
    t.n = d.semilength();
    std::vector<int> idx;
    idx.reserve(d.length());
    int up = 0, down = 0;
    for (Step s : d.steps())
      idx.push_back(s == Step::Up ? up++ : down++);
    for (std::size_t p = 0; p + 1 < idx.size(); ++p) {
      if (idx[p] == idx[p + 1])
        ++t.plateau_count;
      else
        t.pairs.emplace_back(idx[p], idx[p + 1]);
    }
    return t;
  }

  // des(d, sigma) for sigma given 0-based (values 1..n).
  template <typename Vec>
  int count(const Vec& sigma) const {
    int c = 0;
    for (auto [l, r] : pairs) c += sigma[l] > sigma[r];
    return c;
  }
};

void check_sweep_bound(int n, int bound);

// Exact maximizer sweep: backtracking over one-line prefixes, pruning once
// the number of non-descent comparisons exceeds bpk - lpk (the proven gap
// between the comparison count and the maximum descent count).  Visits every
// maximizer exactly once, in lexicographic order; fn returning false aborts.
class MaximizerSweep {
 public:
  explicit MaximizerSweep(const DyckPath& d);

  // fn: bool fn(const int* one_line_1based_values, int n)
  template <typename Fn>
  void run(Fn&& fn) const {
    std::array<int, 32> sigma{};
    std::uint32_t used = 0;
    dfs(0, 0, used, sigma.data(), fn);
  }

  int budget() const { return budget_; }

 private:
  struct Cmp {
    int other;
    bool other_is_left;
  };

  template <typename Fn>
  bool dfs(int depth, int misses, std::uint32_t& used, int* sigma,
           Fn&& fn) const {
    if (depth == n_) return fn(sigma, n_);
    for (int v = 1; v <= n_; ++v) {
      const std::uint32_t bit = 1u << (v - 1);
      if (used & bit) continue;
      int m = misses;
      for (const Cmp& c : at_[depth]) {
        const int left = c.other_is_left ? sigma[c.other] : v;
        const int right = c.other_is_left ? v : sigma[c.other];
        if (left < right && ++m > budget_) break;
      }
      if (m > budget_) continue;
      sigma[depth] = v;
      used |= bit;
      const bool go_on = dfs(depth + 1, m, used, sigma, fn);
      used &= ~bit;
      if (!go_on) return false;
    }
    return true;
  }

  int n_ = 0;
  int budget_ = 0;
  std::vector<std::vector<Cmp>> at_;  // comparisons decided at each depth
};

// Runs fn(i) for i in [0, count) across `threads` workers on contiguous
// blocks.  Each worker only writes to its own indices, so any reduction done
// afterwards in index order is independent of the thread count.
void parallel_for_index(std::size_t count, int threads,
                        const std::function<void(std::size_t)>& fn);

}  // namespace canondy::detail
