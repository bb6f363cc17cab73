#pragma once
// Independent slow re-implementations used only as test oracles.  They favor
// the most literal definition over speed so that agreement with the library
// is meaningful.

#include <algorithm>
#include <set>
#include <vector>

#include "canondy/canon.hpp"
#include "canondy/dyck.hpp"
#include "canondy/maximizers.hpp"

namespace oracles {

// All permutations of {1..n} in lexicographic order.
inline std::vector<canondy::Permutation> all_perms(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<canondy::Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// Argmax of des(d, sigma) over the full symmetric group, no pruning.
inline std::vector<canondy::Permutation> slow_max_set(const canondy::DyckPath& d) {
  int best = -1;
  std::vector<canondy::Permutation> out;
  for (const auto& s : all_perms(d.semilength())) {
    const int des = canondy::descent_count(d, s);
    if (des > best) {
      best = des;
      out.clear();
    }
    if (des == best) out.push_back(s);
  }
  return out;
}

// Filter every path of the same semilength through the definitional
// membership test.
inline std::vector<canondy::DyckPath> slow_b_set(const canondy::DyckPath& d) {
  std::vector<canondy::DyckPath> out;
  canondy::for_each_dyck(d.semilength(), [&](const canondy::DyckPath& b) {
    if (canondy::in_b_set(d, b)) out.push_back(b);
  });
  return out;
}

// True when no two letters of the word nest: for values a != b the two
// positions of a never strictly surround the two positions of b.
inline bool is_nonnesting(const std::vector<int>& word) {
  const int n = *std::max_element(word.begin(), word.end());
  std::vector<std::pair<int, int>> pos(n + 1, {-1, -1});
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    auto& p = pos[word[i]];
    (p.first < 0 ? p.first : p.second) = i;
  }
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      if (pos[a].first < pos[b].first && pos[b].second < pos[a].second) return false;
    }
  return true;
}

// Descent positions of a word by direct scan (strict descents only).
inline std::vector<int> slow_descents(const std::vector<int>& w) {
  std::vector<int> out;
  for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i)
    if (w[i] > w[i + 1]) out.push_back(i + 1);
  return out;
}

}  // namespace oracles
