#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "canondy/canon.hpp"
#include "canondy/config.hpp"
#include "canondy/dyck.hpp"

namespace canondy {

// A Dyck path together with its canon labeling by a permutation: the k-th up
// step and k-th down step share label sigma_k.
class LabeledPath {
 public:
  LabeledPath(DyckPath d, Permutation sigma);

  const DyckPath& path() const { return path_; }
  const std::vector<int>& labels() const { return labels_; }
  int label(int i) const { return labels_[i - 1]; }  // 1-based step index
  const Permutation& perm() const { return perm_; }

 private:
  DyckPath path_;
  Permutation perm_;
  std::vector<int> labels_;
};

// The greedy maximizer labeling: label the first step pair n; then repeatedly
// take the first unlabeled step (an up step), read the label i of the step
// before it, and give the pair label i-1, first decrementing every label
// <= i-1 when i-1 is already in use.
Permutation bperm(const DyckPath& d);
LabeledPath bperm_labeled(const DyckPath& d);

// Swap the valley at steps (p, p+1) of a labeled path: requires step p = D
// with label j and step p+1 = U with label i < j (NotAValley /
// LabelOrderViolated otherwise).  The steps are exchanged and the labeling is
// transported: value i becomes j, values i+1..j slide down by one.  The
// result is again a canon labeling, of a path one flip higher.
LabeledPath valley_swap(const LabeledPath& c, int p);

// The valley-swap maximizer: start from the decreasing labeling of bounce(d)
// and repeatedly swap the leftmost valley that keeps the path weakly below d,
// until the path equals d.
Permutation vperm(const DyckPath& d);
// All intermediate labelings, from the bounce start to the final labeling of
// d inclusive.
std::vector<LabeledPath> vperm_trace(const DyckPath& d);

// The exact maximizer set M_d = { sigma : des(d, sigma) = deg C_d }, in
// lexicographic order.  Backtracking sweep over S_n; throws
// BruteForceBoundExceeded when semilength(d) > bound.
std::vector<Permutation> max_set(const DyckPath& d,
                                 int bound = kDefaultBruteForceBound);

// Number of maximizers, with an optional early stop: counting aborts once the
// count reaches `cap` (0 = exact count).
long long max_set_size(const DyckPath& d, long long cap = 0);

// True if b is a compatible path of d: same semilength, weakly below d, with
// pk(b) = bpk(d), every peak apex of b on d, and every valley bottom of b on
// d or on the axis.
bool in_b_set(const DyckPath& d, const DyckPath& b);

// All compatible paths of d, in lexicographic order.  bounce(d) and, when
// pk(d) = bpk(d), d itself are always members.
std::vector<DyckPath> b_set(const DyckPath& d);

// The maximizer poset P_{d,b} on labels a_1..a_n: cut the canon word of
// (d, identity) after each peak apex of b; within each segment, an earlier
// label is greater than a later one.  Stored transitively closed.
class MaxPoset {
 public:
  MaxPoset(int n, const std::vector<std::pair<int, int>>& generating_pairs);

  int size() const { return n_; }
  bool greater(int i, int j) const {  // a_i >_P a_j, 1-based
    return (above_[j - 1] >> (i - 1)) & 1u;
  }
  // All strict relations (i, j) with a_i >_P a_j, sorted.
  std::vector<std::pair<int, int>> strict_relations() const;

 private:
  int n_ = 0;
  std::vector<std::uint32_t> above_;  // above_[j] = bitmask of i >_P a_{j+1}
};

// Throws NotInBSet when b is not compatible with d, CyclicRelation when the
// generated relations are not a strict partial order (cannot happen for a
// compatible b).
MaxPoset max_poset(const DyckPath& d, const DyckPath& b);

// All sigma whose values respect the poset: a_i >_P a_j implies
// sigma_i > sigma_j.  Lexicographic order.
std::vector<Permutation> linear_extensions(const MaxPoset& P);

// True if sigma respects every relation of P.
bool respects(const MaxPoset& P, const Permutation& sigma);

// Generalized greedy labeling: at round r >= 1 the pair may take label i-k
// for any k = 1..kmax, where k is admissible when both copies of each of
// i-1, ..., i-k+1 already sit strictly left of the pending up step (k = 1
// always is).  choices supplies the k per round, length n-1; the same
// decrement rule applies to i-k.  Throws InvalidChoice on an inadmissible or
// out-of-range choice.
Permutation generalized_bperm(const DyckPath& d,
                              const std::vector<int>& choices);

// Walks the full choice tree, invoking fn with each resulting permutation
// and the choice vector that produced it.
void for_each_generalized_bperm(
    const DyckPath& d,
    const std::function<void(const Permutation&, const std::vector<int>&)>&
        fn);

// Distinct descent sets of the maximizers of d, each a sorted 1-based
// position list.
std::set<std::vector<int>> descent_sets_of_max(
    const DyckPath& d, int bound = kDefaultBruteForceBound);

// { descent positions of the decreasing labeling of b : b in b_set(d) };
// equals the complements of the peak-apex sets of the compatible paths.
std::set<std::vector<int>> descent_sets_of_b(const DyckPath& d);

}  // namespace canondy
