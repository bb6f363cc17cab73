#include "canondy/maximizers.hpp"

#include <algorithm>
#include <cassert>

#include "sweep.hpp"

namespace canondy {

namespace {

// partner[p] = 0-based index of the step matched with step p (k-th up with
// k-th down).
std::vector<int> step_partners(const DyckPath& d) {
  const int n = d.semilength();
  std::vector<int> up_pos(n), down_pos(n), partner(d.length());
  int u = 0, w = 0;
  for (int p = 0; p < d.length(); ++p) {
    if (d.steps()[p] == Step::Up)
      up_pos[u++] = p;
    else
      down_pos[w++] = p;
  }
  for (int k = 0; k < n; ++k) {
    partner[up_pos[k]] = down_pos[k];
    partner[down_pos[k]] = up_pos[k];
  }
  return partner;
}

Permutation up_labels(const DyckPath& d, const std::vector<int>& lab) {
  std::vector<int> v;
  v.reserve(d.semilength());
  for (int p = 0; p < d.length(); ++p)
    if (d.steps()[p] == Step::Up) v.push_back(lab[p]);
  return Permutation(std::move(v));
}

// Shared engine for bperm and its generalized form.  choose is called once
// per round r >= 1 with the maximal admissible k and must return the k to
// use; labels/state are updated with the decrement rule.
template <typename Choose>
Permutation greedy_labeling(const DyckPath& d, Choose&& choose) {
  const int n = d.semilength();
  if (n == 0) return Permutation();
  const auto partner = step_partners(d);
  std::vector<int> lab(d.length(), 0);
  int f = 0;  // first unlabeled step
  lab[0] = lab[partner[0]] = n;
  int min_used = n;
  for (int r = 1; r < n; ++r) {
    while (lab[f] != 0) ++f;
    const int i = lab[f - 1];
    // k is admissible iff both copies of each of i-1..i-k+1 sit left of f.
    int kmax = 1;
    {
      std::vector<int> cnt(n + 1, 0);
      for (int p = 0; p < f; ++p) ++cnt[lab[p]];
      while (i - kmax >= 1 && cnt[i - kmax] == 2) ++kmax;
    }
    const int k = choose(r, kmax);
    const int give = i - k;
    assert(give >= min_used - 1 && give >= 1);
    if (give >= min_used)  // in use: slide the labels below it down by one
      for (int p = 0; p < d.length(); ++p)
        if (lab[p] != 0 && lab[p] <= give) --lab[p];
    --min_used;
    lab[f] = lab[partner[f]] = give;
  }
  assert(min_used == 1);
  return up_labels(d, lab);
}

}  // namespace

LabeledPath::LabeledPath(DyckPath d, Permutation sigma)
    : path_(std::move(d)), perm_(std::move(sigma)) {
  if (perm_.size() != path_.semilength())
    throw SizeMismatch("permutation size != path semilength");
  labels_.reserve(path_.length());
  int up = 0, down = 0;
  for (Step s : path_.steps())
    labels_.push_back(s == Step::Up ? perm_.value(++up) : perm_.value(++down));
}

Permutation bperm(const DyckPath& d) {
  return greedy_labeling(d, [](int, int) { return 1; });
}

LabeledPath bperm_labeled(const DyckPath& d) {
  return LabeledPath(d, bperm(d));
}

Permutation generalized_bperm(const DyckPath& d,
                              const std::vector<int>& choices) {
  const int n = d.semilength();
  if (static_cast<int>(choices.size()) != std::max(0, n - 1))
    throw InvalidChoice("expected " + std::to_string(std::max(0, n - 1)) +
                        " choices, got " + std::to_string(choices.size()));
  return greedy_labeling(d, [&](int r, int kmax) {
    const int k = choices[r - 1];
    if (k < 1 || k > kmax)
      throw InvalidChoice("choice " + std::to_string(k) + " at round " +
                          std::to_string(r) + " is not admissible (max " +
                          std::to_string(kmax) + ")");
    return k;
  });
}

void for_each_generalized_bperm(
    const DyckPath& d,
    const std::function<void(const Permutation&, const std::vector<int>&)>&
        fn) {
  const int n = d.semilength();
  if (n == 0) {
    fn(Permutation(), {});
    return;
  }
  // DFS over choice vectors; kmax at each round depends on earlier choices.
  std::vector<int> choices(n - 1, 1);
  std::function<void(int)> walk = [&](int round) {
    // Probe: run the labeling up to `round` to learn kmax there; rounds
    // beyond take k = 1.  A full run per node keeps the engine single; the
    // trees are small.
    int kmax_here = 1;
    bool reached = false;
    greedy_labeling(d, [&](int r, int kmax) {
      if (r < round) return choices[r - 1];
      if (r == round) {
        kmax_here = kmax;
        reached = true;
      }
      return 1;
    });
    if (round >= n || !reached) {
      const Permutation out = generalized_bperm(d, choices);
      fn(out, choices);
      return;
    }
    for (int k = 1; k <= kmax_here; ++k) {
      choices[round - 1] = k;
      walk(round + 1);
    }
    choices[round - 1] = 1;
  };
  if (n == 1) {
    fn(bperm(d), {});
    return;
  }
  walk(1);
}

LabeledPath valley_swap(const LabeledPath& c, int p) {
  const DyckPath& d = c.path();
  if (p < 1 || p + 1 > d.length() || d.step(p) != Step::Down ||
      d.step(p + 1) != Step::Up)
    throw NotAValley("steps " + std::to_string(p) + "," +
                     std::to_string(p + 1) + " are not a valley");
  const int j = c.label(p);      // down step
  const int i = c.label(p + 1);  // up step
  if (i >= j)
    throw LabelOrderViolated("valley labels must satisfy up < down (got " +
                             std::to_string(i) + " under " +
                             std::to_string(j) + ")");
  // Transport the labeling: i -> j, i+1..j -> down by one.
  std::vector<int> v = c.perm().one_line();
  for (int& x : v) {
    if (x == i)
      x = j;
    else if (x > i && x <= j)
      --x;
  }
  std::vector<Step> steps = d.steps();
  steps[p - 1] = Step::Up;
  steps[p] = Step::Down;
  return LabeledPath(DyckPath::from_steps(std::move(steps)),
                     Permutation(std::move(v)));
}

std::vector<LabeledPath> vperm_trace(const DyckPath& d) {
  const int n = d.semilength();
  std::vector<LabeledPath> trace;
  trace.emplace_back(bounce(d), Permutation::decreasing(n));
  while (trace.back().path() != d) {
    const DyckPath& cur = trace.back().path();
    int pick = 0;
    for (int p = 1; p < cur.length(); ++p) {
      if (cur.step(p) == Step::Down && cur.step(p + 1) == Step::Up &&
          cur.height(p) + 2 <= d.height(p)) {
        pick = p;
        break;
      }
    }
    // The target lies weakly above, so some swappable valley exists.
    if (pick == 0)
      throw std::logic_error("valley walk stuck below " + d.to_string());
    trace.push_back(valley_swap(trace.back(), pick));
  }
  return trace;
}

Permutation vperm(const DyckPath& d) { return vperm_trace(d).back().perm(); }

std::vector<Permutation> max_set(const DyckPath& d, int bound) {
  detail::check_sweep_bound(d.semilength(), bound);
  const detail::MaximizerSweep sweep(d);
  std::vector<Permutation> out;
  sweep.run([&](const int* sigma, int n) {
    out.emplace_back(std::vector<int>(sigma, sigma + n));
    return true;
  });
  return out;
}

long long max_set_size(const DyckPath& d, long long cap) {
  const detail::MaximizerSweep sweep(d);
  long long count = 0;
  sweep.run([&](const int*, int) {
    ++count;
    return cap == 0 || count < cap;
  });
  return count;
}

bool in_b_set(const DyckPath& d, const DyckPath& b) {
  if (b.semilength() != d.semilength())
    throw SemilengthMismatch("paths have different semilengths");
  if (!is_under(b, d)) return false;
  const auto pks = peaks(b);
  if (static_cast<int>(pks.size()) != bpk(d)) return false;
  for (auto [i, j] : pks)
    if (b.height(i) != d.height(i)) return false;  // apex at x = i
  for (auto [i, j] : valleys(b)) {
    const int h = b.height(i);  // bottom at x = i
    if (h != 0 && h != d.height(i)) return false;
  }
  return true;
}

std::vector<DyckPath> b_set(const DyckPath& d) {
  const int n = d.semilength();
  if (n == 0) return {DyckPath()};
  const auto apexes = bounce_factors(d).boundaries;
  const int k = static_cast<int>(apexes.size());
  std::vector<DyckPath> out;
  // One peak apex per bounce region (a_{i-1}, a_i], each on d; consecutive
  // apexes are joined by a straight descent and ascent whose corner must sit
  // on d or on the axis; the walk ends with a straight descent.
  std::vector<int> xs(k);
  std::function<void(int)> place = [&](int idx) {
    const int lo = idx == 0 ? 0 : apexes[idx - 1];
    for (int x = lo + 1; x <= apexes[idx]; ++x) {
      const int h = d.height(x);
      if (h < 1) continue;
      if (idx == 0) {
        if (x != h) continue;  // all up steps from the origin
      } else {
        const int px = xs[idx - 1], ph = d.height(xs[idx - 1]);
        const int down = (x - px - (h - ph)) / 2;
        if (2 * down != x - px - (h - ph)) continue;  // parity (defensive)
        const int up = x - px - down;
        if (down < 1 || up < 1) continue;
        const int corner_h = ph - down;
        if (corner_h < 0) continue;
        if (corner_h != 0 && d.height(px + down) != corner_h) continue;
      }
      xs[idx] = x;
      if (idx + 1 == k) {
        if (d.length() - x != h) continue;  // all down steps to the end
        std::vector<Step> steps;
        steps.reserve(d.length());
        int cx = 0, ch = 0;
        for (int t = 0; t < k; ++t) {
          const int tx = xs[t], th = d.height(xs[t]);
          const int up = ((tx - cx) + (th - ch)) / 2;
          const int dn = (tx - cx) - up;
          steps.insert(steps.end(), dn, Step::Down);
          steps.insert(steps.end(), up, Step::Up);
          cx = tx;
          ch = th;
        }
        steps.insert(steps.end(), ch, Step::Down);
        DyckPath b = DyckPath::from_steps(std::move(steps));
        if (in_b_set(d, b)) out.push_back(std::move(b));
      } else {
        place(idx + 1);
      }
    }
  };
  place(0);
  std::sort(out.begin(), out.end());
  return out;
}

MaxPoset::MaxPoset(int n, const std::vector<std::pair<int, int>>& pairs)
    : n_(n), above_(n, 0) {
  if (n > 31) throw Error("poset size limited to 31");
  for (auto [i, j] : pairs) {
    if (i == j)
      throw CyclicRelation("label a_" + std::to_string(i) +
                           " related to itself");
    above_[j - 1] |= 1u << (i - 1);
  }
  // Transitive closure; then antisymmetry.
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j < n_; ++j) {
      std::uint32_t acc = above_[j];
      std::uint32_t m = above_[j];
      while (m) {
        const int i = __builtin_ctz(m);
        m &= m - 1;
        acc |= above_[i];
      }
      if (acc != above_[j]) {
        above_[j] = acc;
        changed = true;
      }
    }
  }
  for (int j = 0; j < n_; ++j) {
    if ((above_[j] >> j) & 1u)
      throw CyclicRelation("relation cycle through a_" + std::to_string(j + 1));
    for (int i = 0; i < n_; ++i)
      if (((above_[j] >> i) & 1u) && ((above_[i] >> j) & 1u))
        throw CyclicRelation("labels a_" + std::to_string(i + 1) + " and a_" +
                             std::to_string(j + 1) + " each above the other");
  }
}

std::vector<std::pair<int, int>> MaxPoset::strict_relations() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (greater(i, j)) out.emplace_back(i, j);
  return out;
}

MaxPoset max_poset(const DyckPath& d, const DyckPath& b) {
  if (!in_b_set(d, b))
    throw NotInBSet("path " + b.to_string() +
                    " is not a compatible path of " + d.to_string());
  const int n = d.semilength();
  // Canon index word of (d, identity): position p carries index a_{idx}.
  std::vector<int> idx;
  idx.reserve(d.length());
  int up = 0, down = 0;
  for (Step s : d.steps())
    idx.push_back(s == Step::Up ? ++up : ++down);
  std::vector<int> cuts;  // apex positions of b's peaks
  for (auto [i, j] : peaks(b)) cuts.push_back(i);
  cuts.push_back(d.length());
  std::vector<std::pair<int, int>> rel;
  int start = 0;  // 0-based segment [start, cut)
  for (int cut : cuts) {
    for (int u = start; u < cut; ++u)
      for (int v = u + 1; v < cut; ++v) rel.emplace_back(idx[u], idx[v]);
    start = cut;
  }
  return MaxPoset(n, rel);
}

std::vector<Permutation> linear_extensions(const MaxPoset& P) {
  const int n = P.size();
  std::vector<Permutation> out;
  std::vector<int> sigma(n, 0);
  std::uint32_t done = 0;
  // Assign values n, n-1, ...; the next value goes to an element with no
  // unassigned element above it.
  std::function<void(int)> rec = [&](int value) {
    if (value == 0) {
      out.emplace_back(sigma);
      return;
    }
    for (int e = 1; e <= n; ++e) {
      if ((done >> (e - 1)) & 1u) continue;
      bool maximal = true;
      for (int i = 1; i <= n && maximal; ++i)
        if (!((done >> (i - 1)) & 1u) && P.greater(i, e)) maximal = false;
      if (!maximal) continue;
      sigma[e - 1] = value;
      done |= 1u << (e - 1);
      rec(value - 1);
      done &= ~(1u << (e - 1));
    }
  };
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

bool respects(const MaxPoset& P, const Permutation& sigma) {
  if (sigma.size() != P.size())
    throw SizeMismatch("permutation size != poset size");
  for (int i = 1; i <= P.size(); ++i)
    for (int j = 1; j <= P.size(); ++j)
      if (P.greater(i, j) && sigma.value(i) < sigma.value(j)) return false;
  return true;
}

std::set<std::vector<int>> descent_sets_of_max(const DyckPath& d, int bound) {
  detail::check_sweep_bound(d.semilength(), bound);
  const detail::MaximizerSweep sweep(d);
  std::set<std::vector<int>> out;
  sweep.run([&](const int* sigma, int) {
    // Descent positions of the canon word of (d, sigma).
    std::vector<int> word;
    word.reserve(d.length());
    int upc = 0, downc = 0;
    for (Step s : d.steps())
      word.push_back(sigma[s == Step::Up ? upc++ : downc++]);
    out.insert(word_descent_positions(word));
    return true;
  });
  return out;
}

std::set<std::vector<int>> descent_sets_of_b(const DyckPath& d) {
  std::set<std::vector<int>> out;
  for (const DyckPath& b : b_set(d)) {
    const CanonWord w(b, Permutation::decreasing(b.semilength()));
    out.insert(w.descent_positions());
  }
  return out;
}

}  // namespace canondy
