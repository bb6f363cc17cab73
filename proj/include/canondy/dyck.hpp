#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "canondy/errors.hpp"

namespace canondy {

enum class Step : std::uint8_t { Up, Down };

// A Dyck path of semilength n: a word of n U and n D steps in which every
// prefix has at least as many U as D.  Steps are indexed 1..2n in the public
// API; height(x) is the lattice height after x steps, so height(0) =
// height(2n) = 0.
class DyckPath {
 public:
  DyckPath() = default;  // the empty path

  // Parses a word over {U, D}; throws BadCharacter, UnbalancedWord,
  // NegativePrefix.
  static DyckPath parse(const std::string& word);
  static DyckPath from_steps(std::vector<Step> steps);

  int semilength() const { return static_cast<int>(steps_.size()) / 2; }
  int length() const { return static_cast<int>(steps_.size()); }
  Step step(int i) const { return steps_[i - 1]; }  // 1-based
  const std::vector<Step>& steps() const { return steps_; }
  int height(int x) const { return heights_[x]; }  // 0 <= x <= 2n
  const std::vector<int>& heights() const { return heights_; }
  int max_height() const;

  std::string to_string() const;

  bool operator==(const DyckPath& o) const { return steps_ == o.steps_; }
  bool operator!=(const DyckPath& o) const { return !(*this == o); }
  // Lexicographic with U < D; total order used for all sorted path sets.
  bool operator<(const DyckPath& o) const;

 private:
  std::vector<Step> steps_;
  std::vector<int> heights_;  // size 2n+1
};

// An ordered list of positive parts.
struct Composition {
  std::vector<int> parts;

  int size() const { return static_cast<int>(parts.size()); }
  int total() const;
  bool operator==(const Composition& o) const { return parts == o.parts; }
  std::string to_string() const;  // "(3,4,3)"
};

// Peaks of d: step pairs (i, i+1) with step i = U and step i+1 = D, 1-based.
std::vector<std::pair<int, int>> peaks(const DyckPath& d);
int pk(const DyckPath& d);

// Low peaks: peaks whose up step starts at height 0.
std::vector<std::pair<int, int>> low_peaks(const DyckPath& d);
int lpk(const DyckPath& d);

// Valleys: step pairs (i, i+1) with step i = D and step i+1 = U.
std::vector<std::pair<int, int>> valleys(const DyckPath& d);

// Maximal decomposition d = d1 d2 ... dk into paths touching 0 only at their
// endpoints.
std::vector<DyckPath> primitive_factors(const DyckPath& d);

// The bounce path of d: starting at (0,0), repeatedly ascend until hitting a
// lattice point of d that is followed by a down step of d, then descend back
// to the axis.  The result is a Dyck path of the same semilength lying weakly
// below d.
DyckPath bounce(const DyckPath& d);

// Peak heights of bounce(d), as a composition of n.
Composition bcomp(const DyckPath& d);

// Number of bounce peaks.
int bpk(const DyckPath& d);

// The bounce path determined by a composition: U^{c1}D^{c1} ... U^{ck}D^{ck}.
DyckPath path_from_bcomp(const Composition& c);

// Decomposition of d along its bounce apexes.  boundaries holds the 1-based
// apex step indices a_1 < ... < a_k, k = bpk(d).  Factor i is the step range
// (a_{i-1}, a_i] for i < k; the last factor runs to 2n, absorbing the
// trailing run of down steps after a_k.
struct BounceFactorization {
  DyckPath path;
  std::vector<int> boundaries;

  int factor_count() const { return static_cast<int>(boundaries.size()); }
  // 1-based inclusive step ranges of the factors; ranges concatenate to
  // [1, 2n].
  std::vector<std::pair<int, int>> factor_ranges() const;
};

BounceFactorization bounce_factors(const DyckPath& d);

// True if height_lower(x) <= height_upper(x) for all x.  Throws
// SemilengthMismatch when the semilengths differ.
bool is_under(const DyckPath& lower, const DyckPath& upper);

// Visits all Dyck paths of semilength n in lexicographic order (U < D), from
// U^n D^n to (UD)^n.
void for_each_dyck(int n, const std::function<void(const DyckPath&)>& fn);
std::vector<DyckPath> all_dyck(int n);
mpz_class catalan(int n);

// Reverse the word and swap U <-> D (the left-right mirror of the path).
DyckPath reverse(const DyckPath& d);

// Bounce computed from the right: reverse(bounce(reverse(d))).
DyckPath reverse_bounce(const DyckPath& d);

// Visits all compositions of n in lexicographic order of part lists.
void for_each_composition(int n,
                          const std::function<void(const Composition&)>& fn);

// Number of Dyck paths with a given bounce composition c = (c1,...,ck):
// prod_{i=1}^{k-1} binom(c_i + c_{i+1} - 1, c_{i+1}).
mpz_class count_by_bcomp(const Composition& c);

// ... that in addition have pk = bpk: prod_{i=1}^{k-1} c_i.
mpz_class count_pk_eq_bpk_by_bcomp(const Composition& c);

// ... whose bounce peaks all coincide with peaks of the path:
// prod_{i=1}^{k-1} binom(c_i + c_{i+1} - 2, c_{i+1} - 1).
mpz_class count_peak_coincide_by_bcomp(const Composition& c);

}  // namespace canondy
