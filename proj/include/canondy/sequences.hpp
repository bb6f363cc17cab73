#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "canondy/dyck.hpp"

namespace canondy {

// A computed integer sequence with provenance.  notes carries cross-check
// and conjecture-status lines; a line starting with "CONJECTURE_VIOLATED"
// flags a mismatch against a conjectured reference without failing the run.
struct SequenceReport {
  std::string name;
  std::vector<std::pair<int, long long>> terms;  // (index, value)
  std::string method;
  bool conjectural = false;
  std::vector<std::string> notes;
};

// Writes "index value" lines (OEIS b-file layout).
void write_bfile(const SequenceReport& r, std::ostream& out);

// Number of paths of semilength n with pk = bpk, n = 1..max_n (max_n <= 8).
// Cross-checked internally against the composition product formula and the
// coefficients of (1 - 2x) / (1 - 3x + x^2); a mismatch throws.
SequenceReport seq_pk_eq_bpk(int max_n);

// Number of paths whose compatible-path set is a singleton, n = 1..max_n
// (max_n <= 8).  Cross-checked against the bounce-peak coincidence criterion
// and the composition product formula.
SequenceReport seq_bd_singleton(int max_n);

// Triangle: for n = 1..max_n (max_n <= 8) the number of paths with k bounce
// peaks, k = 1..n, flattened row by row with a running index.  Verified
// equal to the distribution of path height; the degree multiset {m_d} is the
// image under k -> 2n-1-k.
SequenceReport seq_md_distribution(int max_n);

// Number of paths with a unique maximizer, n = 1..max_n (max_n <= 9).
// Conjectural (emitted for external comparison); the proven implication
// "unique maximizer => singleton compatible set" is checked and a violation
// throws.
SequenceReport seq_md_equals_one(int max_n, int threads = 0);

// Sizes of the union of maximizer sets over all paths of each semilength,
// together with the image sizes of the two maximizer algorithms and the
// count of paths on which they agree.
struct CandyReport {
  SequenceReport candy;           // |union of M_d|
  SequenceReport bperm_image;     // distinct bperm outputs (conjecture: Catalan(n-1))
  SequenceReport vperm_image;     // distinct vperm outputs (conjecture: Catalan(n-1))
  SequenceReport bperm_eq_vperm;  // number of d with bperm d = vperm d
};
CandyReport candy_sizes(int max_n, int threads = 0);  // max_n <= 8

}  // namespace canondy
