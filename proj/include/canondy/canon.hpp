#pragma once

#include <string>
#include <vector>

#include "canondy/dyck.hpp"
#include "canondy/errors.hpp"

namespace canondy {

// A permutation of [n] in one-line notation, values 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  static Permutation decreasing(int n);
  // "4132" for n <= 9, otherwise comma-separated values.
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(values_.size()); }
  int value(int i) const { return values_[i - 1]; }  // 1-based position
  const std::vector<int>& one_line() const { return values_; }

  Permutation complement() const;  // value v -> n + 1 - v
  std::vector<int> descent_positions() const;  // 1-based i with v_i > v_{i+1}
  int descent_count() const;

  std::string to_string() const;

  bool operator==(const Permutation& o) const { return values_ == o.values_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }
  bool operator<(const Permutation& o) const { return values_ < o.values_; }

 private:
  std::vector<int> values_;
};

// Strict descent positions of a word: 1-based p with w_p > w_{p+1}.  Equal
// neighbors (plateaus) are not descents.
std::vector<int> word_descent_positions(const std::vector<int>& w);
int word_descent_count(const std::vector<int>& w);

// The canonical labeling word of (d, sigma): the k-th up step and the k-th
// down step of d both carry sigma_k, read off left to right.  The word is
// nonnesting: between the two copies of a value, no value appears twice.
class CanonWord {
 public:
  // Throws SizeMismatch when |sigma| != semilength(d).
  CanonWord(DyckPath d, Permutation sigma);

  const DyckPath& path() const { return path_; }
  const Permutation& perm() const { return perm_; }
  const std::vector<int>& word() const { return word_; }

  std::vector<int> descent_positions() const;
  int descent_count() const;

  // "121323" for n <= 9, otherwise comma-separated.
  std::string to_string() const;

 private:
  DyckPath path_;
  Permutation perm_;
  std::vector<int> word_;
};

inline CanonWord canon_word(DyckPath d, Permutation sigma) {
  return CanonWord(std::move(d), std::move(sigma));
}

// Number of descents of the canon word of (d, sigma) without materializing
// the word.
int descent_count(const DyckPath& d, const Permutation& sigma);

// A rectangular standard Young tableau with r rows and c columns: entries are
// exactly 1..rc, rows and columns strictly increasing.
class RectTableau {
 public:
  explicit RectTableau(std::vector<std::vector<int>> rows);  // InvalidTableau

  // Entry (i, j) = (j-1)r + i, i.e. columns filled top to bottom in order.
  static RectTableau column_superstandard(int rows, int cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_[0].size()); }
  int entry(int i, int j) const { return rows_[i - 1][j - 1]; }  // 1-based
  const std::vector<std::vector<int>>& row_data() const { return rows_; }

 private:
  std::vector<std::vector<int>> rows_;
};

// The canon word of (T, sigma): a word of length rc whose entries at the
// positions listed in row i all equal sigma_i.  Throws SizeMismatch when
// |sigma| != rows(T).
std::vector<int> tableau_word(const RectTableau& T, const Permutation& sigma);

// The two-column tableau equivalent to a Dyck path: row k lists the positions
// of the k-th up step and the k-th down step.
RectTableau tableau_from_path(const DyckPath& d);

}  // namespace canondy
