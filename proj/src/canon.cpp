#include "canondy/canon.hpp"

#include <algorithm>
#include <sstream>

namespace canondy {

namespace {

std::vector<int> checked_one_line(std::vector<int> v) {
  const int n = static_cast<int>(v.size());
  std::vector<char> seen(n + 1, 0);
  for (int x : v) {
    if (x < 1 || x > n || seen[x])
      throw Error("not a permutation of 1..n in one-line notation");
    seen[x] = 1;
  }
  return v;
}

std::string values_to_string(const std::vector<int>& v, int max_value) {
  std::ostringstream os;
  if (max_value <= 9) {
    for (int x : v) os << x;
  } else {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ',';
      os << v[i];
    }
  }
  return os.str();
}

}  // namespace

Permutation::Permutation(std::vector<int> one_line)
    : values_(checked_one_line(std::move(one_line))) {}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  Permutation p;
  p.values_ = std::move(v);
  return p;
}

Permutation Permutation::decreasing(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  Permutation p;
  p.values_ = std::move(v);
  return p;
}

Permutation Permutation::parse(const std::string& text) {
  if (text.empty()) throw Error("empty permutation");
  std::vector<int> v;
  if (text.find(',') != std::string::npos) {
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      try {
        v.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error("bad permutation token '" + tok + "'");
      }
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9')
        throw Error(std::string("bad permutation digit '") + ch + "'");
      v.push_back(ch - '0');
    }
  }
  return Permutation(std::move(v));
}

Permutation Permutation::complement() const {
  const int n = size();
  std::vector<int> v(values_);
  for (int& x : v) x = n + 1 - x;
  Permutation p;
  p.values_ = std::move(v);
  return p;
}

std::vector<int> Permutation::descent_positions() const {
  return word_descent_positions(values_);
}

int Permutation::descent_count() const {
  return word_descent_count(values_);
}

std::string Permutation::to_string() const {
  return values_to_string(values_, size());
}

std::vector<int> word_descent_positions(const std::vector<int>& w) {
  std::vector<int> out;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1]) out.push_back(static_cast<int>(p) + 1);
  return out;
}

int word_descent_count(const std::vector<int>& w) {
  int c = 0;
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (w[p] > w[p + 1]) ++c;
  return c;
}

CanonWord::CanonWord(DyckPath d, Permutation sigma)
    : path_(std::move(d)), perm_(std::move(sigma)) {
  if (perm_.size() != path_.semilength())
    throw SizeMismatch("permutation size != path semilength");
  word_.reserve(path_.length());
  int up = 0, down = 0;
  for (Step s : path_.steps())
    word_.push_back(s == Step::Up ? perm_.value(++up) : perm_.value(++down));
}

std::vector<int> CanonWord::descent_positions() const {
  return word_descent_positions(word_);
}

int CanonWord::descent_count() const { return word_descent_count(word_); }

std::string CanonWord::to_string() const {
  return values_to_string(word_, perm_.size());
}

int descent_count(const DyckPath& d, const Permutation& sigma) {
  if (sigma.size() != d.semilength())
    throw SizeMismatch("permutation size != path semilength");
  int up = 0, down = 0, prev = 0, c = 0;
  bool first = true;
  for (Step s : d.steps()) {
    int v = (s == Step::Up) ? sigma.value(++up) : sigma.value(++down);
    if (!first && prev > v) ++c;
    prev = v;
    first = false;
  }
  return c;
}

RectTableau::RectTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty() || rows_[0].empty())
    throw InvalidTableau("tableau must be nonempty");
  const int r = static_cast<int>(rows_.size());
  const int c = static_cast<int>(rows_[0].size());
  std::vector<char> seen(r * c + 1, 0);
  for (const auto& row : rows_) {
    if (static_cast<int>(row.size()) != c)
      throw InvalidTableau("tableau rows have unequal lengths");
    for (int x : row) {
      if (x < 1 || x > r * c || seen[x])
        throw InvalidTableau("tableau entries are not exactly 1..rc");
      seen[x] = 1;
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j + 1 < c; ++j)
      if (rows_[i][j] >= rows_[i][j + 1])
        throw InvalidTableau("tableau rows must strictly increase");
  for (int i = 0; i + 1 < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows_[i][j] >= rows_[i + 1][j])
        throw InvalidTableau("tableau columns must strictly increase");
}

RectTableau RectTableau::column_superstandard(int rows, int cols) {
  std::vector<std::vector<int>> t(rows, std::vector<int>(cols));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) t[i][j] = j * rows + i + 1;
  return RectTableau(std::move(t));
}

std::vector<int> tableau_word(const RectTableau& T, const Permutation& sigma) {
  if (sigma.size() != T.rows())
    throw SizeMismatch("permutation size != tableau row count");
  std::vector<int> w(T.rows() * T.cols());
  for (int i = 1; i <= T.rows(); ++i)
    for (int j = 1; j <= T.cols(); ++j) w[T.entry(i, j) - 1] = sigma.value(i);
  return w;
}

RectTableau tableau_from_path(const DyckPath& d) {
  std::vector<std::vector<int>> rows(d.semilength());
  int up = 0, down = 0;
  for (int i = 1; i <= d.length(); ++i) {
    if (d.step(i) == Step::Up)
      rows[up++].push_back(i);
    else
      rows[down++].push_back(i);
  }
  return RectTableau(std::move(rows));
}

}  // namespace canondy
