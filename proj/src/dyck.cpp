#include "canondy/dyck.hpp"

#include <algorithm>
#include <sstream>

namespace canondy {

DyckPath DyckPath::parse(const std::string& word) {
  if (word.empty()) throw UnbalancedWord("empty path word");
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char ch : word) {
    if (ch == 'U' || ch == 'u' || ch == '1')
      steps.push_back(Step::Up);
    else if (ch == 'D' || ch == 'd' || ch == '0')
      steps.push_back(Step::Down);
    else
      throw BadCharacter(std::string("bad character '") + ch +
                         "' in path word (expected U/D or 1/0)");
  }
  return from_steps(std::move(steps));
}

DyckPath DyckPath::from_steps(std::vector<Step> steps) {
  DyckPath d;
  d.heights_.reserve(steps.size() + 1);
  d.heights_.push_back(0);
  int h = 0;
  for (Step s : steps) {
    h += (s == Step::Up) ? 1 : -1;
    if (h < 0) throw NegativePrefix("path word dips below the axis");
    d.heights_.push_back(h);
  }
  if (h != 0) throw UnbalancedWord("path word has unequal U and D counts");
  d.steps_ = std::move(steps);
  return d;
}

int DyckPath::max_height() const {
  return heights_.empty() ? 0 : *std::max_element(heights_.begin(), heights_.end());
}

std::string DyckPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(st == Step::Up ? 'U' : 'D');
  return s;
}

bool DyckPath::operator<(const DyckPath& o) const {
  // U < D pointwise; shorter words compare first on ties.
  return std::lexicographical_compare(
      steps_.begin(), steps_.end(), o.steps_.begin(), o.steps_.end(),
      [](Step a, Step b) {
        return static_cast<int>(a) < static_cast<int>(b);
      });
}

int Composition::total() const {
  int t = 0;
  for (int p : parts) t += p;
  return t;
}

std::string Composition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

std::vector<std::pair<int, int>> peaks(const DyckPath& d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < d.length(); ++i)
    if (d.step(i) == Step::Up && d.step(i + 1) == Step::Down)
      out.emplace_back(i, i + 1);
  return out;
}

int pk(const DyckPath& d) { return static_cast<int>(peaks(d).size()); }

std::vector<std::pair<int, int>> low_peaks(const DyckPath& d) {
  std::vector<std::pair<int, int>> out;
  for (auto [i, j] : peaks(d))
    if (d.height(i - 1) == 0) out.emplace_back(i, j);
  return out;
}

int lpk(const DyckPath& d) { return static_cast<int>(low_peaks(d).size()); }

std::vector<std::pair<int, int>> valleys(const DyckPath& d) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i < d.length(); ++i)
    if (d.step(i) == Step::Down && d.step(i + 1) == Step::Up)
      out.emplace_back(i, i + 1);
  return out;
}

std::vector<DyckPath> primitive_factors(const DyckPath& d) {
  std::vector<DyckPath> out;
  int start = 0;  // 0-based index of the first step of the current factor
  for (int x = 1; x <= d.length(); ++x) {
    if (d.height(x) == 0) {
      std::vector<Step> part(d.steps().begin() + start, d.steps().begin() + x);
      out.push_back(DyckPath::from_steps(std::move(part)));
      start = x;
    }
  }
  return out;
}

// Shared bounce walk: returns the apex lattice positions a_1 < ... < a_k.
// From each landing x0 the walk ascends to the first height h >= 1 with
// height(x0 + h) = h relative to the axis and the next step of d a down
// step, then descends to the axis at x0 + 2h.
static std::vector<int> bounce_apexes(const DyckPath& d) {
  std::vector<int> apexes;
  const int len = d.length();
  int x0 = 0;
  while (x0 < len) {
    int h = 1;
    while (!(d.height(x0 + h) == h &&
             (x0 + h < len && d.step(x0 + h + 1) == Step::Down)))
      ++h;
    apexes.push_back(x0 + h);
    x0 += 2 * h;
  }
  return apexes;
}

Composition bcomp(const DyckPath& d) {
  Composition c;
  int x0 = 0;
  for (int a : bounce_apexes(d)) {
    c.parts.push_back(a - x0);
    x0 = 2 * a - x0;  // x0 + 2h
  }
  return c;
}

DyckPath path_from_bcomp(const Composition& c) {
  std::vector<Step> steps;
  steps.reserve(2 * c.total());
  for (int p : c.parts) {
    steps.insert(steps.end(), p, Step::Up);
    steps.insert(steps.end(), p, Step::Down);
  }
  return DyckPath::from_steps(std::move(steps));
}

DyckPath bounce(const DyckPath& d) { return path_from_bcomp(bcomp(d)); }

int bpk(const DyckPath& d) {
  return static_cast<int>(bounce_apexes(d).size());
}

std::vector<std::pair<int, int>> BounceFactorization::factor_ranges() const {
  std::vector<std::pair<int, int>> out;
  int prev = 0;
  const int k = factor_count();
  for (int i = 0; i < k; ++i) {
    int end = (i + 1 == k) ? path.length() : boundaries[i];
    out.emplace_back(prev + 1, end);
    prev = end;
  }
  return out;
}

BounceFactorization bounce_factors(const DyckPath& d) {
  return BounceFactorization{d, bounce_apexes(d)};
}

bool is_under(const DyckPath& lower, const DyckPath& upper) {
  if (lower.semilength() != upper.semilength())
    throw SemilengthMismatch("paths have different semilengths");
  for (int x = 0; x <= lower.length(); ++x)
    if (lower.height(x) > upper.height(x)) return false;
  return true;
}

static void enum_rec(int n, std::vector<Step>& buf, int ups, int h,
                     const std::function<void(const DyckPath&)>& fn) {
  if (static_cast<int>(buf.size()) == 2 * n) {
    fn(DyckPath::from_steps(buf));
    return;
  }
  if (ups < n) {  // U first: lexicographic with U < D
    buf.push_back(Step::Up);
    enum_rec(n, buf, ups + 1, h + 1, fn);
    buf.pop_back();
  }
  if (h > 0) {
    buf.push_back(Step::Down);
    enum_rec(n, buf, ups, h - 1, fn);
    buf.pop_back();
  }
}

void for_each_dyck(int n, const std::function<void(const DyckPath&)>& fn) {
  std::vector<Step> buf;
  buf.reserve(2 * n);
  if (n == 0) {
    fn(DyckPath());
    return;
  }
  enum_rec(n, buf, 0, 0, fn);
}

std::vector<DyckPath> all_dyck(int n) {
  std::vector<DyckPath> out;
  for_each_dyck(n, [&](const DyckPath& d) { out.push_back(d); });
  return out;
}

mpz_class catalan(int n) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), 2 * n, n);
  return b / (n + 1);
}

DyckPath reverse(const DyckPath& d) {
  std::vector<Step> steps(d.steps().rbegin(), d.steps().rend());
  for (Step& s : steps) s = (s == Step::Up) ? Step::Down : Step::Up;
  return DyckPath::from_steps(std::move(steps));
}

DyckPath reverse_bounce(const DyckPath& d) {
  return reverse(bounce(reverse(d)));
}

static void comp_rec(int rest, Composition& c,
                     const std::function<void(const Composition&)>& fn) {
  if (rest == 0) {
    fn(c);
    return;
  }
  for (int p = 1; p <= rest; ++p) {
    c.parts.push_back(p);
    comp_rec(rest - p, c, fn);
    c.parts.pop_back();
  }
}

void for_each_composition(int n,
                          const std::function<void(const Composition&)>& fn) {
  Composition c;
  comp_rec(n, c, fn);
}

static mpz_class binom(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

mpz_class count_by_bcomp(const Composition& c) {
  mpz_class r = 1;
  for (int i = 0; i + 1 < c.size(); ++i)
    r *= binom(c.parts[i] + c.parts[i + 1] - 1, c.parts[i + 1]);
  return r;
}

mpz_class count_pk_eq_bpk_by_bcomp(const Composition& c) {
  mpz_class r = 1;
  for (int i = 0; i + 1 < c.size(); ++i) r *= c.parts[i];
  return r;
}

mpz_class count_peak_coincide_by_bcomp(const Composition& c) {
  mpz_class r = 1;
  for (int i = 0; i + 1 < c.size(); ++i)
    r *= binom(c.parts[i] + c.parts[i + 1] - 2, c.parts[i + 1] - 1);
  return r;
}

}  // namespace canondy
