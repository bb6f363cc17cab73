#include "canondy/poly.hpp"

#include <algorithm>
#include <sstream>

#include "sweep.hpp"

namespace canondy {

namespace {

std::vector<mpz_class> trimmed(std::vector<mpz_class> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

}  // namespace

DescentPolynomial::DescentPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(trimmed(std::move(coeffs))) {}

int DescentPolynomial::degree() const {
  if (is_zero()) throw ZeroPolynomial("degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

int DescentPolynomial::min_degree() const {
  if (is_zero()) throw ZeroPolynomial("min_degree of the zero polynomial");
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return 0;  // unreachable
}

mpz_class DescentPolynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

mpz_class DescentPolynomial::coeff_sum() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool DescentPolynomial::has_internal_zero() const {
  if (is_zero()) return false;
  for (int k = min_degree(); k <= degree(); ++k)
    if (coeffs_[k] == 0) return true;
  return false;
}

bool DescentPolynomial::is_palindromic_about(int k) const {
  const int top = is_zero() ? 0 : degree();
  for (int i = std::min(0, k - top); 2 * i <= k; ++i)
    if (coeff(i) != coeff(k - i)) return false;
  return true;
}

DescentPolynomial DescentPolynomial::operator+(
    const DescentPolynomial& o) const {
  std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return DescentPolynomial(std::move(c));
}

DescentPolynomial DescentPolynomial::operator*(
    const DescentPolynomial& o) const {
  if (is_zero() || o.is_zero()) return DescentPolynomial();
  std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  return DescentPolynomial(std::move(c));
}

std::string DescentPolynomial::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = min_degree(); k <= degree(); ++k) {
    if (!first) os << " + ";
    first = false;
    if (k == 0) {
      os << coeffs_[k];
      continue;
    }
    if (coeffs_[k] != 1) os << coeffs_[k] << "*";
    os << "t";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

DescentPolynomial poly_from_ints(const std::vector<long long>& coeffs) {
  std::vector<mpz_class> c;
  c.reserve(coeffs.size());
  for (long long x : coeffs) c.emplace_back(static_cast<long>(x));
  return DescentPolynomial(std::move(c));
}

namespace {

// Sum of t^{des(word)} over all sigma in S_n for a fixed comparison table.
DescentPolynomial sweep_poly(const detail::DescentTable& table) {
  const int n = table.n;
  std::vector<long long> counts(2 * n, 0);
  if (n == 0) return poly_from_ints({1});
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  do {
    ++counts[table.count(sigma)];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return poly_from_ints(counts);
}

}  // namespace

DescentPolynomial canon_descent_poly(const DyckPath& d, int bound) {
  detail::check_sweep_bound(d.semilength(), bound);
  return sweep_poly(detail::DescentTable::build(d));
}

DescentPolynomial eulerian(int n) {
  // <n, k> = (k+1) <n-1, k> + (n-k) <n-1, k-1>
  std::vector<mpz_class> row = {1};
  for (int m = 2; m <= n; ++m) {
    std::vector<mpz_class> next(m, 0);
    for (int k = 0; k < m; ++k) {
      if (k < static_cast<int>(row.size())) next[k] += (k + 1) * row[k];
      if (k - 1 >= 0 && k - 1 < static_cast<int>(row.size()))
        next[k] += (m - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return DescentPolynomial(std::move(row));
}

DescentPolynomial narayana(int n) {
  if (n == 0) return poly_from_ints({1});
  std::vector<mpz_class> c(n);
  for (int r = 0; r < n; ++r) {
    mpz_class a, b;
    mpz_bin_uiui(a.get_mpz_t(), n, r);
    mpz_bin_uiui(b.get_mpz_t(), n, r + 1);
    c[r] = a * b / n;
  }
  return DescentPolynomial(std::move(c));
}

TildePair eulerian_tilde(int n) {
  if (n < 1) throw Error("eulerian_tilde requires n >= 1");
  // u1 = (t * eulerian(n-1))': coefficient k is (k+1) * a_k.
  const DescentPolynomial a = eulerian(n - 1);
  std::vector<mpz_class> f(n - 1 > 0 ? a.coeffs().size() : 1, 0);
  if (n == 1) {
    f[0] = 1;  // eulerian(0) = 1, (t)' = 1
  } else {
    for (std::size_t k = 0; k < a.coeffs().size(); ++k)
      f[k] = mpz_class(static_cast<long>(k + 1)) * a.coeffs()[k];
  }
  // u0 = t^{n-1} u1(1/t): coefficients of f reversed within degree n-1.
  std::vector<mpz_class> g(n, 0);
  for (std::size_t k = 0; k < f.size(); ++k) g[n - 1 - k] = f[k];
  return TildePair{DescentPolynomial(std::move(g)),
                   DescentPolynomial(std::move(f))};
}

DescentPolynomial eulerian_tilde_t2_t(int n) {
  const TildePair p = eulerian_tilde(n);
  std::vector<mpz_class> c(2 * n, 0);
  for (int k = 0; k <= (p.u0.is_zero() ? -1 : p.u0.degree()); ++k)
    c[2 * k] += p.u0.coeff(k);
  for (int k = 0; k <= (p.u1.is_zero() ? -1 : p.u1.degree()); ++k)
    c[2 * k + 1] += p.u1.coeff(k);
  return DescentPolynomial(std::move(c));
}

DescentPolynomial canon_poly_all(int n, int bound) {
  detail::check_sweep_bound(n, bound);
  DescentPolynomial sum;
  for_each_dyck(n, [&](const DyckPath& d) {
    sum = sum + canon_descent_poly(d, bound);
  });
  return sum;
}

DescentPolynomial fixed_sigma_poly(const Permutation& sigma, int bound) {
  const int n = sigma.size();
  detail::check_sweep_bound(n, bound);
  std::vector<long long> counts(2 * n + 1, 0);
  if (n == 0) return poly_from_ints({1});
  for_each_dyck(n, [&](const DyckPath& d) {
    ++counts[descent_count(d, sigma)];
  });
  return poly_from_ints(counts);
}

DescentPolynomial tilde_poly(const DyckPath& d, int bound) {
  const int n = d.semilength();
  detail::check_sweep_bound(n, bound);
  if (n == 0) return poly_from_ints({1});
  const auto table = detail::DescentTable::build(d);
  std::vector<long long> counts(2 * n, 0);
  std::vector<int> rest(n - 1);
  for (int first : {1, n}) {
    int j = 0;
    for (int v = 1; v <= n; ++v)
      if (v != first) rest[j++] = v;
    std::vector<int> sigma(n);
    sigma[0] = first;
    do {
      std::copy(rest.begin(), rest.end(), sigma.begin() + 1);
      ++counts[table.count(sigma)];
    } while (std::next_permutation(rest.begin(), rest.end()));
    if (n == 1) break;  // {1, n} is a single value
  }
  return poly_from_ints(counts);
}

DescentPolynomial tableau_descent_poly(const RectTableau& T, int bound) {
  const int n = T.rows();
  detail::check_sweep_bound(n, bound);
  std::vector<long long> counts(static_cast<std::size_t>(n) * T.cols(), 0);
  std::vector<int> sigma(n);
  for (int i = 0; i < n; ++i) sigma[i] = i + 1;
  // Comparison index pairs from the inverse placement of the tableau word.
  std::vector<int> row_of(n * T.cols());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= T.cols(); ++j) row_of[T.entry(i, j) - 1] = i - 1;
  do {
    int des = 0;
    for (int p = 0; p + 1 < n * T.cols(); ++p)
      des += sigma[row_of[p]] > sigma[row_of[p + 1]];
    ++counts[des];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return poly_from_ints(counts);
}

}  // namespace canondy
