#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "canondy/canon.hpp"
#include "canondy/config.hpp"
#include "canondy/dyck.hpp"

namespace canondy {

// A polynomial in t with exact integer coefficients, stored ascending with
// trailing zeros trimmed.  The zero polynomial has no coefficients.
class DescentPolynomial {
 public:
  DescentPolynomial() = default;
  explicit DescentPolynomial(std::vector<mpz_class> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const;      // throws ZeroPolynomial on the zero polynomial
  int min_degree() const;  // smallest k with nonzero coefficient
  // Coefficient of t^k; zero outside the stored range (including k < 0).
  mpz_class coeff(int k) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  mpz_class coeff_sum() const;

  // True if some coefficient strictly between min_degree and degree is zero.
  bool has_internal_zero() const;

  // True if coeff(i) == coeff(k - i) for all i, i.e. the polynomial is
  // symmetric about degree k/2.
  bool is_palindromic_about(int k) const;

  DescentPolynomial operator+(const DescentPolynomial& o) const;
  DescentPolynomial operator*(const DescentPolynomial& o) const;
  bool operator==(const DescentPolynomial& o) const {
    return coeffs_ == o.coeffs_;
  }
  bool operator!=(const DescentPolynomial& o) const { return !(*this == o); }

  // Ascending text form, e.g. "3*t^2 + 3*t^3"; zero coefficients between
  // min_degree and degree are printed so gaps are visible; the zero
  // polynomial prints "0".
  std::string to_text() const;

 private:
  std::vector<mpz_class> coeffs_;
};

// Convenience: the polynomial with coefficient list c0, c1, ... given as
// plain integers.
DescentPolynomial poly_from_ints(const std::vector<long long>& coeffs);

// The canon descent polynomial of d: sum over all sigma in S_n of
// t^{des(d, sigma)}.  Full n!-sweep; throws BruteForceBoundExceeded when
// semilength(d) > bound.
DescentPolynomial canon_descent_poly(const DyckPath& d,
                                     int bound = kDefaultBruteForceBound);

// Descent polynomial of S_n (Eulerian polynomial), via the standard
// recurrence.  n = 0 gives 1.
DescentPolynomial eulerian(int n);

// Narayana polynomial: sum_r (1/n) binom(n,r) binom(n,r+1) t^r; n = 0 gives 1.
DescentPolynomial narayana(int n);

// The two-variable refinement A~_n(t, u) = u0(t) + u * u1(t) where
// u1 = (t * eulerian(n-1))' and u0 = t^{n-1} u1(1/t).
struct TildePair {
  DescentPolynomial u0;
  DescentPolynomial u1;
};
TildePair eulerian_tilde(int n);

// Evaluation A~_n(t^2, t) as a polynomial in t.
DescentPolynomial eulerian_tilde_t2_t(int n);

// Sum of canon_descent_poly over all Dyck paths of semilength n.
DescentPolynomial canon_poly_all(int n, int bound = kDefaultBruteForceBound);

// Sum over all Dyck paths d of semilength |sigma| of t^{des(d, sigma)}.
// Equals t^{des(sigma)} * narayana(n).
DescentPolynomial fixed_sigma_poly(const Permutation& sigma,
                                   int bound = kDefaultBruteForceBound);

// Restriction of canon_descent_poly to sigma with sigma_1 in {1, n}.
DescentPolynomial tilde_poly(const DyckPath& d,
                             int bound = kDefaultBruteForceBound);

// Descent polynomial of a rectangular tableau: sum over sigma in S_rows of
// t^{des(word(T, sigma))}.
DescentPolynomial tableau_descent_poly(const RectTableau& T,
                                       int bound = kDefaultBruteForceBound);

}  // namespace canondy
