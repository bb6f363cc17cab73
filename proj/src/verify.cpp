#include "canondy/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "canondy/maximizers.hpp"
#include "canondy/poly.hpp"
#include "canondy/sequences.hpp"
#include "sweep.hpp"

namespace canondy {

namespace {

// Maximizer-union sizes by semilength, from the published data the suites
// pin; a mismatch is a hard failure.
constexpr long long kCandyRef[] = {1, 1, 3, 9, 34, 152, 771, 4371};

struct PathOutcome {
  long long checks = 0;
  std::vector<std::string> failures;
};

// Evaluates per_path on every path of semilength n in parallel and merges
// outcomes in path order.
template <typename Fn>
void over_paths(int n, int workers, SuiteResult& res, Fn&& per_path) {
  const std::vector<DyckPath> paths = all_dyck(n);
  std::vector<PathOutcome> out(paths.size());
  detail::parallel_for_index(paths.size(), workers, [&](std::size_t i) {
    per_path(paths[i], out[i]);
  });
  for (const PathOutcome& po : out) {
    res.checks += po.checks;
    res.failures.insert(res.failures.end(), po.failures.begin(),
                        po.failures.end());
  }
}

void fail(PathOutcome& o, const DyckPath& d, const std::string& what) {
  o.failures.push_back(d.to_string() + ": " + what);
}

int top_degree(const DyckPath& d) {
  return 2 * d.semilength() - 1 - bpk(d);
}

SuiteResult suite_symmetry(int max_n, int workers) {
  SuiteResult res{.suite = "symmetry"};
  for (int n = 1; n <= max_n; ++n) {
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const int center = 2 * d.semilength() - 1 - lpk(d);
      const DescentPolynomial c = canon_descent_poly(d);
      ++o.checks;
      if (!c.is_palindromic_about(center))
        fail(o, d, "polynomial not palindromic about " +
                       std::to_string(center));
    });
  }
  // Pointwise complement identity: des(d, s) + des(d, s^c) = 2n-1-lpk.
  for (int n = 1; n <= std::min(max_n, 6); ++n) {
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const int center = 2 * n - 1 - lpk(d);
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = i + 1;
      do {
        const Permutation s{std::vector<int>(v)};
        ++o.checks;
        if (descent_count(d, s) + descent_count(d, s.complement()) != center) {
          fail(o, d, "complement identity fails at " + s.to_string());
          break;
        }
      } while (std::next_permutation(v.begin(), v.end()));
    });
  }
  return res;
}

SuiteResult suite_degree(int max_n, int workers) {
  SuiteResult res{.suite = "degree"};
  for (int n = 1; n <= max_n; ++n) {
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const int m = top_degree(d);
      const DescentPolynomial c = canon_descent_poly(d);
      ++o.checks;
      if (c.degree() != m)
        fail(o, d, "degree " + std::to_string(c.degree()) + " != " +
                       std::to_string(m));
      ++o.checks;
      if (descent_count(d, bperm(d)) != m)
        fail(o, d, "greedy maximizer misses the top degree");
      ++o.checks;
      if (descent_count(d, vperm(d)) != m)
        fail(o, d, "valley-swap maximizer misses the top degree");
    });
  }
  return res;
}

SuiteResult suite_internal_zeros(int max_n, int workers) {
  SuiteResult res{.suite = "internal-zeros"};
  mpz_class factorial = 1;
  for (int n = 1; n <= max_n; ++n) {
    factorial *= n;
    const mpz_class nfact = factorial;
    over_paths(n, workers, res, [&, nfact](const DyckPath& d, PathOutcome& o) {
      const DescentPolynomial c = canon_descent_poly(d);
      ++o.checks;
      if (c.has_internal_zero()) fail(o, d, "internal zero coefficient");
      ++o.checks;
      const bool zigzag = bpk(d) == d.semilength();
      if ((c.coeff(0) != 0) != zigzag)
        fail(o, d, "constant term " + c.coeff(0).get_str());
      ++o.checks;
      if (c.coeff_sum() != nfact) fail(o, d, "coefficients do not sum to n!");
    });
  }
  return res;
}

SuiteResult suite_mindes(int max_n, int workers) {
  SuiteResult res{.suite = "mindes"};
  for (int n = 1; n <= max_n; ++n) {
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const DescentPolynomial c = canon_descent_poly(d);
      ++o.checks;
      if (c.min_degree() != bpk(d) - lpk(d))
        fail(o, d, "minimum degree " + std::to_string(c.min_degree()) +
                       " != bpk - lpk");
    });
  }
  return res;
}

SuiteResult suite_partition(int max_n, int workers) {
  SuiteResult res{.suite = "partition"};
  for (int n = 1; n <= max_n; ++n) {
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const std::vector<Permutation> m = max_set(d);
      const std::vector<DyckPath> bs = b_set(d);
      std::vector<Permutation> joined;
      std::size_t size_sum = 0;
      for (const DyckPath& b : bs) {
        const auto ext = linear_extensions(max_poset(d, b));
        size_sum += ext.size();
        joined.insert(joined.end(), ext.begin(), ext.end());
      }
      std::sort(joined.begin(), joined.end());
      ++o.checks;
      if (joined != m)
        fail(o, d, "extension union differs from the maximizer set");
      ++o.checks;
      if (size_sum != m.size())
        fail(o, d, "extension classes overlap");
      ++o.checks;
      if (canon_descent_poly(d).coeff(top_degree(d)) !=
          static_cast<long>(m.size()))
        fail(o, d, "leading coefficient != |M_d|");
      ++o.checks;
      if (m.size() < bs.size())
        fail(o, d, "|M_d| < |B_d|");
    });
  }
  return res;
}

SuiteResult suite_dessets(int max_n, int workers) {
  SuiteResult res{.suite = "dessets"};
  for (int n = 1; n <= max_n; ++n) {
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const auto from_max = descent_sets_of_max(d);
      const auto from_b = descent_sets_of_b(d);
      ++o.checks;
      if (from_max != from_b)
        fail(o, d, "maximizer descent sets differ from compatible-path sets");
      ++o.checks;
      if (from_b.size() != b_set(d).size())
        fail(o, d, "two compatible paths share a descent set");
    });
  }
  return res;
}

SuiteResult suite_corollaries(int max_n, int workers) {
  SuiteResult res{.suite = "corollaries"};
  for (int n = 1; n <= max_n; ++n) {
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const int m = top_degree(d);
      const Permutation delta = Permutation::decreasing(n);
      ++o.checks;
      if ((descent_count(d, delta) == m) != (pk(d) == bpk(d)))
        fail(o, d, "decreasing-labeling membership != (pk = bpk)");
      ++o.checks;
      const bool unique_delta =
          max_set_size(d, 2) == 1 && descent_count(d, delta) == m;
      if (unique_delta != (bounce(d) == d))
        fail(o, d, "M_d = {decreasing} iff d is its own bounce path");
      ++o.checks;
      bool coincide = true;
      for (int a : bounce_factors(d).boundaries)
        if (!(d.step(a) == Step::Up && d.step(a + 1) == Step::Down))
          coincide = false;
      if ((b_set(d).size() == 1) != coincide)
        fail(o, d, "singleton compatible set iff bounce peaks coincide");
      const MaxPoset P = max_poset(d, bounce(d));
      ++o.checks;
      if (!respects(P, bperm(d)))
        fail(o, d, "greedy maximizer outside the bounce-poset extensions");
      ++o.checks;
      if (!respects(P, vperm(d)))
        fail(o, d, "valley-swap maximizer outside the bounce-poset extensions");
      ++o.checks;
      if (CanonWord(d, vperm(d)).descent_positions() !=
          CanonWord(bounce(d), delta).descent_positions())
        fail(o, d, "valley-swap descent set differs from the bounce start");
    });
  }
  return res;
}

SuiteResult suite_identities(int max_n, int workers) {
  SuiteResult res{.suite = "identities"};
  for (int n = 1; n <= max_n; ++n) {
    const DescentPolynomial nara = narayana(n);
    const DescentPolynomial eul = eulerian(n);

    // Every sigma: the path-summed polynomial is t^{des sigma} * Narayana.
    {
      std::vector<Permutation> sigmas;
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = i + 1;
      do {
        sigmas.emplace_back(v);
      } while (std::next_permutation(v.begin(), v.end()));
      std::vector<char> ok(sigmas.size(), 1);
      detail::parallel_for_index(sigmas.size(), workers, [&](std::size_t i) {
        std::vector<mpz_class> shifted(sigmas[i].descent_count(), 0);
        for (const auto& c : nara.coeffs()) shifted.push_back(c);
        ok[i] = fixed_sigma_poly(sigmas[i]) ==
                DescentPolynomial(std::move(shifted));
      });
      for (std::size_t i = 0; i < sigmas.size(); ++i) {
        ++res.checks;
        if (!ok[i])
          res.failures.push_back("fixed-labeling polynomial of " +
                                 sigmas[i].to_string() +
                                 " is not a Narayana shift");
      }
    }

    // Summed over all paths: Eulerian * Narayana.
    {
      const std::vector<DyckPath> paths = all_dyck(n);
      std::vector<DescentPolynomial> per(paths.size());
      detail::parallel_for_index(paths.size(), workers, [&](std::size_t i) {
        per[i] = canon_descent_poly(paths[i]);
      });
      DescentPolynomial sum;
      for (const auto& p : per) sum = sum + p;
      ++res.checks;
      if (sum != eul * nara)
        res.failures.push_back(
            "n=" + std::to_string(n) +
            ": path-summed polynomial != Eulerian * Narayana");
    }

    // The zigzag path gives the Eulerian polynomial.
    {
      Composition ones;
      ones.parts.assign(n, 1);
      ++res.checks;
      if (canon_descent_poly(path_from_bcomp(ones)) != eul)
        res.failures.push_back("n=" + std::to_string(n) +
                               ": zigzag polynomial != Eulerian");
    }

    // The single-peak path matches the two-variable refinement at (t^2, t);
    // the refinement's closed form needs n >= 2.
    {
      Composition full;
      full.parts.assign(1, n);
      const DescentPolynomial c = canon_descent_poly(path_from_bcomp(full));
      ++res.checks;
      if (n == 1) {
        if (c != poly_from_ints({1}))
          res.failures.push_back("single-peak polynomial at n=1 is not 1");
      } else if (c != eulerian_tilde_t2_t(n)) {
        res.failures.push_back("n=" + std::to_string(n) +
                               ": single-peak polynomial != refinement");
      }
    }

    // Restricted polynomial: same support and symmetry center.
    over_paths(n, workers, res, [&](const DyckPath& d, PathOutcome& o) {
      const DescentPolynomial c = canon_descent_poly(d);
      const DescentPolynomial t = tilde_poly(d);
      ++o.checks;
      if (t.min_degree() != c.min_degree() || t.degree() != c.degree())
        fail(o, d, "restricted polynomial support differs");
      ++o.checks;
      if (t.has_internal_zero())
        fail(o, d, "restricted polynomial has an internal zero");
      ++o.checks;
      if (!t.is_palindromic_about(2 * n - 1 - lpk(d)))
        fail(o, d, "restricted polynomial not palindromic");
    });
  }
  return res;
}

SuiteResult suite_sequences(int max_n, int workers) {
  SuiteResult res{.suite = "sequences"};
  const auto note_all = [&](const SequenceReport& r) {
    for (const std::string& s : r.notes) res.conjecture_notes.push_back(s);
  };
  const int eff8 = std::min(max_n, 8);
  const int eff9 = std::min(max_n, 9);
  if (eff8 < max_n)
    res.conjecture_notes.push_back(
        "counting reports clamped to their feasibility caps (8, unique "
        "maximizers 9)");

  const SequenceReport pkeq = seq_pk_eq_bpk(eff8);
  res.checks += static_cast<long long>(pkeq.terms.size()) * 2;
  note_all(pkeq);

  const SequenceReport bd = seq_bd_singleton(eff8);
  res.checks += static_cast<long long>(bd.terms.size()) * 2;
  note_all(bd);

  const SequenceReport dist = seq_md_distribution(eff8);
  res.checks += static_cast<long long>(dist.terms.size());
  note_all(dist);

  const CandyReport candy = candy_sizes(eff8, workers);
  for (auto [n, v] : candy.candy.terms) {
    ++res.checks;
    if (n <= static_cast<int>(std::size(kCandyRef)) &&
        v != kCandyRef[n - 1])
      res.failures.push_back("maximizer-union size at n=" +
                             std::to_string(n) + " is " + std::to_string(v) +
                             ", expected " + std::to_string(kCandyRef[n - 1]));
  }
  note_all(candy.bperm_image);
  note_all(candy.vperm_image);
  note_all(candy.bperm_eq_vperm);

  const SequenceReport mdone = seq_md_equals_one(eff9, workers);
  std::ostringstream os;
  os << "unique-maximizer counts (external comparison):";
  for (auto [n, v] : mdone.terms) os << ' ' << v;
  res.conjecture_notes.push_back(os.str());
  res.checks += static_cast<long long>(mdone.terms.size());

  return res;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"symmetry", "degree",      "internal-zeros", "mindes",
          "partition", "dessets",    "corollaries",    "identities",
          "sequences"};
}

SuiteResult run_suite(const std::string& name, int max_n, int threads) {
  const int workers = resolve_threads(threads);
  if (max_n < 1) throw Error("verification requires max_n >= 1");
  // Factorial sweeps past semilength 9 are out of desk range; clamp and say
  // so rather than aborting a multi-suite run.
  const int eff = std::min(max_n, 9);
  SuiteResult res;
  if (name == "symmetry")
    res = suite_symmetry(eff, workers);
  else if (name == "degree")
    res = suite_degree(eff, workers);
  else if (name == "internal-zeros")
    res = suite_internal_zeros(eff, workers);
  else if (name == "mindes")
    res = suite_mindes(eff, workers);
  else if (name == "partition")
    res = suite_partition(eff, workers);
  else if (name == "dessets")
    res = suite_dessets(eff, workers);
  else if (name == "corollaries")
    res = suite_corollaries(eff, workers);
  else if (name == "identities")
    res = suite_identities(eff, workers);
  else if (name == "sequences")
    res = suite_sequences(eff, workers);
  else
    throw Error("unknown suite '" + name + "'");
  if (eff < max_n)
    res.conjecture_notes.push_back("suite clamped to semilength " +
                                   std::to_string(eff));
  return res;
}

}  // namespace canondy
