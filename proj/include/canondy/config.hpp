#pragma once

namespace canondy {

// Default cap on the semilength of n!-sized permutation sweeps.  9! = 362880
// permutations per path is still interactive; every brute-force entry point
// takes the bound as a parameter so callers can raise it deliberately.
inline constexpr int kDefaultBruteForceBound = 9;

// Default cap for exhaustive all-paths verification suites.
inline constexpr int kDefaultExhaustiveBound = 7;

// Long-long accumulators are used inside permutation sweeps; n! must fit.
inline constexpr int kHardSweepLimit = 20;

// Resolve a worker count: the CANON_THREADS environment variable wins over
// the requested value; requested <= 0 means hardware concurrency.
int resolve_threads(int requested);

}  // namespace canondy
