#pragma once

#include "pgg/rational.hpp"

namespace pgg {

// C(n, r), exact. Returns 0 for r < 0 or r > n, so that sums whose index
// ranges run past the feasible region vanish term by term instead of
// needing explicit clamping at every call site. n must be >= 0.
Int binom(long n, long r);

// C(n,j) p^j (1-p)^(n-j); 0 when j is outside {0,...,n}. Requires 0 <= p <= 1.
Rat binomial_pmf(long j, long n, const Rat& p);

// Probability that k_s of the k audits land on non-contributors when j of
// the n agents contribute: C(j, k-k_s) C(n-j, k_s) / C(n, k).
// Requires 0 <= j <= n and 1 <= k <= n; zero outside the feasible k_s range.
Rat hypergeom_pmf(long k_s, long j, long n, long k);

// log C(n, r) in double precision. Display/sampling fast path for scales
// where exact arithmetic is pointless; never used in verification.
double log_binom(long n, long r);

}  // namespace pgg
