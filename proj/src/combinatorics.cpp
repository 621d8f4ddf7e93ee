#include "pgg/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pgg {

Int binom(long n, long r) {
    if (n < 0) throw std::invalid_argument("binom: n must be non-negative");
    if (r < 0 || r > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
    return result;
}

Rat binomial_pmf(long j, long n, const Rat& p) {
    if (n < 0) throw std::invalid_argument("binomial_pmf: n must be non-negative");
    if (p < 0 || p > 1) throw std::invalid_argument("binomial_pmf: p must lie in [0, 1]");
    if (j < 0 || j > n) return Rat(0);
    Rat q = Rat(1) - p;
    return Rat(binom(n, j)) * rat_pow(p, static_cast<unsigned long>(j)) *
           rat_pow(q, static_cast<unsigned long>(n - j));
}

Rat hypergeom_pmf(long k_s, long j, long n, long k) {
    if (n < 1) throw std::invalid_argument("hypergeom_pmf: n must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("hypergeom_pmf: k must lie in {1,...,n}");
    if (j < 0 || j > n) throw std::invalid_argument("hypergeom_pmf: j must lie in {0,...,n}");
    Int numer = binom(j, k - k_s) * binom(n - j, k_s);
    if (numer == 0) return Rat(0);
    return Rat(numer) / Rat(binom(n, k));
}

double log_binom(long n, long r) {
    if (n < 0) throw std::invalid_argument("log_binom: n must be non-negative");
    if (r < 0 || r > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(r) + 1.0) -
           std::lgamma(static_cast<double>(n - r) + 1.0);
}

}  // namespace pgg
