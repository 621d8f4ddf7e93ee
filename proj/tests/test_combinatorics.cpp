#include "doctest.h"

#include "pgg/combinatorics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace pgg;

static const std::vector<Rat> kPGrid = {Rat(0),          make_rat(1, 7), make_rat(1, 4),
                                        make_rat(1, 2),  make_rat(3, 4), make_rat(6, 7),
                                        Rat(1)};

TEST_CASE("binom basics and out-of-range convention") {
    CHECK(binom(5, 2) == 10);
    CHECK(binom(3, -1) == 0);
    CHECK(binom(7, 7) == 1);
    CHECK(binom(7, 8) == 0);
    CHECK(binom(0, 0) == 1);
    CHECK_THROWS_AS(binom(-1, 0), std::invalid_argument);
}

TEST_CASE("binom satisfies Pascal's rule up to n = 30") {
    for (long n = 2; n <= 30; ++n)
        for (long r = 1; r < n; ++r) CHECK(binom(n, r) == binom(n - 1, r - 1) + binom(n - 1, r));
}

TEST_CASE("binomial_pmf point values") {
    CHECK(binomial_pmf(2, 3, make_rat(1, 2)) == make_rat(3, 8));
    CHECK(binomial_pmf(0, 5, Rat(0)) == 1);
    CHECK(binomial_pmf(4, 4, Rat(1)) == 1);
    CHECK(binomial_pmf(3, 4, Rat(1)) == 0);
    CHECK(binomial_pmf(1, 5, Rat(0)) == 0);
}

TEST_CASE("binomial_pmf is zero outside {0,...,n}, even at degenerate p") {
    // the range check must come before any power is formed
    CHECK(binomial_pmf(-1, 3, Rat(0)) == 0);
    CHECK(binomial_pmf(4, 3, Rat(1)) == 0);
    CHECK(binomial_pmf(-2, 3, make_rat(1, 2)) == 0);
}

TEST_CASE("binomial_pmf rejects p outside [0,1]") {
    CHECK_THROWS_AS(binomial_pmf(1, 3, make_rat(3, 2)), std::invalid_argument);
    CHECK_THROWS_AS(binomial_pmf(1, 3, make_rat(-1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(binomial_pmf(1, -1, make_rat(1, 2)), std::invalid_argument);
}

TEST_CASE("binomial_pmf normalizes exactly") {
    for (long n = 0; n <= 12; ++n)
        for (const Rat& p : kPGrid) {
            Rat total(0);
            for (long j = 0; j <= n; ++j) total += binomial_pmf(j, n, p);
            CHECK(total == 1);
        }
}

TEST_CASE("hypergeom_pmf point values") {
    CHECK(hypergeom_pmf(0, 3, 3, 1) == 1);  // all contribute: no free-rider to catch
    CHECK(hypergeom_pmf(1, 0, 3, 1) == 1);  // nobody contributes: audit always lands on one
    CHECK(hypergeom_pmf(1, 1, 3, 1) == make_rat(2, 3));
    CHECK(hypergeom_pmf(0, 1, 3, 1) == make_rat(1, 3));
    CHECK(hypergeom_pmf(2, 1, 3, 1) == 0);   // infeasible count
    CHECK(hypergeom_pmf(-1, 1, 3, 1) == 0);
}

TEST_CASE("hypergeom_pmf rejects invalid population parameters") {
    CHECK_THROWS_AS(hypergeom_pmf(0, 0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(hypergeom_pmf(0, 0, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(hypergeom_pmf(0, -1, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(hypergeom_pmf(0, 4, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(hypergeom_pmf(0, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("hypergeom_pmf normalizes exactly") {
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k)
            for (long j = 0; j <= n; ++j) {
                Rat total(0);
                for (long k_s = 0; k_s <= k; ++k_s) total += hypergeom_pmf(k_s, j, n, k);
                CHECK(total == 1);
            }
}

TEST_CASE("hypergeom mean identity: E[k_s] = (n-j)k/n") {
    for (long n = 1; n <= 12; ++n)
        for (long k = 1; k <= n; ++k)
            for (long j = 0; j <= n; ++j) {
                Rat mean(0);
                for (long k_s = 0; k_s <= k; ++k_s)
                    mean += Rat(k_s) * hypergeom_pmf(k_s, j, n, k);
                CHECK(mean == make_rat((n - j) * k, n));
            }
}

TEST_CASE("log_binom tracks the exact value") {
    for (long n : {10L, 30L, 60L})
        for (long r = 0; r <= n; r += 5) {
            const double exact = std::log(Rat(binom(n, r)).get_d());
            CHECK(log_binom(n, r) == doctest::Approx(exact).epsilon(1e-12));
        }
    CHECK(log_binom(5, -1) == -std::numeric_limits<double>::infinity());
    CHECK(log_binom(5, 6) == -std::numeric_limits<double>::infinity());
}
