#include "doctest.h"

#include "pgg/simulator.hpp"

#include "pgg/cli.hpp"
#include "pgg/exact_engine.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

using namespace pgg;

namespace {

GameConfig cfg_of(long n, long k, Rat a, Rat b, Rat z) {
    GameConfig c;
    c.n = n;
    c.k = k;
    c.a = std::move(a);
    c.b = std::move(b);
    c.z = std::move(z);
    return c;
}

bool same_stat(const SimStat& x, const SimStat& y) {
    return x.mean == y.mean && x.std_error == y.std_error && x.samples == y.samples;
}

bool same_report(const SimulationReport& x, const SimulationReport& y) {
    return same_stat(x.fund, y.fund) && same_stat(x.provision, y.provision) &&
           same_stat(x.complaint_rate, y.complaint_rate) &&
           same_stat(x.distributor_payoff, y.distributor_payoff) &&
           same_stat(x.agent_overall, y.agent_overall) &&
           same_stat(x.agent_contributors, y.agent_contributors) &&
           same_stat(x.agent_defectors, y.agent_defectors);
}

}  // namespace

TEST_CASE("the parallel kernel reproduces the play_round reference exactly") {
    const GameConfig c = cfg_of(4, 2, make_rat(1, 3), make_rat(1, 4), make_rat(1, 5));
    const SimulationReport fast = simulate(c, make_rat(2, 5), 3, 3, 20000, 7);
    const SimulationReport slow = simulate_serial(c, make_rat(2, 5), 3, 3, 20000, 7);
    CHECK(same_report(fast, slow));
    CHECK(cli::render_simulation(fast, "json") == cli::render_simulation(slow, "json"));
    // off-candidate cutoff takes the g = 0 branch often; cover it too
    const SimulationReport fast0 = simulate(c, make_rat(2, 5), 3, 4, 20000, 7);
    const SimulationReport slow0 = simulate_serial(c, make_rat(2, 5), 3, 4, 20000, 7);
    CHECK(same_report(fast0, slow0));
}

TEST_CASE("reports do not depend on the worker count") {
    const GameConfig c = cfg_of(3, 1, make_rat(1, 2), make_rat(1, 2), Rat(1));
#ifdef _OPENMP
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const SimulationReport one = simulate(c, make_rat(1, 2), 2, 2, 30000, 42);
    omp_set_num_threads(saved);
#else
    const SimulationReport one = simulate(c, make_rat(1, 2), 2, 2, 30000, 42);
#endif
    const SimulationReport many = simulate(c, make_rat(1, 2), 2, 2, 30000, 42);
    CHECK(same_report(one, many));
    CHECK(cli::render_simulation(one, "json") == cli::render_simulation(many, "json"));
}

TEST_CASE("repeated runs with one seed are identical; different seeds are not") {
    const GameConfig c = cfg_of(3, 1, make_rat(1, 2), make_rat(1, 2), Rat(1));
    const SimulationReport r1 = simulate(c, make_rat(1, 2), 2, 2, 10000, 9);
    const SimulationReport r2 = simulate(c, make_rat(1, 2), 2, 2, 10000, 9);
    const SimulationReport r3 = simulate(c, make_rat(1, 2), 2, 2, 10000, 10);
    CHECK(same_report(r1, r2));
    CHECK_FALSE(same_report(r1, r3));
}

TEST_CASE("degenerate full-contribution play has zero variance") {
    const GameConfig c = cfg_of(4, 1, make_rat(1, 2), make_rat(3, 4), Rat(0));
    const SimulationReport r = simulate(c, Rat(1), 4, 4, 5000, 3);
    CHECK(r.fund.mean == 4.0);
    CHECK(r.fund.std_error == 0.0);
    CHECK(r.provision.mean == 4.0);
    CHECK(r.complaint_rate.mean == 0.0);
    CHECK(r.distributor_payoff.mean == 2.0);  // n*a exactly
    CHECK(r.distributor_payoff.std_error == 0.0);
    CHECK(r.agent_overall.mean == 1.0);  // n*a - 1
    CHECK(r.agent_contributors.samples == 4 * 5000);
    CHECK(r.agent_defectors.samples == 0);
    CHECK(r.agent_defectors.mean == 0.0);
    CHECK(r.agent_defectors.std_error == 0.0);
}

TEST_CASE("nobody volunteers: the fund is exactly the audit count") {
    const GameConfig c = cfg_of(5, 2, make_rat(1, 3), make_rat(1, 2), Rat(1));
    const SimulationReport r = simulate(c, Rat(0), 2, 2, 5000, 11);
    CHECK(r.fund.mean == 2.0);
    CHECK(r.fund.std_error == 0.0);
    CHECK(r.provision.mean == 2.0);
    CHECK(r.agent_contributors.samples == 0);
    CHECK(r.agent_defectors.samples == 5 * 5000);
}

TEST_CASE("pool sizes partition the population") {
    const GameConfig c = cfg_of(6, 2, make_rat(1, 2), make_rat(1, 4), make_rat(1, 5));
    const SimulationReport r = simulate(c, make_rat(1, 3), 4, 4, 12345, 21);
    CHECK(r.agent_contributors.samples + r.agent_defectors.samples == 6ULL * 12345ULL);
    CHECK(r.trials == 12345);
    CHECK(r.seed == 21);
    CHECK(r.cutoff == 4);
}

TEST_CASE("audit selection is uniform over subsets") {
    std::map<std::pair<long, long>, long> counts;
    std::vector<std::uint8_t> actions;
    std::vector<long> audited, scratch;
    const long trials = 1000000;
    for (long t = 0; t < trials; ++t) {
        TrialStream ts(2718, static_cast<std::uint64_t>(t));
        draw_trial(ts, 5, 2, 1, 2, actions, audited, scratch);
        const long lo = std::min(audited[0], audited[1]);
        const long hi = std::max(audited[0], audited[1]);
        ++counts[{lo, hi}];
    }
    CHECK(counts.size() == 10);
    for (const auto& [subset, count] : counts) {
        const double freq = static_cast<double>(count) / static_cast<double>(trials);
        CHECK(freq > 0.1 - 0.004);
        CHECK(freq < 0.1 + 0.004);
    }
}

TEST_CASE("estimates land within four standard errors of the exact values") {
    // statistical acceptance: demand at least 95 of 100 seeded runs in-band,
    // per statistic
    const long n = 3, k = 1, tau = 2, cut = 2;
    const Rat a = make_rat(1, 2), b = make_rat(1, 2), z = Rat(1), p = make_rat(1, 2);
    const GameConfig c = cfg_of(n, k, a, b, z);

    const double exact_fund = rat_double(expected_fund(n, k, p));
    const double exact_dist = rat_double(eu_distributor(n, k, a, b, p, tau, cut));
    const Rat eu_c = eu_agent_contribute(n, k, a, z, p, tau);
    const Rat eu_d = eu_agent_defect(n, k, a, z, p, tau);
    const double exact_overall = rat_double(p * eu_c + (Rat(1) - p) * eu_d);
    Rat gmass(0), cmass(0);
    for (const auto& [x, m] : fund_distribution(n, k, p).mass) {
        if (x >= cut) gmass += Rat(cut) * m;
        if ((x >= cut ? cut : 0) < tau) cmass += m;
    }
    const double exact_prov = rat_double(gmass);
    const double exact_rate = rat_double(cmass);

    int ok_fund = 0, ok_prov = 0, ok_rate = 0, ok_dist = 0, ok_overall = 0, ok_pool_c = 0,
        ok_pool_d = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SimulationReport r = simulate(c, p, tau, cut, 10000, seed);
        const auto in_band = [](const SimStat& s, double exact) {
            return std::fabs(s.mean - exact) <= 4.0 * s.std_error;
        };
        ok_fund += in_band(r.fund, exact_fund);
        ok_prov += in_band(r.provision, exact_prov);
        ok_rate += in_band(r.complaint_rate, exact_rate);
        ok_dist += in_band(r.distributor_payoff, exact_dist);
        ok_overall += in_band(r.agent_overall, exact_overall);
        ok_pool_c += in_band(r.agent_contributors, rat_double(eu_c));
        ok_pool_d += in_band(r.agent_defectors, rat_double(eu_d));
    }
    CHECK(ok_fund >= 95);
    CHECK(ok_prov >= 95);
    CHECK(ok_rate >= 95);
    CHECK(ok_dist >= 95);
    CHECK(ok_overall >= 95);
    CHECK(ok_pool_c >= 95);
    CHECK(ok_pool_d >= 95);
}

TEST_CASE("simulate rejects invalid parameters") {
    const GameConfig c = cfg_of(3, 1, make_rat(1, 2), make_rat(1, 2), Rat(1));
    CHECK_THROWS_WITH_AS(simulate(c, make_rat(1, 2), 2, 2, 0, 0),
                         "trials must be at least 1", std::invalid_argument);
    CHECK_THROWS_AS(simulate(c, make_rat(1, 2), 2, -1, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(simulate(c, make_rat(1, 2), 2, 4, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(simulate(c, make_rat(1, 2), 0, 2, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(simulate(c, make_rat(3, 2), 2, 2, 10, 0), std::invalid_argument);
    const Rat tiny = Rat(1) / rat_pow(Rat(2), 70);  // denominator beyond 64 bits
    CHECK_THROWS_WITH_AS(simulate(c, tiny, 2, 2, 10, 0),
                         "p denominator is too large for the sampler", std::invalid_argument);
}
