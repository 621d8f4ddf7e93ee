#pragma once

#include <cstdint>
#include <vector>

#include "pgg/model.hpp"
#include "pgg/rng.hpp"

namespace pgg {

struct SimStat {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(samples)
    unsigned long long samples = 0;
};

struct SimulationReport {
    unsigned long long trials = 0;
    std::uint64_t seed = 0;
    Rat p;
    long tau = 0;
    long cutoff = 0;
    SimStat fund;                // realized fund X
    SimStat provision;           // provided amount g
    SimStat complaint_rate;      // complaining fraction of agents, per trial
    SimStat distributor_payoff;  // per trial
    SimStat agent_overall;       // per-trial mean agent payoff
    SimStat agent_contributors;  // pooled over voluntary contributors
    SimStat agent_defectors;     // pooled over free-riders, audited or not
};

// One trial's randomness: n exact Bernoulli(p) contribution draws, then a
// k-step partial shuffle picking the audit set uniformly among C(n,k) subsets.
// The consumption order is part of the determinism contract shared by both
// simulator paths. p is passed as an exact num/den pair.
void draw_trial(TrialStream& ts, long n, long k, std::uint64_t p_num, std::uint64_t p_den,
                std::vector<std::uint8_t>& actions, std::vector<long>& audited,
                std::vector<long>& scratch);

// Monte Carlo estimates of the exact-engine quantities under symmetric (p, tau)
// play with distributor cutoff c. Trials are chunked across OpenMP workers;
// every accumulator is an exact integer count, so the merged report is
// byte-identical no matter how many workers ran. Requires trials >= 1 and a
// p whose denominator fits 64 bits.
SimulationReport simulate(const GameConfig& cfg, const Rat& p, long tau, long cutoff,
                          unsigned long long trials, std::uint64_t seed);

// Reference implementation: identical streams, but each trial goes through
// play_round with full rational accumulation. Reproduces simulate() exactly;
// kept for tests and as the baseline in the kernel benchmark.
SimulationReport simulate_serial(const GameConfig& cfg, const Rat& p, long tau, long cutoff,
                                 unsigned long long trials, std::uint64_t seed);

}  // namespace pgg
