#include "pgg/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace pgg {

namespace {

using u128 = unsigned __int128;

// Integer cross-moments accumulated per trial. Every report statistic is a
// fixed rational expression in these, so sums stay exact and the merge order
// across chunks cannot change the result.
enum Counter : int {
    X,      // fund
    X2,
    G,      // provided
    G2,
    MC,     // complaints
    MC2,
    U,      // embezzled x - g
    U2,
    UG,
    UM,
    GM,
    C13,    // agents who paid the unit: volunteers + audited free-riders
    C13SQ,
    C3,     // audited free-riders
    C3SQ,
    C13C3,
    GC13,
    GC3,
    C1,     // voluntary contributors
    C1G,
    C1G2,
    C23,    // free-riders of either kind
    C23G,
    C23G2,
    C3G,
    C3G2,
    COUNTER_COUNT
};
using Sums = std::array<u128, COUNTER_COUNT>;

Rat rat_from_u128(u128 v) {
    Int r = static_cast<unsigned long>(v >> 64);
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
    r += static_cast<unsigned long>(v);
    return Rat(r);
}

struct ExactAgg {
    Rat sum;
    Rat sumsq;
    unsigned long long n = 0;

    void add(const Rat& v) {
        sum += v;
        sumsq += v * v;
        ++n;
    }
};

SimStat finalize_stat(const ExactAgg& e) {
    SimStat s;
    s.samples = e.n;
    if (e.n == 0) return s;
    const Rat count(static_cast<unsigned long>(e.n));
    s.mean = rat_double(e.sum / count);
    if (e.n >= 2) {
        const Rat var = (e.sumsq - e.sum * e.sum / count) / (count - 1);
        s.std_error = std::sqrt(rat_double(var / count));
    }
    return s;
}

struct SimArgs {
    std::uint64_t p_num = 0;
    std::uint64_t p_den = 1;
};

SimArgs check_sim_args(const GameConfig& cfg, const Rat& p, long tau, long cutoff,
                       unsigned long long trials) {
    cfg.validate();
    if (tau < cfg.k || tau > cfg.n) throw std::invalid_argument("tau must lie in {k,...,n}");
    if (cutoff < 0 || cutoff > cfg.n)
        throw std::invalid_argument("cutoff must lie in {0,...,n}");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
    SimArgs args;
    if (!fits_uint64(p.get_den()))
        throw std::invalid_argument("p denominator is too large for the sampler");
    args.p_num = to_uint64(p.get_num());
    args.p_den = to_uint64(p.get_den());
    return args;
}

SimulationReport assemble(const Rat& p, long tau, long cutoff, unsigned long long trials,
                          std::uint64_t seed, const ExactAgg& fund, const ExactAgg& prov,
                          const ExactAgg& rate, const ExactAgg& dist, const ExactAgg& overall,
                          const ExactAgg& contrib, const ExactAgg& defect) {
    SimulationReport r;
    r.trials = trials;
    r.seed = seed;
    r.p = p;
    r.tau = tau;
    r.cutoff = cutoff;
    r.fund = finalize_stat(fund);
    r.provision = finalize_stat(prov);
    r.complaint_rate = finalize_stat(rate);
    r.distributor_payoff = finalize_stat(dist);
    r.agent_overall = finalize_stat(overall);
    r.agent_contributors = finalize_stat(contrib);
    r.agent_defectors = finalize_stat(defect);
    return r;
}

}  // namespace

void draw_trial(TrialStream& ts, long n, long k, std::uint64_t p_num, std::uint64_t p_den,
                std::vector<std::uint8_t>& actions, std::vector<long>& audited,
                std::vector<long>& scratch) {
    actions.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) actions[static_cast<std::size_t>(i)] = ts.bernoulli(p_num, p_den) ? 1 : 0;
    scratch.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) scratch[static_cast<std::size_t>(i)] = i;
    audited.resize(static_cast<std::size_t>(k));
    for (long i = 0; i < k; ++i) {
        const long j = i + static_cast<long>(ts.below(static_cast<std::uint64_t>(n - i)));
        std::swap(scratch[static_cast<std::size_t>(i)], scratch[static_cast<std::size_t>(j)]);
        audited[static_cast<std::size_t>(i)] = scratch[static_cast<std::size_t>(i)];
    }
}

SimulationReport simulate(const GameConfig& cfg, const Rat& p, long tau, long cutoff,
                          unsigned long long trials, std::uint64_t seed) {
    const SimArgs args = check_sim_args(cfg, p, tau, cutoff, trials);
    const long n = cfg.n;
    const long k = cfg.k;

    constexpr unsigned long long kChunk = 4096;
    const unsigned long long nchunks = (trials + kChunk - 1) / kChunk;
    std::vector<Sums> partial(nchunks, Sums{});

#pragma omp parallel for schedule(dynamic)
    for (long long ci = 0; ci < static_cast<long long>(nchunks); ++ci) {
        Sums s{};
        std::vector<std::uint8_t> actions;
        std::vector<long> audited;
        std::vector<long> scratch;
        const unsigned long long lo = static_cast<unsigned long long>(ci) * kChunk;
        const unsigned long long hi = std::min(trials, lo + kChunk);
        for (unsigned long long t = lo; t < hi; ++t) {
            TrialStream ts(seed, t);
            draw_trial(ts, n, k, args.p_num, args.p_den, actions, audited, scratch);
            long c1 = 0;
            for (std::uint8_t act : actions) c1 += act;
            long c3 = 0;
            for (long idx : audited) c3 += (actions[static_cast<std::size_t>(idx)] == 0);
            const long x = c1 + c3;
            const long g = (x >= cutoff) ? cutoff : 0;
            const long mc = (g < tau) ? n : 0;
            const long u = x - g;
            const long c13 = c1 + c3;
            const long c23 = n - c1;

            s[X] += static_cast<u128>(x);
            s[X2] += static_cast<u128>(x) * x;
            s[G] += static_cast<u128>(g);
            s[G2] += static_cast<u128>(g) * g;
            s[MC] += static_cast<u128>(mc);
            s[MC2] += static_cast<u128>(mc) * mc;
            s[U] += static_cast<u128>(u);
            s[U2] += static_cast<u128>(u) * u;
            s[UG] += static_cast<u128>(u) * g;
            s[UM] += static_cast<u128>(u) * mc;
            s[GM] += static_cast<u128>(g) * mc;
            s[C13] += static_cast<u128>(c13);
            s[C13SQ] += static_cast<u128>(c13) * c13;
            s[C3] += static_cast<u128>(c3);
            s[C3SQ] += static_cast<u128>(c3) * c3;
            s[C13C3] += static_cast<u128>(c13) * c3;
            s[GC13] += static_cast<u128>(g) * c13;
            s[GC3] += static_cast<u128>(g) * c3;
            s[C1] += static_cast<u128>(c1);
            s[C1G] += static_cast<u128>(c1) * g;
            s[C1G2] += static_cast<u128>(c1) * g * g;
            s[C23] += static_cast<u128>(c23);
            s[C23G] += static_cast<u128>(c23) * g;
            s[C23G2] += static_cast<u128>(c23) * g * g;
            s[C3G] += static_cast<u128>(c3) * g;
            s[C3G2] += static_cast<u128>(c3) * g * g;
        }
        partial[static_cast<std::size_t>(ci)] = s;
    }

    Sums sums{};
    for (const Sums& s : partial)
        for (int i = 0; i < COUNTER_COUNT; ++i) sums[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i)];

    const auto R = [&](Counter c) { return rat_from_u128(sums[static_cast<std::size_t>(c)]); };
    const Rat rn(n);
    const Rat& a = cfg.a;
    const Rat& b = cfg.b;
    const Rat zc = Rat(1) + cfg.z;  // the audited free-rider's unit plus fine

    ExactAgg fund{R(X), R(X2), trials};
    ExactAgg prov{R(G), R(G2), trials};
    ExactAgg rate{R(MC) / rn, R(MC2) / (rn * rn), trials};
    ExactAgg dist{R(U) + a * R(G) - b * R(MC),
                  R(U2) + a * a * R(G2) + b * b * R(MC2) + 2 * a * R(UG) - 2 * b * R(UM) -
                      2 * a * b * R(GM),
                  trials};
    ExactAgg overall{a * R(G) - (R(C13) + cfg.z * R(C3)) / rn,
                     a * a * R(G2) +
                         (R(C13SQ) + cfg.z * cfg.z * R(C3SQ) + 2 * cfg.z * R(C13C3)) / (rn * rn) -
                         2 * a * (R(GC13) + cfg.z * R(GC3)) / rn,
                     trials};
    ExactAgg contrib{a * R(C1G) - R(C1), a * a * R(C1G2) - 2 * a * R(C1G) + R(C1),
                     static_cast<unsigned long long>(sums[C1])};
    ExactAgg defect{a * R(C23G) - zc * R(C3),
                    a * a * R(C23G2) - 2 * a * zc * R(C3G) + zc * zc * R(C3),
                    static_cast<unsigned long long>(sums[C23])};

    return assemble(p, tau, cutoff, trials, seed, fund, prov, rate, dist, overall, contrib,
                    defect);
}

SimulationReport simulate_serial(const GameConfig& cfg, const Rat& p, long tau, long cutoff,
                                 unsigned long long trials, std::uint64_t seed) {
    const SimArgs args = check_sim_args(cfg, p, tau, cutoff, trials);
    const long n = cfg.n;
    const long k = cfg.k;

    ContributionProfile profile;
    AuditOutcome audit;
    std::vector<long> scratch;
    ExpectationProfile exps;
    exps.taus.assign(static_cast<std::size_t>(n), tau);
    const CutoffStrategy strat{cutoff};
    PayoffVector out;

    ExactAgg fund, prov, rate, dist, overall, contrib, defect;
    for (unsigned long long t = 0; t < trials; ++t) {
        TrialStream ts(seed, t);
        draw_trial(ts, n, k, args.p_num, args.p_den, profile.actions, audit.audited, scratch);
        play_round_into(cfg, profile, audit, strat, exps, out);
        fund.add(Rat(out.fund));
        prov.add(Rat(out.provided));
        rate.add(make_rat(out.complaints, n));
        dist.add(out.distributor_payoff);
        Rat sum_payoff(0);
        for (long i = 0; i < n; ++i) {
            const Rat& v = out.agent_payoffs[static_cast<std::size_t>(i)];
            sum_payoff += v;
            if (profile.actions[static_cast<std::size_t>(i)])
                contrib.add(v);
            else
                defect.add(v);
        }
        overall.add(sum_payoff / Rat(n));
    }

    return assemble(p, tau, cutoff, trials, seed, fund, prov, rate, dist, overall, contrib,
                    defect);
}

}  // namespace pgg
