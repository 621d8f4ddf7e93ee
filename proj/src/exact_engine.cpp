#include "pgg/exact_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pgg/combinatorics.hpp"

namespace pgg {

namespace {

// C(j, kk-k_s) C(m-j, k_s) / C(m, kk): chance that k_s of kk audits among m
// agents (j of them contributors) land on free-riders. Unlike hypergeom_pmf
// this accepts kk = 0 (a unit mass at k_s = 0), which the audited-agent
// branches need when only one audit exists.
Rat audit_term(long k_s, long j, long m, long kk) {
    Int numer = binom(j, kk - k_s) * binom(m - j, k_s);
    if (numer == 0) return Rat(0);
    return Rat(numer) / Rat(binom(m, kk));
}

void check_fund_args(long n, long k, const Rat& p) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 1 || k > n) throw std::invalid_argument("k must lie in {1,...,n}");
    if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");
}

void check_eu_args(long n, long k, const Rat& p, long tau) {
    check_fund_args(n, k, p);
    if (tau < k || tau > n) throw std::invalid_argument("tau must lie in {k,...,n}");
}

}  // namespace

Rat FundDistribution::total() const {
    Rat t(0);
    for (const auto& [x, m] : mass) t += m;
    return t;
}

Rat FundDistribution::mean() const {
    Rat t(0);
    for (const auto& [x, m] : mass) t += Rat(x) * m;
    return t;
}

Rat expected_fund(long n, long k, const Rat& p) {
    check_fund_args(n, k, p);
    return Rat(k) + p * Rat(n - k);
}

Rat expected_fund_oracle(long n, long k, const Rat& p) {
    check_fund_args(n, k, p);
    Rat total(0);
    for (long j = 0; j <= n; ++j) {
        Rat w = binomial_pmf(j, n, p);
        if (w == 0) continue;
        Rat inner(0);
        for (long k_s = 0; k_s <= k; ++k_s) inner += Rat(j + k_s) * hypergeom_pmf(k_s, j, n, k);
        total += w * inner;
    }
    return total;
}

FundDistribution fund_distribution(long n, long k, const Rat& p) {
    check_fund_args(n, k, p);
    FundDistribution d;
    d.n = n;
    d.k = k;
    d.p = p;
    for (long x = k; x <= n; ++x) {
        Rat m(0);
        for (long j = 0; j <= n; ++j) {
            Rat w = binomial_pmf(j, n, p);
            if (w == 0) continue;
            m += w * hypergeom_pmf(x - j, j, n, k);
        }
        if (m != 0) d.mass[x] = m;
    }
    return d;
}

Rat eu_agent_contribute(long n, long k, const Rat& a, const Rat& z, const Rat& p, long tau) {
    check_eu_args(n, k, p, tau);
    (void)z;  // a voluntary contributor is never fined
    const long m = n - 1;
    const Rat hit = Rat(tau) * a - 1;  // provision reached: -1 + tau*a
    const Rat miss(-1);                // fund short: the contribution is sunk

    // Audited: the agent's own audit is spent on a contributor, k-1 audits
    // remain among the m others; the agent's unit puts the fund at 1 + j + k_s.
    Rat audited(0);
    for (long j = std::max(tau - 1, 0L); j <= m; ++j) audited += binomial_pmf(j, m, p) * hit;
    for (long j = std::max(tau - k, 0L); j <= tau - 2; ++j) {
        Rat w = binomial_pmf(j, m, p);
        if (w == 0) continue;
        Rat reach(0);
        for (long k_s = std::max(tau - 1 - j, 0L); k_s <= k - 1; ++k_s)
            reach += audit_term(k_s, j, m, k - 1);
        audited += w * reach * hit;
    }
    for (long j = std::max(tau - k, 0L); j <= tau - 2; ++j) {
        Rat w = binomial_pmf(j, m, p);
        if (w == 0) continue;
        Rat fall(0);
        for (long k_s = 0; k_s <= std::min(tau - 2 - j, k - 1); ++k_s)
            fall += audit_term(k_s, j, m, k - 1);
        audited += w * fall * miss;
    }
    for (long j = 0; j <= tau - k - 1; ++j) audited += binomial_pmf(j, m, p) * miss;

    Rat total = make_rat(k, n) * audited;

    if (k < n) {
        // Unaudited: all k audits land among the m others. At k = n the branch
        // has weight zero and its audit split over m agents is undefined, so it
        // is skipped rather than evaluated.
        Rat unaudited(0);
        for (long j = std::max(tau - 1, 0L); j <= m; ++j)
            unaudited += binomial_pmf(j, m, p) * hit;
        for (long j = std::max(tau - k - 1, 0L); j <= tau - 2; ++j) {
            Rat w = binomial_pmf(j, m, p);
            if (w == 0) continue;
            Rat reach(0);
            for (long k_s = std::max(tau - 1 - j, 0L); k_s <= k; ++k_s)
                reach += audit_term(k_s, j, m, k);
            unaudited += w * reach * hit;
        }
        for (long j = std::max(tau - k - 1, 0L); j <= tau - 2; ++j) {
            Rat w = binomial_pmf(j, m, p);
            if (w == 0) continue;
            Rat fall(0);
            for (long k_s = 0; k_s <= std::min(tau - 2 - j, k); ++k_s)
                fall += audit_term(k_s, j, m, k);
            unaudited += w * fall * miss;
        }
        for (long j = 0; j <= tau - k - 2; ++j) unaudited += binomial_pmf(j, m, p) * miss;

        total += (Rat(1) - make_rat(k, n)) * unaudited;
    }
    return total;
}

Rat eu_agent_defect(long n, long k, const Rat& a, const Rat& z, const Rat& p, long tau) {
    check_eu_args(n, k, p, tau);
    const long m = n - 1;
    const Rat hit_fined = Rat(tau) * a - 1 - z;  // audited: forced in and fined
    const Rat miss_fined = Rat(-1) - z;
    const Rat hit_free = Rat(tau) * a;  // unaudited free-rider enjoys the good

    // Audited: the forced contribution plays the same fund role as a voluntary
    // one, with k-1 audits left for the m others.
    Rat audited(0);
    for (long j = std::max(tau - 1, 0L); j <= m; ++j)
        audited += binomial_pmf(j, m, p) * hit_fined;
    for (long j = std::max(tau - k, 0L); j <= tau - 2; ++j) {
        Rat w = binomial_pmf(j, m, p);
        if (w == 0) continue;
        Rat reach(0);
        for (long k_s = std::max(tau - 1 - j, 0L); k_s <= k - 1; ++k_s)
            reach += audit_term(k_s, j, m, k - 1);
        audited += w * reach * hit_fined;
    }
    for (long j = std::max(tau - k, 0L); j <= tau - 2; ++j) {
        Rat w = binomial_pmf(j, m, p);
        if (w == 0) continue;
        Rat fall(0);
        for (long k_s = 0; k_s <= std::min(tau - 2 - j, k - 1); ++k_s)
            fall += audit_term(k_s, j, m, k - 1);
        audited += w * fall * miss_fined;
    }
    for (long j = 0; j <= tau - k - 1; ++j) audited += binomial_pmf(j, m, p) * miss_fined;

    Rat total = make_rat(k, n) * audited;

    if (k < n) {
        // Unaudited: the agent adds nothing, provision needs j + k_s >= tau.
        // The remaining fund-short terms pay exactly zero and are omitted.
        Rat unaudited(0);
        for (long j = std::max(tau, 0L); j <= m; ++j)
            unaudited += binomial_pmf(j, m, p) * hit_free;
        for (long j = std::max(tau - k, 0L); j <= tau - 1; ++j) {
            Rat w = binomial_pmf(j, m, p);
            if (w == 0) continue;
            Rat reach(0);
            for (long k_s = std::max(tau - j, 0L); k_s <= k; ++k_s)
                reach += audit_term(k_s, j, m, k);
            unaudited += w * reach * hit_free;
        }
        total += (Rat(1) - make_rat(k, n)) * unaudited;
    }
    return total;
}

Rat eu_distributor(long n, long k, const Rat& a, const Rat& b, const Rat& p, long tau,
                   long cutoff) {
    check_eu_args(n, k, p, tau);
    if (cutoff < 0 || cutoff > n) throw std::invalid_argument("cutoff must lie in {0,...,n}");
    const Rat share = Rat(cutoff) * a;  // the distributor's own slice of the good
    const Rat outcry = Rat(n) * b;      // every agent complains when g < tau
    const bool complaints_on_provide = cutoff < tau;
    Rat total(0);
    for (long j = 0; j <= n; ++j) {
        Rat w = binomial_pmf(j, n, p);
        if (w == 0) continue;
        Rat inner(0);
        for (long k_s = 0; k_s <= k; ++k_s) {
            Rat h = hypergeom_pmf(k_s, j, n, k);
            if (h == 0) continue;
            const long x = j + k_s;
            Rat payoff;
            if (x >= cutoff) {
                payoff = Rat(x - cutoff) + share;
                if (complaints_on_provide) payoff -= outcry;
            } else {
                payoff = Rat(x) - outcry;
            }
            inner += h * payoff;
        }
        total += w * inner;
    }
    return total;
}

namespace {

struct Enumerator {
    GameConfig cfg;
    std::vector<AuditOutcome> audit_sets;     // all C(n,k) subsets
    std::vector<Rat> p_pow, q_pow;            // powers of p and 1-p

    Enumerator(long n, long k, const Rat& a, const Rat& b, const Rat& z, const Rat& p) {
        if (n > 12) throw std::invalid_argument("brute-force oracle guarded to n <= 12");
        check_fund_args(n, k, p);
        cfg.n = n;
        cfg.k = k;
        cfg.a = a;
        cfg.b = b;
        cfg.z = z;
        cfg.validate();
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) != static_cast<int>(k)) continue;
            AuditOutcome audit;
            for (long i = 0; i < n; ++i)
                if (mask & (1u << i)) audit.audited.push_back(i);
            audit_sets.push_back(std::move(audit));
        }
        Rat q = Rat(1) - p;
        p_pow.resize(n + 1);
        q_pow.resize(n + 1);
        for (long i = 0; i <= n; ++i) {
            p_pow[i] = rat_pow(p, static_cast<unsigned long>(i));
            q_pow[i] = rat_pow(q, static_cast<unsigned long>(i));
        }
    }
};

}  // namespace

Rat eu_agent_brute(long n, long k, const Rat& a, const Rat& z, const Rat& p, long tau,
                   bool contribute) {
    Enumerator en(n, k, a, Rat(0), z, p);
    if (tau < k || tau > n) throw std::invalid_argument("tau must lie in {k,...,n}");
    ExpectationProfile exps;
    exps.taus.assign(n, tau);
    CutoffStrategy strat{tau};
    ContributionProfile profile;
    profile.actions.assign(n, 0);
    profile.actions[0] = contribute ? 1 : 0;
    PayoffVector out;

    Rat total(0);
    const long others = n - 1;
    for (std::uint32_t mask = 0; mask < (1u << others); ++mask) {
        long j = std::popcount(mask);
        for (long i = 0; i < others; ++i)
            profile.actions[i + 1] = (mask >> i) & 1u;
        Rat sum(0);
        for (const AuditOutcome& audit : en.audit_sets) {
            play_round_into(en.cfg, profile, audit, strat, exps, out);
            sum += out.agent_payoffs[0];
        }
        total += en.p_pow[j] * en.q_pow[others - j] * sum;
    }
    return total / Rat(binom(n, k));
}

Rat eu_distributor_brute(long n, long k, const Rat& a, const Rat& b, const Rat& p, long tau,
                         long cutoff) {
    Enumerator en(n, k, a, b, Rat(0), p);
    if (tau < k || tau > n) throw std::invalid_argument("tau must lie in {k,...,n}");
    if (cutoff < 0 || cutoff > n) throw std::invalid_argument("cutoff must lie in {0,...,n}");
    ExpectationProfile exps;
    exps.taus.assign(n, tau);
    CutoffStrategy strat{cutoff};
    ContributionProfile profile;
    profile.actions.assign(n, 0);
    PayoffVector out;

    Rat total(0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        long j = std::popcount(mask);
        for (long i = 0; i < n; ++i) profile.actions[i] = (mask >> i) & 1u;
        Rat sum(0);
        for (const AuditOutcome& audit : en.audit_sets) {
            play_round_into(en.cfg, profile, audit, strat, exps, out);
            sum += out.distributor_payoff;
        }
        total += en.p_pow[j] * en.q_pow[n - j] * sum;
    }
    return total / Rat(binom(n, k));
}

IndifferenceTerms indifference_terms(long n, long k, long tau, const Rat& p) {
    check_eu_args(n, k, p, tau);
    if (k == n) throw std::invalid_argument("k must be < n");
    const long m = n - 1;
    IndifferenceTerms t;
    t.volunteers_exact = binomial_pmf(tau - 1, m, p);
    t.audits_reach = Rat(0);
    for (long j = std::max(tau - k - 1, 0L); j <= tau - 2; ++j) {
        Rat w = binomial_pmf(j, m, p);
        if (w == 0) continue;
        Rat reach(0);
        for (long k_s = std::max(tau - 1 - j, 0L); k_s <= k; ++k_s)
            reach += audit_term(k_s, j, m, k);
        t.audits_reach += w * reach;
    }
    t.audits_clear = Rat(0);
    for (long j = std::max(tau - k, 0L); j <= tau - 1; ++j) {
        Rat w = binomial_pmf(j, m, p);
        if (w == 0) continue;
        Rat clear(0);
        for (long k_s = std::max(tau - j, 0L); k_s <= k; ++k_s)
            clear += audit_term(k_s, j, m, k);
        t.audits_clear += w * clear;
    }
    return t;
}

ProvisionTerms provision_terms(long n, long k, long tau, const Rat& p) {
    check_eu_args(n, k, p, tau);
    ProvisionTerms t;
    t.volunteers_cover = Rat(0);
    for (long j = tau; j <= n; ++j) t.volunteers_cover += binomial_pmf(j, n, p);
    t.audits_cover = Rat(0);
    t.fund_short = Rat(0);
    for (long j = 0; j <= tau - 1; ++j) {
        Rat w = binomial_pmf(j, n, p);
        if (w == 0) continue;
        Rat cover(0);
        for (long k_s = std::max(tau - j, 0L); k_s <= k; ++k_s)
            cover += hypergeom_pmf(k_s, j, n, k);
        t.audits_cover += w * cover;
        Rat short_(0);
        for (long k_s = 0; k_s <= std::min(tau - j - 1, k); ++k_s)
            short_ += hypergeom_pmf(k_s, j, n, k);
        t.fund_short += w * short_;
    }
    return t;
}

}  // namespace pgg
