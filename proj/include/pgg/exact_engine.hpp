#pragma once

#include <map>

#include "pgg/model.hpp"

namespace pgg {

// Law of the realized fund X = volunteers + audited free-riders, with each of
// the n agents contributing independently with probability p and k audits
// drawn uniformly without replacement.
struct FundDistribution {
    long n = 0;
    long k = 0;
    Rat p;
    std::map<long, Rat> mass;  // support inside {k,...,n}; zero-mass points omitted

    Rat total() const;
    Rat mean() const;
};

// Closed form k + p(n-k).
Rat expected_fund(long n, long k, const Rat& p);

// The same expectation evaluated as the raw double sum over (j, k_s) with
// binomial and hypergeometric weights and no algebraic simplification.
// Agreement with expected_fund is the executable re-proof of the closed form.
Rat expected_fund_oracle(long n, long k, const Rat& p);

FundDistribution fund_distribution(long n, long k, const Rat& p);

// Expected utilities in the symmetric profile: every other agent contributes
// with probability p and expects tau, the distributor provides tau exactly
// when the fund covers it. Evaluated term by term as the printed double sums
// (branch weights k/n and 1-k/n, binomial over other volunteers, hypergeometric
// over audits landing on free-riders); out-of-range summation indices vanish
// through the binomial-coefficient-is-zero convention.
// z is charged only on an audited free-rider; the contribute variant keeps it
// in the signature for symmetry.
Rat eu_agent_contribute(long n, long k, const Rat& a, const Rat& z, const Rat& p, long tau);
Rat eu_agent_defect(long n, long k, const Rat& a, const Rat& z, const Rat& p, long tau);

// Distributor's expected utility when agents play (p, tau) symmetrically and
// the distributor uses provision cutoff c: provide c when X >= c (keeping
// X - c plus the a*c share of the good), nothing otherwise. Complaints are
// symmetric: all n agents complain whenever the provided amount falls short
// of tau, costing nb. c = tau is the candidate strategy, c = 0 full
// embezzlement.
Rat eu_distributor(long n, long k, const Rat& a, const Rat& b, const Rat& p, long tau,
                   long cutoff);

// Independent oracles: exhaustive enumeration of contribution profiles and
// audit subsets, pushing every outcome through play_round and weighting by
// its exact probability. Test path only; guarded to n <= 12.
Rat eu_agent_brute(long n, long k, const Rat& a, const Rat& z, const Rat& p, long tau,
                   bool contribute);
Rat eu_distributor_brute(long n, long k, const Rat& a, const Rat& b, const Rat& p, long tau,
                         long cutoff);

inline Rat eu_agent_contribute_brute(long n, long k, const Rat& a, const Rat& z, const Rat& p,
                                     long tau) {
    return eu_agent_brute(n, k, a, z, p, tau, true);
}
inline Rat eu_agent_defect_brute(long n, long k, const Rat& a, const Rat& z, const Rat& p,
                                 long tau) {
    return eu_agent_brute(n, k, a, z, p, tau, false);
}

// The three aggregates behind the indifference penalty z*. Each is a piece of
// the probability that the n-1 other agents' fund (k audits included) lands
// exactly one unit short of the provision bar tau -- the event where one more
// contribution tips provision.
struct IndifferenceTerms {
    Rat volunteers_exact;  // others volunteer exactly tau-1, audits then irrelevant
    Rat audits_reach;      // fewer volunteers, audits lift the fund to tau-1 or beyond
    Rat audits_clear;      // audits carry the others' fund to tau or beyond on their own

    // Pr[others' fund = tau - 1]
    Rat pivot_probability() const { return volunteers_exact + audits_reach - audits_clear; }
};
IndifferenceTerms indifference_terms(long n, long k, long tau, const Rat& p);

// The three aggregates behind the punishment threshold b*: a partition of the
// full-fund law by whether provision at bar tau occurs.
struct ProvisionTerms {
    Rat volunteers_cover;  // volunteers alone reach tau
    Rat audits_cover;      // volunteers fall short, audited free-riders close the gap
    Rat fund_short;        // fund below tau, no provision

    Rat provision_probability() const { return volunteers_cover + audits_cover; }
};
ProvisionTerms provision_terms(long n, long k, long tau, const Rat& p);

}  // namespace pgg
