#pragma once

#include "pgg/rational.hpp"

#include <cstdint>
#include <vector>

namespace pgg {

// Primitives of the four-stage game: n agents decide whether to put 1 unit
// into a common fund, k of them are audited (an audited non-contributor is
// forced to contribute and pays z on top), the distributor converts g of the
// fund into a public good worth a per unit to everyone, and each agent whose
// provision expectation is unmet docks the distributor by b.
struct GameConfig {
    long n = 0;  // number of agents
    long k = 0;  // audited agents, 1 <= k <= n
    Rat a;       // marginal per capita return, 0 < a < 1
    Rat b;       // punishment per complaint, >= 0
    Rat z;       // free-riding penalty, >= 0

    // Throws std::invalid_argument naming the violated precondition.
    void validate() const;
};

// Stage-1 actions, one flag per agent (1 = contribute).
struct ContributionProfile {
    std::vector<std::uint8_t> actions;
};

// Stage-2 outcome: the k distinct audited agent indices (0-based).
struct AuditOutcome {
    std::vector<long> audited;
};

// Stage-4 expectations; each tau_i must lie in {k,...,n}.
struct ExpectationProfile {
    std::vector<long> taus;
};

// Distributor's rule: provide exactly `cutoff` units when the fund covers it,
// otherwise provide nothing.
struct CutoffStrategy {
    long cutoff = 0;
};

struct PayoffVector {
    std::vector<Rat> agent_payoffs;
    Rat distributor_payoff;
    long fund = 0;        // X
    long provided = 0;    // g
    long complaints = 0;  // #{i : tau_i > g}
};

// X = voluntary contributors + audited non-contributors. Penalties are not
// part of the fund. Validates that the audit indices are distinct and in
// range for the profile.
long fund_size(const ContributionProfile& profile, const AuditOutcome& audit);

// One full play of the four stages. Stage 4 is the dominant action: agent i
// complains iff tau_i > g (complaining itself costs the agent nothing).
PayoffVector play_round(const GameConfig& cfg, const ContributionProfile& profile,
                        const AuditOutcome& audit, CutoffStrategy strat,
                        const ExpectationProfile& exps);

// Same computation without input validation or allocation when `out` is
// already sized; the enumeration and simulation loops live here.
void play_round_into(const GameConfig& cfg, const ContributionProfile& profile,
                     const AuditOutcome& audit, CutoffStrategy strat,
                     const ExpectationProfile& exps, PayoffVector& out);

}  // namespace pgg
