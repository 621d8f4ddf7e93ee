#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgg/exact_engine.hpp"

namespace pgg {

struct EquilibriumSolution {
    long n = 0;
    long k = 0;
    long tau = 0;
    Rat a;
    Rat p;       // mixing probability (tau-k)/(n-k)
    Rat z_star;  // audit fine making each agent exactly indifferent
    Rat b_star;  // complaint cost above which providing tau beats full embezzlement
    std::optional<Rat> a_max;  // largest a keeping z_star >= 0; nullopt when unbounded
    IndifferenceTerms indiff;
    ProvisionTerms provision;
    bool feasible = false;  // z_star >= 0
};

enum class Verdict { equilibrium, not_equilibrium };

struct VerificationReport {
    Rat agent_contribute_eu;
    Rat agent_defect_eu;
    bool agent_ok = false;
    std::map<long, Rat> distributor_cutoff_eus;  // provision cutoff -> exact expected utility
    std::map<long, long> per_fund_decisions;     // realizable fund -> payoff-maximizing g
    bool distributor_ok = false;
    Verdict verdict = Verdict::not_equilibrium;
    std::vector<std::string> witnesses;  // profitable deviations, empty on equilibrium
};

// (tau - k)/(n - k). Rejects k = n: with everyone audited no mixing is left.
Rat mixing_probability(long n, long k, long tau);

// The fine that equalizes the two agent expected utilities when others mix at
// mixing_probability(n, k, tau). Negative values mean the mixed profile cannot
// be supported at this a (see a_max).
Rat z_star(long n, long k, const Rat& a, long tau);

// Largest a for which z_star stays non-negative: 1/(tau * pivot probability).
// nullopt when the pivot probability vanishes and every a works.
std::optional<Rat> a_max(long n, long k, long tau);

// Complaint-cost threshold tau(1-a)(D+E)/(n(1-F)) with (D, E, F) the provision
// split; the tail identity D+E = 1-F collapses it to tau(1-a)/n, and both
// forms are computed and required to agree exactly.
Rat b_star(long n, long k, const Rat& a, long tau);

// Bundles p, z*, b*, a_max, the aggregate terms, and feasibility.
// Requires 1 <= k < n, k <= tau <= n, 0 < a < 1.
EquilibriumSolution solve(long n, long k, const Rat& a, long tau);

// Full best-response audit of the symmetric profile (p, tau) with cutoff
// provision, at the fine and complaint cost in cfg. Agents: exact indifference
// at interior p, weak preference for the pure action at p = 0 or 1.
// Distributor: cutoff tau must weakly beat every cutoff in {0,...,n} ex ante,
// and the prescribed decision must weakly maximize the realized payoff at
// every realizable fund. Ties never count as deviations.
VerificationReport verify(const GameConfig& cfg, long tau, const Rat& p);

// solve at tau = k: nobody volunteers (p = 0). The z_star field doubles as the
// largest fine under which defecting stays weakly optimal, (n-k)/k.
EquilibriumSolution free_riding_case(long n, long k, const Rat& a);

// solve at tau = n (p = 1), checked as a pure profile with no fine at all:
// full contribution must survive on pivotality alone.
struct EfficientCase {
    EquilibriumSolution solution;
    bool contribution_holds = false;  // verifier found contributing weakly best at z = 0
    VerificationReport check;         // verification at z = 0, b = b_star
};
EfficientCase efficient_case(long n, long k, const Rat& a);

}  // namespace pgg
