#include "pgg/model.hpp"

#include <stdexcept>
#include <vector>

namespace pgg {

void GameConfig::validate() const {
    if (n < 1) throw std::invalid_argument("config: n must be positive");
    if (k < 1) throw std::invalid_argument("config: k must be at least 1 (the model presumes audits)");
    if (k > n) throw std::invalid_argument("config: k must be at most n");
    if (a <= 0 || a >= 1) throw std::invalid_argument("config: a must satisfy 0 < a < 1");
    if (b < 0) throw std::invalid_argument("config: b must be non-negative");
    if (z < 0) throw std::invalid_argument("config: z must be non-negative");
}

long fund_size(const ContributionProfile& profile, const AuditOutcome& audit) {
    const long n = static_cast<long>(profile.actions.size());
    std::vector<bool> seen(profile.actions.size(), false);
    long volunteers = 0;
    for (std::uint8_t t : profile.actions) volunteers += (t != 0);
    long forced = 0;
    for (long idx : audit.audited) {
        if (idx < 0 || idx >= n) throw std::invalid_argument("audit: index out of range");
        if (seen[static_cast<std::size_t>(idx)]) throw std::invalid_argument("audit: duplicate index");
        seen[static_cast<std::size_t>(idx)] = true;
        forced += (profile.actions[static_cast<std::size_t>(idx)] == 0);
    }
    return volunteers + forced;
}

PayoffVector play_round(const GameConfig& cfg, const ContributionProfile& profile,
                        const AuditOutcome& audit, CutoffStrategy strat,
                        const ExpectationProfile& exps) {
    cfg.validate();
    const auto size = static_cast<std::size_t>(cfg.n);
    if (profile.actions.size() != size) throw std::invalid_argument("profile: length must equal n");
    if (static_cast<long>(audit.audited.size()) != cfg.k)
        throw std::invalid_argument("audit: must name exactly k agents");
    if (exps.taus.size() != size) throw std::invalid_argument("expectations: length must equal n");
    for (long tau : exps.taus)
        if (tau < cfg.k || tau > cfg.n)
            throw std::invalid_argument("expectations: each tau must lie in {k,...,n}");
    if (strat.cutoff < 0 || strat.cutoff > cfg.n)
        throw std::invalid_argument("cutoff: must lie in {0,...,n}");
    fund_size(profile, audit);  // validates audit indices

    PayoffVector out;
    play_round_into(cfg, profile, audit, strat, exps, out);
    return out;
}

void play_round_into(const GameConfig& cfg, const ContributionProfile& profile,
                     const AuditOutcome& audit, CutoffStrategy strat,
                     const ExpectationProfile& exps, PayoffVector& out) {
    const std::size_t n = profile.actions.size();
    out.agent_payoffs.resize(n);

    long volunteers = 0;
    for (std::uint8_t t : profile.actions) volunteers += (t != 0);
    long forced = 0;
    for (long idx : audit.audited) forced += (profile.actions[static_cast<std::size_t>(idx)] == 0);

    const long fund = volunteers + forced;
    const long g = (fund >= strat.cutoff) ? strat.cutoff : 0;

    long complaints = 0;
    for (long tau : exps.taus) complaints += (tau > g);

    const Rat good = cfg.a * g;
    const Rat pay_contributor = good - 1;
    const Rat pay_bystander = good;
    const Rat pay_caught = good - 1 - cfg.z;

    for (std::size_t i = 0; i < n; ++i)
        out.agent_payoffs[i] = profile.actions[i] ? pay_contributor : pay_bystander;
    for (long idx : audit.audited)
        if (profile.actions[static_cast<std::size_t>(idx)] == 0)
            out.agent_payoffs[static_cast<std::size_t>(idx)] = pay_caught;

    out.distributor_payoff = Rat(fund - g) + good - Rat(complaints) * cfg.b;
    out.fund = fund;
    out.provided = g;
    out.complaints = complaints;
}

}  // namespace pgg
