#include "pgg/equilibrium.hpp"

#include <sstream>
#include <stdexcept>

namespace pgg {

namespace {

void check_solver_args(long n, long k, long tau) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (k >= n) throw std::invalid_argument("k must be < n");
    if (tau < k || tau > n) throw std::invalid_argument("tau must lie in {k,...,n}");
}

}  // namespace

Rat mixing_probability(long n, long k, long tau) {
    check_solver_args(n, k, tau);
    return make_rat(tau - k, n - k);
}

Rat z_star(long n, long k, const Rat& a, long tau) {
    const Rat p = mixing_probability(n, k, tau);
    const IndifferenceTerms t = indifference_terms(n, k, tau, p);
    const Rat ta = Rat(tau) * a;
    return make_rat(n - k, k) *
           (Rat(1) - t.volunteers_exact * ta - t.audits_reach * ta + t.audits_clear * ta);
}

std::optional<Rat> a_max(long n, long k, long tau) {
    const Rat p = mixing_probability(n, k, tau);
    const Rat pivot = indifference_terms(n, k, tau, p).pivot_probability();
    if (pivot <= 0) return std::nullopt;  // z_star >= 0 regardless of a
    return Rat(1) / (Rat(tau) * pivot);
}

Rat b_star(long n, long k, const Rat& a, long tau) {
    const Rat p = mixing_probability(n, k, tau);
    const ProvisionTerms t = provision_terms(n, k, tau, p);
    const Rat no_provision = Rat(1) - t.fund_short;
    if (no_provision == 0)
        throw std::domain_error("provision never occurs at the candidate profile");
    const Rat ratio_form =
        Rat(tau) * (Rat(1) - a) * (t.volunteers_cover + t.audits_cover) / (Rat(n) * no_provision);
    const Rat collapsed = make_rat(tau, n) * (Rat(1) - a);
    if (ratio_form != collapsed)
        throw std::logic_error("provision-split threshold disagrees with its collapsed form");
    return ratio_form;
}

EquilibriumSolution solve(long n, long k, const Rat& a, long tau) {
    check_solver_args(n, k, tau);
    if (a <= 0 || a >= 1) throw std::invalid_argument("a must satisfy 0 < a < 1");
    EquilibriumSolution s;
    s.n = n;
    s.k = k;
    s.tau = tau;
    s.a = a;
    s.p = mixing_probability(n, k, tau);
    s.indiff = indifference_terms(n, k, tau, s.p);
    s.provision = provision_terms(n, k, tau, s.p);
    s.z_star = z_star(n, k, a, tau);
    s.b_star = b_star(n, k, a, tau);
    s.a_max = a_max(n, k, tau);
    s.feasible = s.z_star >= 0;
    return s;
}

VerificationReport verify(const GameConfig& cfg, long tau, const Rat& p) {
    cfg.validate();
    if (tau < cfg.k || tau > cfg.n) throw std::invalid_argument("tau must lie in {k,...,n}");
    if (p < 0 || p > 1) throw std::invalid_argument("p must lie in [0, 1]");

    VerificationReport r;
    r.agent_contribute_eu = eu_agent_contribute(cfg.n, cfg.k, cfg.a, cfg.z, p, tau);
    r.agent_defect_eu = eu_agent_defect(cfg.n, cfg.k, cfg.a, cfg.z, p, tau);
    if (p == 0) {
        r.agent_ok = r.agent_defect_eu >= r.agent_contribute_eu;
        if (!r.agent_ok) r.witnesses.push_back("agent: contributing improves payoff");
    } else if (p == 1) {
        r.agent_ok = r.agent_contribute_eu >= r.agent_defect_eu;
        if (!r.agent_ok) r.witnesses.push_back("agent: defecting improves payoff");
    } else {
        r.agent_ok = r.agent_contribute_eu == r.agent_defect_eu;
        if (!r.agent_ok)
            r.witnesses.push_back(r.agent_defect_eu > r.agent_contribute_eu
                                      ? "agent: defecting improves payoff"
                                      : "agent: contributing improves payoff");
    }

    bool ex_ante_ok = true;
    for (long c = 0; c <= cfg.n; ++c)
        r.distributor_cutoff_eus[c] = eu_distributor(cfg.n, cfg.k, cfg.a, cfg.b, p, tau, c);
    const Rat& on_path = r.distributor_cutoff_eus.at(tau);
    for (const auto& [c, eu] : r.distributor_cutoff_eus) {
        if (eu > on_path) {
            ex_ante_ok = false;
            std::ostringstream w;
            w << "distributor: cutoff " << c << " improves payoff";
            r.witnesses.push_back(w.str());
        }
    }

    // Realized-fund rationality: at every fund the prescribed decision must
    // weakly maximize x - g + a*g - nb*[g < tau] over g in {0,...,x}.
    bool per_fund_ok = true;
    const Rat outcry = Rat(cfg.n) * cfg.b;
    for (const auto& [x, m] : fund_distribution(cfg.n, cfg.k, p).mass) {
        const long prescribed = (x >= tau) ? tau : 0;
        long best_g = 0;
        Rat best_v;
        for (long g = 0; g <= x; ++g) {
            Rat v = Rat(x - g) + Rat(g) * cfg.a - (g < tau ? outcry : Rat(0));
            if (g == 0 || v > best_v || (v == best_v && g == prescribed)) {
                best_g = g;
                best_v = v;
            }
        }
        r.per_fund_decisions[x] = best_g;
        Rat prescribed_v =
            Rat(x - prescribed) + Rat(prescribed) * cfg.a - (prescribed < tau ? outcry : Rat(0));
        if (best_v > prescribed_v) {
            per_fund_ok = false;
            std::ostringstream w;
            w << "distributor: at fund " << x << ", providing " << best_g
              << " improves on the prescribed " << prescribed;
            r.witnesses.push_back(w.str());
        }
    }

    r.distributor_ok = ex_ante_ok && per_fund_ok;
    r.verdict =
        (r.agent_ok && r.distributor_ok) ? Verdict::equilibrium : Verdict::not_equilibrium;
    return r;
}

EquilibriumSolution free_riding_case(long n, long k, const Rat& a) {
    return solve(n, k, a, k);
}

EfficientCase efficient_case(long n, long k, const Rat& a) {
    EfficientCase e;
    e.solution = solve(n, k, a, n);
    GameConfig cfg;
    cfg.n = n;
    cfg.k = k;
    cfg.a = a;
    cfg.b = e.solution.b_star;
    cfg.z = Rat(0);
    e.check = verify(cfg, n, Rat(1));
    e.contribution_holds = e.check.agent_ok;
    return e;
}

}  // namespace pgg
