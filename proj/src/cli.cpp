#include "pgg/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

namespace pgg::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rat& q) {
    return {{"exact", rat_str(q)}, {"approx", rat_double(q)}};
}

ordered_json amax_json(const std::optional<Rat>& a_max) {
    if (!a_max) return {{"exact", "inf"}, {"approx", nullptr}};
    return rational_json(*a_max);
}

std::string amax_str(const std::optional<Rat>& a_max) {
    return a_max ? rat_str(*a_max) : "inf";
}

ordered_json stat_json(const SimStat& s) {
    return {{"mean", s.mean}, {"std_error", s.std_error}, {"samples", s.samples}};
}

const char* verdict_str(Verdict v) {
    return v == Verdict::equilibrium ? "equilibrium" : "not_equilibrium";
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

void check_format(const std::string& format) {
    if (format != "json" && format != "csv" && format != "text")
        throw std::invalid_argument("format must be json, csv, or text");
}

std::string text_rat(const char* name, const Rat& q) {
    std::ostringstream out;
    out << name << ": " << rat_str(q) << " (" << rat_double(q) << ")\n";
    return out.str();
}

}  // namespace

std::string render_solution(const EquilibriumSolution& s, const std::string& format) {
    check_format(format);
    if (format == "json") {
        ordered_json j;
        j["n"] = s.n;
        j["k"] = s.k;
        j["tau"] = s.tau;
        j["a"] = rational_json(s.a);
        j["p"] = rational_json(s.p);
        j["z_star"] = rational_json(s.z_star);
        j["b_star"] = rational_json(s.b_star);
        j["a_max"] = amax_json(s.a_max);
        j["feasible"] = s.feasible;
        ordered_json terms;
        terms["volunteers_exact"] = rational_json(s.indiff.volunteers_exact);
        terms["audits_reach"] = rational_json(s.indiff.audits_reach);
        terms["audits_clear"] = rational_json(s.indiff.audits_clear);
        terms["pivot_probability"] = rational_json(s.indiff.pivot_probability());
        terms["volunteers_cover"] = rational_json(s.provision.volunteers_cover);
        terms["audits_cover"] = rational_json(s.provision.audits_cover);
        terms["fund_short"] = rational_json(s.provision.fund_short);
        terms["provision_probability"] = rational_json(s.provision.provision_probability());
        j["terms"] = terms;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "n,k,tau,a,p,z_star,b_star,a_max,feasible\n";
        out << s.n << ',' << s.k << ',' << s.tau << ',' << rat_str(s.a) << ',' << rat_str(s.p)
            << ',' << rat_str(s.z_star) << ',' << rat_str(s.b_star) << ',' << amax_str(s.a_max)
            << ',' << bool_str(s.feasible) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "n: " << s.n << "  k: " << s.k << "  tau: " << s.tau << "\n";
    out << text_rat("a", s.a) << text_rat("p", s.p) << text_rat("z_star", s.z_star)
        << text_rat("b_star", s.b_star);
    out << "a_max: " << amax_str(s.a_max);
    if (s.a_max) out << " (" << rat_double(*s.a_max) << ")";
    out << "\nfeasible: " << bool_str(s.feasible) << "\n";
    return out.str();
}

std::string render_verification(const VerificationReport& r, const GameConfig& cfg, long tau,
                                const Rat& p, const std::string& format) {
    check_format(format);
    if (format == "json") {
        ordered_json j;
        j["n"] = cfg.n;
        j["k"] = cfg.k;
        j["tau"] = tau;
        j["a"] = rational_json(cfg.a);
        j["b"] = rational_json(cfg.b);
        j["z"] = rational_json(cfg.z);
        j["p"] = rational_json(p);
        j["agent_contribute_eu"] = rational_json(r.agent_contribute_eu);
        j["agent_defect_eu"] = rational_json(r.agent_defect_eu);
        j["agent_ok"] = r.agent_ok;
        ordered_json cutoffs;
        for (const auto& [c, eu] : r.distributor_cutoff_eus)
            cutoffs[std::to_string(c)] = rational_json(eu);
        j["distributor_cutoff_eus"] = cutoffs;
        ordered_json decisions;
        for (const auto& [x, g] : r.per_fund_decisions) decisions[std::to_string(x)] = g;
        j["per_fund_decisions"] = decisions;
        j["distributor_ok"] = r.distributor_ok;
        j["verdict"] = verdict_str(r.verdict);
        j["witnesses"] = r.witnesses;
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "n,k,tau,a,b,z,p,agent_ok,distributor_ok,verdict\n";
        out << cfg.n << ',' << cfg.k << ',' << tau << ',' << rat_str(cfg.a) << ','
            << rat_str(cfg.b) << ',' << rat_str(cfg.z) << ',' << rat_str(p) << ','
            << bool_str(r.agent_ok) << ',' << bool_str(r.distributor_ok) << ','
            << verdict_str(r.verdict) << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "n: " << cfg.n << "  k: " << cfg.k << "  tau: " << tau << "\n";
    out << text_rat("a", cfg.a) << text_rat("b", cfg.b) << text_rat("z", cfg.z)
        << text_rat("p", p);
    out << text_rat("agent_contribute_eu", r.agent_contribute_eu);
    out << text_rat("agent_defect_eu", r.agent_defect_eu);
    out << "agent_ok: " << bool_str(r.agent_ok) << "\n";
    out << "distributor_ok: " << bool_str(r.distributor_ok) << "\n";
    out << "verdict: " << verdict_str(r.verdict) << "\n";
    for (const std::string& w : r.witnesses) out << "witness: " << w << "\n";
    return out.str();
}

std::string render_simulation(const SimulationReport& r, const std::string& format) {
    check_format(format);
    static constexpr const char* kNames[] = {
        "fund",          "provision",          "complaint_rate",   "distributor_payoff",
        "agent_overall", "agent_contributors", "agent_defectors"};
    const SimStat* stats[] = {&r.fund,          &r.provision,          &r.complaint_rate,
                              &r.distributor_payoff, &r.agent_overall, &r.agent_contributors,
                              &r.agent_defectors};
    if (format == "json") {
        ordered_json j;
        j["trials"] = r.trials;
        j["seed"] = r.seed;
        j["p"] = rational_json(r.p);
        j["tau"] = r.tau;
        j["cutoff"] = r.cutoff;
        for (int i = 0; i < 7; ++i) j[kNames[i]] = stat_json(*stats[i]);
        return j.dump(2) + "\n";
    }
    if (format == "csv") {
        std::ostringstream out;
        out << "statistic,mean,std_error,samples\n";
        out.precision(17);
        for (int i = 0; i < 7; ++i)
            out << kNames[i] << ',' << stats[i]->mean << ',' << stats[i]->std_error << ','
                << stats[i]->samples << '\n';
        return out.str();
    }
    std::ostringstream out;
    out << "trials: " << r.trials << "  seed: " << r.seed << "  p: " << rat_str(r.p)
        << "  tau: " << r.tau << "  cutoff: " << r.cutoff << "\n";
    out.precision(10);
    for (int i = 0; i < 7; ++i)
        out << kNames[i] << ": " << stats[i]->mean << " +/- " << stats[i]->std_error << " ("
            << stats[i]->samples << " samples)\n";
    return out.str();
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_values(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw std::invalid_argument("sweep spec: empty value in list");
        out.push_back(item);
    }
    return out;
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

}  // namespace

SweepSpec parse_sweep_spec(const std::string& text) {
    SweepSpec spec;
    std::vector<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("sweep spec: malformed line '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string rest = trim(line.substr(eq + 1));
        for (const std::string& k : seen)
            if (k == key) throw std::invalid_argument("sweep spec: duplicate key '" + key + "'");
        seen.push_back(key);
        if (rest.empty()) throw std::invalid_argument("sweep spec: empty range for '" + key + "'");
        if (key == "mode") {
            if (rest != "solve" && rest != "verify")
                throw std::invalid_argument("sweep spec: mode must be solve or verify");
            spec.mode = rest;
            continue;
        }
        const std::vector<std::string> values = split_values(rest);
        if (key == "n" || key == "k" || key == "tau") {
            std::vector<long>& dst = key == "n" ? spec.n : key == "k" ? spec.k : spec.tau;
            for (const std::string& v : values) dst.push_back(parse_long(v));
        } else if (key == "a" || key == "b" || key == "z") {
            std::vector<Rat>& dst = key == "a" ? spec.a : key == "b" ? spec.b : spec.z;
            for (const std::string& v : values) dst.push_back(rat_from_string(v));
        } else {
            throw std::invalid_argument("sweep spec: unknown key '" + key + "'");
        }
    }
    const auto require = [](bool ok, const char* what) {
        if (!ok) throw std::invalid_argument(std::string("sweep spec: empty range for '") + what +
                                             "'");
    };
    require(!spec.n.empty(), "n");
    require(!spec.k.empty(), "k");
    require(!spec.tau.empty(), "tau");
    require(!spec.a.empty(), "a");
    if (spec.mode == "verify") {
        require(!spec.b.empty(), "b");
        require(!spec.z.empty(), "z");
    }
    return spec;
}

std::string run_sweep(const SweepSpec& spec) {
    for (long n : spec.n)
        for (long k : spec.k) {
            if (k < 1 || k >= n)
                throw std::invalid_argument("sweep spec: combination violates 1 <= k < n");
            for (long tau : spec.tau)
                if (tau < k || tau > n)
                    throw std::invalid_argument(
                        "sweep spec: combination violates k <= tau <= n");
        }

    std::ostringstream out;
    if (spec.mode == "solve") {
        out << "n,k,tau,a,p,z_star,b_star,a_max,feasible\n";
        for (long n : spec.n)
            for (long k : spec.k)
                for (long tau : spec.tau)
                    for (const Rat& a : spec.a) {
                        const EquilibriumSolution s = solve(n, k, a, tau);
                        out << n << ',' << k << ',' << tau << ',' << rat_str(a) << ','
                            << rat_str(s.p) << ',' << rat_str(s.z_star) << ','
                            << rat_str(s.b_star) << ',' << amax_str(s.a_max) << ','
                            << bool_str(s.feasible) << '\n';
                    }
        return out.str();
    }
    out << "n,k,tau,a,b,z,p,agent_ok,distributor_ok,verdict\n";
    for (long n : spec.n)
        for (long k : spec.k)
            for (long tau : spec.tau)
                for (const Rat& a : spec.a)
                    for (const Rat& b : spec.b)
                        for (const Rat& z : spec.z) {
                            GameConfig cfg;
                            cfg.n = n;
                            cfg.k = k;
                            cfg.a = a;
                            cfg.b = b;
                            cfg.z = z;
                            const Rat p = mixing_probability(n, k, tau);
                            const VerificationReport r = verify(cfg, tau, p);
                            out << n << ',' << k << ',' << tau << ',' << rat_str(a) << ','
                                << rat_str(b) << ',' << rat_str(z) << ',' << rat_str(p) << ','
                                << bool_str(r.agent_ok) << ',' << bool_str(r.distributor_ok)
                                << ',' << verdict_str(r.verdict) << '\n';
                        }
    return out.str();
}

namespace {

struct SolveArgs {
    long n = 0;
    long k = 0;
    long tau = 0;
    std::string a;
    std::string format = "json";
};

struct VerifyArgs {
    long n = 0;
    long k = 0;
    long tau = 0;
    std::string a, b, z;
    std::string p;  // empty: (tau-k)/(n-k)
    std::string format = "json";
};

struct SimulateArgs {
    long n = 0;
    long k = 0;
    long tau = 0;
    std::string a, b, z;
    std::string p;    // empty: (tau-k)/(n-k)
    long cutoff = 0;  // only read when --cutoff was given; default is tau
    unsigned long long trials = 100000;
    std::uint64_t seed = 0;
    std::string format = "json";
};

struct SweepArgs {
    std::string spec_path;
    std::string out_path;  // empty: stdout
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file '" + out_path + "'");
    f << text;
}

}  // namespace

int run(int argc, char** argv) {
    CLI::App app{
        "Exact solver, verifier, and Monte Carlo simulator for a public-good game "
        "with audits, a provision bar, and a self-interested distributor"};
    app.require_subcommand(1);

    SolveArgs so;
    CLI::App* solve_cmd = app.add_subcommand("solve", "Solve for (p, z*, b*, a_max)");
    solve_cmd->add_option("--n", so.n, "number of agents")->required();
    solve_cmd->add_option("--k", so.k, "number of audits")->required();
    solve_cmd->add_option("--tau", so.tau, "provision bar expected by the agents")->required();
    solve_cmd->add_option("--a", so.a, "per-unit public good value (rational or decimal)")
        ->required();
    solve_cmd->add_option("--format", so.format, "json|csv|text");

    VerifyArgs ve;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Best-response audit of a candidate profile");
    verify_cmd->add_option("--n", ve.n, "number of agents")->required();
    verify_cmd->add_option("--k", ve.k, "number of audits")->required();
    verify_cmd->add_option("--tau", ve.tau, "provision bar expected by the agents")->required();
    verify_cmd->add_option("--a", ve.a, "per-unit public good value")->required();
    verify_cmd->add_option("--b", ve.b, "per-complaint cost to the distributor")->required();
    verify_cmd->add_option("--z", ve.z, "fine on an audited free-rider")->required();
    verify_cmd->add_option("--p", ve.p, "contribution probability (default (tau-k)/(n-k))");
    verify_cmd->add_option("--format", ve.format, "json|csv|text");

    SimulateArgs si;
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo simulation");
    simulate_cmd->add_option("--n", si.n, "number of agents")->required();
    simulate_cmd->add_option("--k", si.k, "number of audits")->required();
    simulate_cmd->add_option("--tau", si.tau, "provision bar expected by the agents")->required();
    simulate_cmd->add_option("--a", si.a, "per-unit public good value")->required();
    simulate_cmd->add_option("--b", si.b, "per-complaint cost to the distributor")->required();
    simulate_cmd->add_option("--z", si.z, "fine on an audited free-rider")->required();
    simulate_cmd->add_option("--p", si.p, "contribution probability (default (tau-k)/(n-k))");
    simulate_cmd->add_option("--cutoff", si.cutoff, "distributor provision cutoff (default tau)");
    simulate_cmd->add_option("--trials", si.trials, "number of trials (default 100000)");
    simulate_cmd->add_option("--seed", si.seed, "RNG seed (default 0)");
    simulate_cmd->add_option("--format", si.format, "json|csv|text");

    SweepArgs sw;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep to CSV");
    sweep_cmd->add_option("--spec", sw.spec_path, "sweep spec file")->required();
    sweep_cmd->add_option("--out", sw.out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve_cmd->parsed()) {
            const EquilibriumSolution s = solve(so.n, so.k, rat_from_string(so.a), so.tau);
            std::cout << render_solution(s, so.format);
            return 0;
        }
        if (verify_cmd->parsed()) {
            GameConfig cfg;
            cfg.n = ve.n;
            cfg.k = ve.k;
            cfg.a = rat_from_string(ve.a);
            cfg.b = rat_from_string(ve.b);
            cfg.z = rat_from_string(ve.z);
            const Rat p =
                ve.p.empty() ? mixing_probability(ve.n, ve.k, ve.tau) : rat_from_string(ve.p);
            const VerificationReport r = verify(cfg, ve.tau, p);
            std::cout << render_verification(r, cfg, ve.tau, p, ve.format);
            return r.verdict == Verdict::equilibrium ? 0 : 1;
        }
        if (simulate_cmd->parsed()) {
            GameConfig cfg;
            cfg.n = si.n;
            cfg.k = si.k;
            cfg.a = rat_from_string(si.a);
            cfg.b = rat_from_string(si.b);
            cfg.z = rat_from_string(si.z);
            const Rat p =
                si.p.empty() ? mixing_probability(si.n, si.k, si.tau) : rat_from_string(si.p);
            const long cutoff = simulate_cmd->count("--cutoff") ? si.cutoff : si.tau;
            const SimulationReport r = simulate(cfg, p, si.tau, cutoff, si.trials, si.seed);
            std::cout << render_simulation(r, si.format);
            return 0;
        }
        std::ifstream f(sw.spec_path);
        if (!f) throw std::invalid_argument("cannot read spec file '" + sw.spec_path + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        emit(run_sweep(parse_sweep_spec(buf.str())), sw.out_path);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace pgg::cli
