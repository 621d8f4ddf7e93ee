#pragma once

#include <string>
#include <vector>

#include "pgg/equilibrium.hpp"
#include "pgg/simulator.hpp"

namespace pgg::cli {

// Entry point for the pgg binary: solve / verify / simulate / sweep.
// Exit codes: 0 success (or verified equilibrium), 1 verification failed,
// 2 invalid input (diagnostic on stderr names the violated precondition).
int run(int argc, char** argv);

// Renderers, shared with the test and acceptance harnesses. format is one of
// "json", "csv", "text". Every rational carries its exact num/den string; the
// float form is advisory.
std::string render_solution(const EquilibriumSolution& s, const std::string& format);
std::string render_verification(const VerificationReport& r, const GameConfig& cfg, long tau,
                                const Rat& p, const std::string& format);
std::string render_simulation(const SimulationReport& r, const std::string& format);

// Flat text sweep description: lines of "key = v1, v2, ..." with keys
// mode (solve|verify), n, k, tau, a, b, z. '#' starts a comment. Every
// (n, k, tau) combination must satisfy 1 <= k < n and k <= tau <= n.
struct SweepSpec {
    std::string mode = "solve";
    std::vector<long> n;
    std::vector<long> k;
    std::vector<long> tau;
    std::vector<Rat> a;
    std::vector<Rat> b;  // verify mode only
    std::vector<Rat> z;  // verify mode only
};
SweepSpec parse_sweep_spec(const std::string& text);

// One CSV row per parameter combination, headers fixed per mode.
std::string run_sweep(const SweepSpec& spec);

}  // namespace pgg::cli
