// Kernel benchmark: integer-moment OpenMP simulator vs the serial play_round
// reference, same streams, same statistics. The reference carries exact
// rational arithmetic per trial, so the gap is kernel + parallelism.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pgg/simulator.hpp"

using namespace pgg;

namespace {

double run_once(const GameConfig& cfg, const Rat& p, long tau, long cutoff,
                unsigned long long trials, bool serial, double* fund_mean) {
    const auto t0 = std::chrono::steady_clock::now();
    const SimulationReport r = serial ? simulate_serial(cfg, p, tau, cutoff, trials, 42)
                                      : simulate(cfg, p, tau, cutoff, trials, 42);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    *fund_mean = r.fund.mean;
    return secs;
}

}  // namespace

int main(int argc, char** argv) {
    unsigned long long parallel_trials = 2000000;
    unsigned long long serial_trials = 200000;
    if (argc > 1) parallel_trials = std::stoull(argv[1]);
    if (argc > 2) serial_trials = std::stoull(argv[2]);

    GameConfig cfg;
    cfg.n = 6;
    cfg.k = 2;
    cfg.a = make_rat(2, 3);
    cfg.b = make_rat(1, 4);
    cfg.z = make_rat(1, 5);
    const Rat p = make_rat(1, 2);
    const long tau = 4, cutoff = 4;

#ifdef _OPENMP
    std::printf("workers: %d\n", omp_get_max_threads());
#else
    std::printf("workers: 1 (built without OpenMP)\n");
#endif
    std::printf("config: n=6 k=2 a=2/3 b=1/4 z=1/5 p=1/2 tau=4 cutoff=4\n\n");
    std::printf("%-22s %12s %10s %14s\n", "variant", "trials", "seconds", "trials/sec");

    double fund_serial = 0.0, fund_parallel = 0.0;
    const double s_secs = run_once(cfg, p, tau, cutoff, serial_trials, true, &fund_serial);
    std::printf("%-22s %12llu %10.3f %14.0f\n", "serial reference", serial_trials, s_secs,
                serial_trials / s_secs);
    const double p_secs = run_once(cfg, p, tau, cutoff, parallel_trials, false, &fund_parallel);
    std::printf("%-22s %12llu %10.3f %14.0f\n", "moment kernel", parallel_trials, p_secs,
                parallel_trials / p_secs);

    const double speedup = (serial_trials / s_secs == 0.0)
                               ? 0.0
                               : (parallel_trials / p_secs) / (serial_trials / s_secs);
    std::printf("\nthroughput ratio (kernel / reference): %.1fx\n", speedup);

    // cross-check on the common trial count: the two paths must agree exactly
    double fund_a = 0.0, fund_b = 0.0;
    run_once(cfg, p, tau, cutoff, serial_trials, true, &fund_a);
    run_once(cfg, p, tau, cutoff, serial_trials, false, &fund_b);
    if (fund_a != fund_b) {
        std::printf("MISMATCH: serial fund mean %.17g vs kernel %.17g\n", fund_a, fund_b);
        return 1;
    }
    std::printf("paths agree bit-for-bit on %llu shared trials\n", serial_trials);
    return 0;
}
