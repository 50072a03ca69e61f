#include <chrono>
#include <iostream>
#include <string>

#include "cva/commands.hpp"
#include "cva/parallel.hpp"

// Compares the serial reference path (--threads 1) against the OpenMP path
// on the sampling suites and the per-permutation degree table, and verifies
// both produce identical reports.

using namespace cva;

namespace {

double run_once(RunConfig cfg, std::string* out) {
    Session s(cfg);
    auto t0 = std::chrono::steady_clock::now();
    Report rep = s.run();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    cfg.redact_timings = true;
    cfg.threads = 0; // compare content, not the echoed worker count
    rep.config = cfg;
    *out = rep.to_json().dump();
    return secs;
}

int bench_case(const std::string& label, RunConfig cfg, int par_threads) {
    std::string serial_out, parallel_out;
    cfg.threads = 1;
    cfg.redact_timings = true;
    double t_serial = run_once(cfg, &serial_out);
    cfg.threads = par_threads;
    double t_parallel = run_once(cfg, &parallel_out);
    bool same = serial_out == parallel_out;
    printf("%-28s serial %8.3fs   omp(%d) %8.3fs   speedup %5.2fx   identical %s\n",
           label.c_str(), t_serial, par_threads, t_parallel,
           t_parallel > 0 ? t_serial / t_parallel : 0.0, same ? "yes" : "NO");
    return same ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";
    int threads = par::hardware_threads();
    int rc = 0;

    {
        RunConfig cfg;
        cfg.command = "tao";
        cfg.n = quick ? 3 : 5;
        cfg.trials = quick ? 40 : 400;
        rc |= bench_case("tao sampling", cfg, threads);
    }
    {
        RunConfig cfg;
        cfg.command = "smooth";
        cfg.n = quick ? 2 : 3;
        cfg.trials = quick ? 10 : 50;
        rc |= bench_case("smooth jacobians", cfg, threads);
    }
    {
        RunConfig cfg;
        cfg.command = "degrees";
        cfg.n = quick ? 2 : 3;
        rc |= bench_case("degree table", cfg, threads);
    }
    {
        RunConfig cfg;
        cfg.command = "conjectures";
        cfg.n = quick ? 2 : 3;
        cfg.trials = quick ? 50 : 500;
        rc |= bench_case("conjecture reports", cfg, threads);
    }
    return rc;
}
