#pragma once

#include <map>
#include <memory>
#include <mutex>

#include "cva/hilbert.hpp"
#include "cva/report.hpp"

namespace cva {

/// Reference degree values the reports compare against for n <= 3.
std::map<std::string, long long> paper_degree_table(int n);
/// Reference bidegrees (only the handful with published exact values).
std::map<std::string, BidegreePolynomial> paper_bidegree_table(int n);

/// {"A^i B^j": coeff} with keys in descending A-exponent order.
Json bidegree_json(const BidegreePolynomial& p);

/// One verification run: owns configuration, the Groebner cache, and all
/// parallelism. Kernel calls are pure; per-permutation and per-trial loops
/// fan out through par::for_index and results are keyed and sorted before
/// rendering, so reports are thread-count independent.
class Session {
public:
    explicit Session(RunConfig cfg);

    Report run();

    std::vector<CheckReport> cmd_degrees();
    std::vector<CheckReport> cmd_identities();
    std::vector<CheckReport> cmd_degenerate();
    std::vector<CheckReport> cmd_smooth();
    std::vector<CheckReport> cmd_tao();
    std::vector<CheckReport> cmd_strata();
    std::vector<CheckReport> cmd_conjectures();

    /// Memoized (and optionally disk-cached) reduced basis; budget applies
    /// per computation.
    std::shared_ptr<const GroebnerBasis> gb_for(const IdealSpec& I, const TermOrder& order);

    struct DegreeRow {
        std::string pi;
        std::optional<long long> d;                 // MISSING when budget hit
        std::optional<BidegreePolynomial> d_prime;
    };
    /// Degrees/bidegrees of every candidate ideal in S_n, parallel over pi.
    const std::vector<DegreeRow>& degrees_for(int n);

    const RunConfig& config() const { return cfg_; }

private:
    Deadline fresh_deadline() const;
    int effective_trials(int command_default) const;

    RunConfig cfg_;
    std::mutex mu_;
    std::map<std::string, std::shared_ptr<const GroebnerBasis>> gb_memo_;
    std::map<int, std::vector<DegreeRow>> degree_memo_;
};

} // namespace cva
