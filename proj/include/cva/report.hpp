#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cva/permlab.hpp"
#include "cva/schemes.hpp"

namespace cva {

using Json = nlohmann::ordered_json;

/// Thrown on bad command-line usage or violated command preconditions;
/// mapped to exit code 2.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    std::string command = "all";
    int n = 2;
    uint64_t seed = 1;
    int trials = 0; // 0: command default
    std::string format = "table"; // table | json | csv
    std::string order = "grevlex"; // grevlex | lex
    int threads = 1;
    std::string cache_dir; // empty: in-memory only
    long budget_seconds = 600;
    std::optional<Permutation> pi;
    Orientation orientation = Orientation::Standard;
    bool diag_inverse = false;   // diag identity convention flag
    bool redact_timings = false; // zero elapsedMs for byte-identical reports

    Json to_json() const;
    TermOrder term_order() const;
};

struct CheckReport {
    std::string name;
    std::string status; // PASS | FAIL | REPORT
    Json payload;
    Json paper_expectation; // null when not applicable
    long long elapsed_ms = 0;
};

struct Report {
    RunConfig config;
    std::vector<CheckReport> checks;

    int failures() const;
    int findings() const; // REPORT rows with matchesPaperGl3 == false
    Json to_json() const;
    std::string render() const; // per config.format
};

std::string render_table(const Report& r);
std::string render_csv(const Report& r);

} // namespace cva
