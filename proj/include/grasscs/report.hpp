#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grasscs {

struct RunConfig {
    int lambda = 1;
    std::uint64_t seed = 20240902;
    long long samples = 1000000;
    double tol_structure = 1e-12;
    double tol_matrix = 1e-9;
    double mc_nsigma = 3.0;
    std::string format = "json";  // json | csv
    std::string out;              // empty -> stdout
    bool force = false;           // lift the lambda soft cap
    bool timing = false;          // record wall clock (breaks byte-identical reports)
    int threads = 0;              // 0 -> GRASSCS_THREADS / hardware
};

struct CheckResult {
    std::string suite;
    std::string check;
    int lambda = 0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::uint64_t seed = 0;
    long long wall_ms = 0;
};

/// Stable report: checks sorted by (suite, check); schema_version header.
std::string report_json(const RunConfig& cfg, std::vector<CheckResult> checks);
std::string report_csv(std::vector<CheckResult> checks);

bool all_passed(const std::vector<CheckResult>& checks);

}  // namespace grasscs
