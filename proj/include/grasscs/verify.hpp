#pragma once

#include "grasscs/report.hpp"

namespace grasscs {

/// Suites runnable from the command line; "all" unions them.
std::vector<std::string> verify_suite_names();

/// The registered check names of a suite; every module invariant appears
/// here so a completeness audit can compare against the emitted report.
std::vector<std::string> expected_checks(const std::string& suite);

/// Runs one suite.  cfg.lambda is the largest representation index the
/// lambda-swept checks reach (each check also respects its own cost cap).
std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg);

/// Runs a single registered check; throws if the name is unknown.
CheckResult run_named_check(const std::string& suite, const std::string& check, const RunConfig& cfg);

std::vector<CheckResult> run_all_suites(const RunConfig& cfg);

}  // namespace grasscs
