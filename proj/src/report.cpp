#include "grasscs/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace grasscs {

namespace {
void sort_checks(std::vector<CheckResult>& checks) {
    std::sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.suite != b.suite) return a.suite < b.suite;
        if (a.check != b.check) return a.check < b.check;
        return a.lambda < b.lambda;
    });
}
}  // namespace

std::string report_json(const RunConfig& cfg, std::vector<CheckResult> checks) {
    sort_checks(checks);
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["config"] = {{"lambda", cfg.lambda},     {"seed", cfg.seed},
                   {"samples", cfg.samples},   {"tol_structure", cfg.tol_structure},
                   {"tol_matrix", cfg.tol_matrix}, {"mc_nsigma", cfg.mc_nsigma}};
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        arr.push_back({{"suite", c.suite},
                       {"check", c.check},
                       {"lambda", c.lambda},
                       {"residual", c.residual},
                       {"tolerance", c.tolerance},
                       {"passed", c.passed},
                       {"seed", c.seed},
                       {"wall_ms", c.wall_ms}});
    }
    j["checks"] = std::move(arr);
    return j.dump(2) + "\n";
}

std::string report_csv(std::vector<CheckResult> checks) {
    sort_checks(checks);
    std::string out = "suite,check,lambda,residual,tolerance,passed,seed,wall_ms\n";
    char buf[256];
    for (const auto& c : checks) {
        std::snprintf(buf, sizeof(buf), "%s,%s,%d,%.17g,%.17g,%d,%llu,%lld\n", c.suite.c_str(), c.check.c_str(),
                      c.lambda, c.residual, c.tolerance, c.passed ? 1 : 0,
                      static_cast<unsigned long long>(c.seed), c.wall_ms);
        out += buf;
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

}  // namespace grasscs
