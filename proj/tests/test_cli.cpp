#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "grasscs/verify.hpp"

using namespace grasscs;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GRASSCS_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("dim subcommand") {
    CHECK(run_cli("dim --lambda 2").out == "20\n");
    CHECK(run_cli("dim --lambda 1").out == "6\n");
    CHECK(run_cli("dim --lambda 20").out == "19481\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("dim --lambda notanumber").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    CHECK(run_cli("generators --lambda 1 --which Q9").exit_code == 2);
    // Soft cap on lambda without --force.
    CHECK(run_cli("basis --lambda 9").exit_code == 2);
    CHECK(run_cli("basis --lambda 7 --force").exit_code == 0);
}

TEST_CASE("basis listing") {
    const CmdResult r = run_cli("basis --lambda 1");
    REQUIRE(r.exit_code == 0);
    std::stringstream ss(r.out);
    std::string line;
    int count = 0;
    while (std::getline(ss, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.contains("norm"));
        ++count;
    }
    CHECK(count == 6);
}

TEST_CASE("generator export") {
    const CmdResult r = run_cli("generators --lambda 1 --which T30,C2");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["dim"] == 6);
    const auto& t30 = j["operators"]["T30"];
    const std::array<double, 6> expect = {-2, 0, 0, 0, 0, 2};
    for (int i = 0; i < 6; ++i) {
        CHECK(t30[i][i][0].get<double>() == expect[i]);
        CHECK(t30[i][i][1].get<double>() == 0.0);
    }
    for (int i = 0; i < 6; ++i) CHECK(j["operators"]["C2"][i][i][0].get<double>() == doctest::Approx(5.0));
}

TEST_CASE("fock amplitudes match the recorded table") {
    std::ifstream golden(std::string(GRASSCS_GOLDEN_DIR) + "/fock_lambda1.txt");
    REQUIRE(golden.good());
    std::string line, label;
    std::string fresh;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    while (std::getline(golden, line)) {
        if (line.rfind("# label ", 0) == 0) {
            label = line.substr(8);
            const CmdResult r = run_cli("fock --lambda 1 --label " + label);
            REQUIRE(r.exit_code == 0);
            fresh = r.out;
            // Every amplitude of the two-quanta states is +-1/sqrt(2).
            std::stringstream ss(fresh);
            std::string fl;
            int rows = 0;
            while (std::getline(ss, fl)) {
                const auto j = nlohmann::json::parse(fl);
                CHECK(std::abs(std::abs(j["re"].get<double>()) - inv_sqrt2) < 1e-14);
                CHECK(j["im"].get<double>() == 0.0);
                ++rows;
            }
            CHECK(rows == 2);
            continue;
        }
        // Golden line must literally appear in the fresh output.
        CHECK(fresh.find(line) != std::string::npos);
    }
}

TEST_CASE("verify reports are byte-identical for a fixed config") {
    const std::string args = "verify --suite algebra --lambda 1 --seed 99 --samples 1000";
    const CmdResult a = run_cli(args);
    const CmdResult b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());
    const auto j = nlohmann::json::parse(a.out);
    CHECK(j["schema_version"] == 1);
    for (const auto& c : j["checks"]) {
        CHECK(c["passed"].get<bool>());
        CHECK(c["seed"].get<std::uint64_t>() == 99);
        CHECK(c["wall_ms"].get<long long>() == 0);  // timing off by default
    }
}

TEST_CASE("overlap subcommand") {
    const CmdResult r = run_cli("overlap --lambda 2 --Z 0,0,0,0,0,0,0,0 --Zprime 0.3,0,0,0,0,0,0,0.1");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    // <Z'|0> = det(1+Z'^+Z')^{-lambda/2} = 1/(1.09*1.01), real and positive.
    CHECK(j["re"].get<double>() == doctest::Approx(1.0 / (1.09 * 1.01)).epsilon(1e-12));
    CHECK(j["im"].get<double>() == 0.0);
}

TEST_CASE("suite registry covers every advertised check") {
    RunConfig cfg;
    cfg.lambda = 1;
    cfg.samples = 2000;
    cfg.threads = 2;
    for (const std::string& suite : verify_suite_names()) {
        const auto expected = expected_checks(suite);
        const auto results = run_suite(suite, cfg);
        REQUIRE(results.size() == expected.size());
        std::set<std::string> got, want(expected.begin(), expected.end());
        for (const auto& r : results) got.insert(r.check);
        CHECK(got == want);
    }
    // The six suites the driver exposes are exactly the registered ones.
    const auto names = verify_suite_names();
    const std::set<std::string> want_names = {"algebra", "basis", "gops", "fock", "cs", "measure"};
    CHECK(std::set<std::string>(names.begin(), names.end()) == want_names);
}
