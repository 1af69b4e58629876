// Copyright 2026 The qsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "qsearch/cli.hpp"

namespace {

const std::string kBundledNetwork = std::string(QSEARCH_DATA_DIR) + "/paper_n4.network";

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = qsearch::cli::run_command(std::move(args), out, err);
    return CliResult{code, out.str(), err.str()};
}

nlohmann::json parse_report(const CliResult &result) {
    REQUIRE(result.exit_code == 0);
    const nlohmann::json report = nlohmann::json::parse(result.out);
    REQUIRE(report.is_object());
    return report;
}

void check_finite(const nlohmann::json &value) {
    if (value.is_number_float()) {
        CHECK(std::isfinite(value.get<double>()));
    } else if (value.is_object() || value.is_array()) {
        for (const auto &item : value) {
            check_finite(item);
        }
    }
}

} // namespace

TEST_CASE("grover reports one query and certain success at n = 2") {
    const CliResult result = run({"grover", "--n", "2", "--seed", "7", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(report["oracle_calls"] == 1);
    CHECK(report["iterations"] == 1);
    CHECK(report["success_probability"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report["measured_x"] == report["measured_k"]);
    CHECK(report["all_checks_pass"] == true);
    check_finite(report);
}

TEST_CASE("grover can measure the oracle register first") {
    const CliResult result = run(
        {"grover", "--n", "2", "--seed", "3", "--measure-k", "first", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(report["oracle_calls"] == 1);
    CHECK(report["success_probability"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report["measured_x"] == report["measured_k"]);
    CHECK(report["all_checks_pass"] == true);
}

TEST_CASE("identical invocations give byte-identical structured reports") {
    const std::vector<std::vector<std::string>> invocations = {
        {"grover", "--n", "3", "--seed", "11", "--format", "json"},
        {"machine", "sample", "--network", kBundledNetwork, "--push", "C23", "--trials",
         "5000", "--seed", "4", "--format", "json"},
        {"baseline", "--n", "2", "--trials", "20000", "--seed", "1", "--format", "json"},
        {"compare", "--n", "2", "--network", kBundledNetwork, "--trials", "20000", "--seed",
         "5", "--format", "json"},
    };
    for (const auto &argv : invocations) {
        const CliResult first = run(argv);
        const CliResult second = run(argv);
        REQUIRE(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}

TEST_CASE("machine enumerate lists the four pushed movements") {
    const CliResult result = run({"machine", "enumerate", "--network", kBundledNetwork,
                                  "--push", "C23", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(report["movement_count"] == 4);
    CHECK(report["equations"]["sum"] == 3);
    CHECK(report["equations"]["power"] == 3);
    CHECK(report["equations"]["linking"] == 2);
    CHECK(report["movements"].size() == 4);
    CHECK(report["all_checks_pass"] == true);
    for (const auto &movement : report["movements"]) {
        CHECK(movement["assignment"]["delta"] == 1);
    }
}

TEST_CASE("machine enumerate with Q lists all sixteen movements") {
    const CliResult result = run({"machine", "enumerate", "--network", kBundledNetwork,
                                  "--push", "Q", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(report["movement_count"] == 16);
}

TEST_CASE("machine sample frequencies are uniform within tolerance") {
    const CliResult result =
        run({"machine", "sample", "--network", kBundledNetwork, "--push", "C23", "--trials",
             "100000", "--seed", "9", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(report["all_checks_pass"] == true);
    for (const auto &movement : report["movements"]) {
        CHECK(std::abs(movement["frequency"].get<double>() - 0.25) <= 0.01);
    }
    check_finite(report);
}

TEST_CASE("baseline reproduces the 2.25 average at N = 4") {
    const CliResult result = run(
        {"baseline", "--n", "2", "--trials", "100000", "--seed", "1", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(std::abs(report["mean_queries"].get<double>() - 2.25) <= 0.02);
    CHECK(report["exact_mean_queries"] == "9/4");
    CHECK(report["worst_case_queries"] == 3);
    CHECK(report["grover_oracle_calls"] == 1);
    CHECK(report["all_checks_pass"] == true);
    CHECK(report["example_transcripts"].size() == 3);
}

TEST_CASE("histories reports the decomposition summary") {
    const CliResult result = run({"histories", "--n", "2", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(report["histories_per_k"] == 4);
    CHECK(report["history_total"] == 16);
    CHECK(report["max_queries"] == 1);
    CHECK(report["grover_oracle_calls"] == 1);
    CHECK(report["all_checks_pass"] == true);
}

TEST_CASE("compare finds all three distributions statistically equal") {
    const CliResult result = run({"compare", "--n", "2", "--network", kBundledNetwork,
                                  "--trials", "50000", "--seed", "13", "--format", "json"});
    const auto report = parse_report(result);
    CHECK(report["tv_quantum_machine"].get<double>() < 0.02);
    CHECK(report["tv_quantum_histories"].get<double>() < 0.02);
    CHECK(report["tv_machine_histories"].get<double>() < 0.02);
    CHECK(report["all_checks_pass"] == true);
    check_finite(report);
}

TEST_CASE("text format renders a non-empty human report") {
    const CliResult result = run({"grover", "--n", "2", "--seed", "7"});
    CHECK(result.exit_code == 0);
    CHECK_FALSE(result.out.empty());
}

TEST_CASE("argument errors exit with status 2") {
    CHECK(run({"unknown"}).exit_code == 2);
    CHECK(run({"grover", "--n", "2"}).exit_code == 2); // seed is mandatory
    CHECK(run({"grover", "--n", "2", "--seed", "1", "--format", "yaml"}).exit_code == 2);
    CHECK(run({"machine", "--network", kBundledNetwork}).exit_code == 2);
    CHECK(run({"baseline", "--n", "2", "--trials", "0", "--seed", "1"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
}

TEST_CASE("domain errors exit with status 1 and name the operation") {
    const CliResult missing = run({"machine", "enumerate", "--network",
                                   "/nonexistent/net.network", "--push", "Q"});
    CHECK(missing.exit_code == 1);
    CHECK(missing.err.find("parse_network") != std::string::npos);

    const CliResult narrow = run({"grover", "--n", "1", "--seed", "1"});
    CHECK(narrow.exit_code == 1);
    CHECK(narrow.err.find("layout") != std::string::npos);

    const CliResult odd = run({"histories", "--n", "3"});
    CHECK(odd.exit_code == 1);

    const CliResult bad_push = run({"machine", "enumerate", "--network", kBundledNetwork,
                                    "--push", "C99"});
    CHECK(bad_push.exit_code == 1);
    CHECK(bad_push.err.find("enumerate_movements") != std::string::npos);

    const CliResult bad_chi = run({"machine", "enumerate", "--network", kBundledNetwork,
                                   "--push", "Q", "--chi", "1.0"});
    CHECK(bad_chi.exit_code == 1);
    CHECK(bad_chi.err.find("build_machine") != std::string::npos);
}
