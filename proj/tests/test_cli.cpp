/*
 * Copyright 2026 sphstat authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sphstat/scenario.hpp"

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

std::string cli_path() {
    const char* env = std::getenv("SPHSTAT_CLI");
    REQUIRE(env != nullptr);
    return env;
}

CliResult run_cli(const std::string& args) {
    const std::string command = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult result;
    char buffer[4096];
    while (std::size_t got = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "sphstat_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("selftest passes") {
    const auto result = run_cli("selftest");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("[FAIL]") == std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("uniformity").exit_code == 2);            // missing --input
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("uniformity --input /does/not/exist.csv").exit_code == 2);
    CHECK(run_cli("gof --input /does/not/exist.csv --family normal").exit_code == 2);
}

TEST_CASE("malformed CSV is a computation error with located message") {
    const auto dir = temp_dir();
    const auto path = dir / "bad.csv";
    std::ofstream(path) << "1.0,2.0\n1.0,abc\n";
    const auto result = run_cli("uniformity --input " + path.string());
    CHECK(result.exit_code == 1);
}

TEST_CASE("dist to uniformity round trip") {
    const auto dir = temp_dir();
    const auto sample_path = dir / "uniform.csv";

    SECTION("uniform data does not reject; output is deterministic") {
        const auto gen = run_cli("dist --model uniform --n 100 --d 30 --seed 11 --out " +
                                 sample_path.string());
        REQUIRE(gen.exit_code == 0);
        const auto again = run_cli("dist --model uniform --n 100 --d 30 --seed 11");
        std::ifstream file(sample_path);
        std::stringstream persisted;
        persisted << file.rdbuf();
        CHECK(again.output == persisted.str());

        const auto test =
            run_cli("uniformity --input " + sample_path.string() + " --json");
        REQUIRE(test.exit_code == 0);
        CHECK(test.output.find("\"p_value\"") != std::string::npos);
        // repeated runs are byte-identical
        const auto repeat =
            run_cli("uniformity --input " + sample_path.string() + " --json");
        CHECK(repeat.output == test.output);
    }
    SECTION("concentrated vMF data rejects") {
        const auto vmf_path = dir / "vmf.csv";
        REQUIRE(run_cli("dist --model vmf:8 --n 150 --d 30 --seed 3 --out " +
                        vmf_path.string())
                    .exit_code == 0);
        const auto test = run_cli("uniformity --input " + vmf_path.string());
        REQUIRE(test.exit_code == 0);
        CHECK(test.output.find("reject uniformity") != std::string::npos);
    }
    SECTION("non-unit rows need --normalize") {
        const auto normal_path = dir / "normal.csv";
        REQUIRE(run_cli("dist --model normal --n 50 --d 10 --seed 5 --out " +
                        normal_path.string())
                    .exit_code == 0);
        CHECK(run_cli("uniformity --input " + normal_path.string()).exit_code == 1);
        CHECK(run_cli("uniformity --input " + normal_path.string() + " --normalize")
                  .exit_code == 0);
    }
}

TEST_CASE("gof subcommand") {
    const auto dir = temp_dir();
    const auto normal_path = dir / "gauss.csv";
    REQUIRE(run_cli("dist --model normal --n 120 --d 40 --seed 17 --out " +
                    normal_path.string())
                .exit_code == 0);

    SECTION("simple normal null on normal data") {
        const auto result =
            run_cli("gof --input " + normal_path.string() + " --family normal --json");
        REQUIRE(result.exit_code == 0);
        CHECK(result.output.find("\"g_statistic\"") != std::string::npos);
        CHECK(result.output.find("\"composite\": false") != std::string::npos);
    }
    SECTION("composite gamma with bootstrap") {
        const auto result = run_cli("gof --input " + normal_path.string() +
                                    " --family gamma-est --bootstrap 40 --seed 9 --json");
        REQUIRE(result.exit_code == 0);
        CHECK(result.output.find("\"composite\": true") != std::string::npos);
        // same seed, same bytes
        const auto again = run_cli("gof --input " + normal_path.string() +
                                   " --family gamma-est --bootstrap 40 --seed 9 --json");
        CHECK(again.output == result.output);
    }
    SECTION("--bootstrap with a fixed family is a usage error") {
        CHECK(run_cli("gof --input " + normal_path.string() +
                      " --family normal --bootstrap 40")
                  .exit_code == 2);
    }
    SECTION("t data against the normal null rejects") {
        const auto t_path = dir / "t6.csv";
        REQUIRE(run_cli("dist --model mvt:6 --n 150 --d 60 --seed 19 --out " +
                        t_path.string())
                    .exit_code == 0);
        const auto result =
            run_cli("gof --input " + t_path.string() + " --family normal");
        REQUIRE(result.exit_code == 0);
        CHECK(result.output.find("reject the fit") != std::string::npos);
    }
}

TEST_CASE("rotsym subcommand") {
    const auto dir = temp_dir();
    const auto sample_path = dir / "sphere.csv";
    const auto theta_path = dir / "theta.csv";
    REQUIRE(run_cli("dist --model uniform --n 80 --d 12 --seed 23 --out " +
                    sample_path.string())
                .exit_code == 0);
    {
        std::ofstream theta(theta_path);
        theta << "1";
        for (int i = 0; i < 12; ++i) theta << ",0";
        theta << "\n";
    }
    const auto result = run_cli("rotsym --input " + sample_path.string() + " --theta " +
                                theta_path.string() + " --json");
    REQUIRE(result.exit_code == 0);
    CHECK(result.output.find("\"p_value\"") != std::string::npos);
}

TEST_CASE("simulate: deterministic across worker counts") {
    const auto dir = temp_dir();
    const auto scenario_path = dir / "tiny.scn";
    std::ofstream(scenario_path) << R"(
test = uniformity
m = 60
n = 30
d = 12
model.type = uniform
scheme = rayleigh
seed = 31
)";
    const auto one = run_cli("simulate --scenario " + scenario_path.string() +
                             " --workers 1");
    const auto two = run_cli("simulate --scenario " + scenario_path.string() +
                             " --workers 2");
    REQUIRE(one.exit_code == 0);
    REQUIRE(two.exit_code == 0);
    CHECK(one.output == two.output);
    CHECK(one.output.find("scenario_id,n,d") != std::string::npos);

    SECTION("overrides narrow the grid") {
        const auto small = run_cli("simulate --scenario " + scenario_path.string() +
                                   " --m 10 --workers 2");
        REQUIRE(small.exit_code == 0);
        CHECK(small.output.find(",10,") != std::string::npos);
    }
    SECTION("convergence scenarios emit their own CSV") {
        const auto conv_path = dir / "conv.scn";
        std::ofstream(conv_path) << R"(
test = convergence
m = 80
n = 40
d = 40
model.type = uniform
convergence.statistic = k0:1
convergence.target_mean = 0
seed = 5
)";
        const auto hist_path = dir / "hist.csv";
        const auto result = run_cli("simulate --scenario " + conv_path.string() +
                                    " --workers 2 --hist " + hist_path.string());
        REQUIRE(result.exit_code == 0);
        CHECK(result.output.find("ks_pvalue") != std::string::npos);
        std::ifstream hist(hist_path);
        std::string header;
        std::getline(hist, header);
        CHECK(header == "id,bin_lo,bin_hi,count");
        long total = 0;
        std::string line;
        while (std::getline(hist, line)) {
            const auto last_comma = line.rfind(',');
            total += std::stol(line.substr(last_comma + 1));
        }
        CHECK(total == 80);  // histogram counts sum to the replicate count
    }
}

TEST_CASE("shipped table-row scenario files parse") {
    const char* dir = std::getenv("SPHSTAT_SCENARIO_DIR");
    REQUIRE(dir != nullptr);
    int seen = 0;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.path().extension() != ".scn") continue;
        ++seen;
        CHECK_NOTHROW(sphstat::scenario::parse_scenario_file(entry.path().string()));
    }
    CHECK(seen >= 40);  // every shipped experiment row parses
}
