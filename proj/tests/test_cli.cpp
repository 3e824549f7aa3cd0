// Copyright 2026 The properclock developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

const std::string kCli = PROPERCLOCK_CLI_PATH;

int run(const std::string& args) {
    const int status = std::system((kCli + " " + args).c_str());
    REQUIRE(status != -1);
    return WEXITSTATUS(status);
}

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

}  // namespace

TEST_CASE("sweep writes the canonical csv") {
    const std::string out = "/tmp/properclock_sweep_test.csv";
    CHECK(run("--out " + out + " sweep --axis theta --grid 0:1.5:5 --ptot 0 2>/dev/null") == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("dp_over_mc,ptot_over_mc,theta,phi,delta_over_mc,gamma_c_inv,gamma_q_inv\n",
                    0) == 0);
    std::remove(out.c_str());
}

TEST_CASE("malformed invocations exit with the input error code") {
    CHECK(run("sweep --axis sideways --grid 0:1:5 2>/dev/null") == 2);
    CHECK(run("sweep --axis theta --grid 0:1:1 2>/dev/null") == 2);
    CHECK(run("pdist --scenario /nonexistent.json --tau-b 0 --grid -5:5:11 2>/dev/null") == 2);
}

TEST_CASE("pdist over engines") {
    const std::string scenario = "/tmp/properclock_scenario_test.json";
    write_file(scenario, R"({
        "units": "natural",
        "sigma": 1.0,
        "clock_a": {"pbar": 0.08, "delta": 0.01},
        "clock_b": {"pbar": 0.0, "delta": 0.01}
    })");
    const std::string out = "/tmp/properclock_pdist_test.csv";
    CHECK(run("--out " + out + " pdist --scenario " + scenario +
              " --tau-b 0.5 --grid -4.5:5.5:21 --moments 2>/dev/null") == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("tau_a,density\n", 0) == 0);
    CHECK(csv.find("\nmean,") != std::string::npos);
    CHECK(csv.find("\nvariance,") != std::string::npos);
    CHECK(run("--out " + out + " pdist --scenario " + scenario +
              " --tau-b 0.5 --grid -4.5:5.5:21 --engine quadrature 2>/dev/null") == 0);
    // schema violation in the scenario file
    write_file(scenario, R"({"units": "natural", "sigma": 1.0, "bogus": true})");
    CHECK(run("pdist --scenario " + scenario + " --tau-b 0.5 --grid -4:4:9 2>/dev/null") == 2);
    std::remove(scenario.c_str());
    std::remove(out.c_str());
}

TEST_CASE("estimate preset emits a json report") {
    const std::string out = "/tmp/properclock_estimate_test.json";
    CHECK(run("--out " + out + " estimate --preset rb87 2>/dev/null") == 0);
    const std::string json = slurp(out);
    CHECK(json.find("gamma_q_inv") != std::string::npos);
    CHECK(json.find("required_coherence_time_s") != std::string::npos);
    std::remove(out.c_str());
}

TEST_CASE("verify negative controls fail") {
    CHECK(run("verify metrology --hook-mu-scale 2 >/dev/null 2>&1") == 1);
    CHECK(run("verify metrology >/dev/null 2>&1") == 0);
}

TEST_CASE("povm check") {
    const std::string out = "/tmp/properclock_povm_test.json";
    CHECK(run("--out " + out + " povm-check --model two-level --omega 2 2>/dev/null") == 0);
    CHECK(slurp(out).find("completeness_deviation") != std::string::npos);
    std::remove(out.c_str());
}
