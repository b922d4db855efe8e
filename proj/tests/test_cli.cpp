/* Copyright 2026 the chowcal authors
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

#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "core/json_format.hpp"
#include "core/text_format.hpp"
#include "test_util.hpp"

using namespace chowcal;
using testutil::cls;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

// Run the CLI binary, capturing stdout (stderr goes to /dev/null unless
// merged).
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(CHOWCAL_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string data_file(const std::string& name) {
    return std::string(CHOWCAL_DATA_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("report on the two-planes example") {
    const RunResult r = run_cli("report " + data_file("two_planes.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.output, "fulton           : 2H + 4H^2 + 4H^3"));
    CHECK(contains(r.output, "csm              : 2H + 5H^2 + 4H^3"));
    CHECK(contains(r.output, "milnor           : 1H^2"));
    CHECK(contains(r.output, "le               : 1H^2 + 2H^3"));
    // dimension-indexed annotation alongside the canonical codim form
    CHECK(contains(r.output, "le-dims          : k=1:1 k=0:2"));
    CHECK(contains(r.output, "euler            : 4"));
    CHECK(contains(r.output, "duality-check n=3 : ok"));
}

TEST_CASE("report on the nodal cubic") {
    const RunResult r = run_cli("report " + data_file("nodal_cubic.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.output, "euler            : 1"));
    CHECK(contains(r.output, "milnor           : 1H^2"));
    CHECK(contains(r.output, "aluffi-integral  : 1"));
}

TEST_CASE("smooth models report vanishing singular classes") {
    const RunResult r = run_cli("report " + data_file("smooth_conic.json"));
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.output, "milnor           : 0"));
    CHECK(contains(r.output, "le               : 0"));
    CHECK(contains(r.output, "mu               : 0"));
    CHECK(contains(r.output, "aluffi           : 0"));
    CHECK(contains(r.output, "euler            : 2"));
}

TEST_CASE("report output is byte-stable and its JSON round-trips") {
    const std::string args = "report " + data_file("two_planes.json");
    CHECK(run_cli(args).output == run_cli(args).output);

    const RunResult j = run_cli(args + " --output-format json");
    REQUIRE(j.exit_code == 0);
    CHECK(j.output == run_cli(args + " --output-format json").output);

    const ojson doc = ojson::parse(j.output);
    CHECK(doc.at("euler").get<long long>() == 4);
    // integral of aluffi = H^2 + 2H^3 is its point-class coefficient
    CHECK(doc.at("aluffi_integral").get<long long>() == 2);
    // every emitted class re-parses identically
    CHECK(class_from_json(doc.at("classes").at("csm")) == cls({0, 2, 5, 4}));
    CHECK(class_from_json(doc.at("classes").at("milnor")) == cls({0, 0, 1, 0}));
    CHECK(class_from_json(doc.at("classes").at("le")) == cls({0, 0, 1, 2}));
    for (const auto& check : doc.at("duality_checks"))
        CHECK(check.at("ok").get<bool>());
}

TEST_CASE("the paper sign convention flips the assembled classes by (-1)^N") {
    const RunResult r = run_cli("report " + data_file("two_planes.json") +
                                " --sign-convention paper");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.output, "sign-convention  : paper"));
    CHECK(contains(r.output, "milnor-from-le   : -1H^2"));
    CHECK(contains(r.output, "le-from-milnor   : -1H^2 - 2H^3"));
    // the canonical classes themselves are unaffected by the flag
    CHECK(contains(r.output, "milnor           : 1H^2"));
}

TEST_CASE("report accepts the explicit Segre form") {
    const RunResult r = run_cli("report " + data_file("cone_explicit.json"));
    REQUIRE(r.exit_code == 0);
    // quadric cone in P^3, vertex Segre class H^3; chi drops from 4 to 3
    CHECK(contains(r.output, "milnor           : -1H^3"));
    CHECK(contains(r.output, "euler            : 3"));
}

TEST_CASE("report failures use exit code 2 with a diagnostic") {
    const RunResult missing = run_cli("report /nonexistent.json", true);
    CHECK(missing.exit_code == 2);
    CHECK(contains(missing.output, "error:"));

    const RunResult invalid =
        run_cli("report " + data_file("invalid_degree.json"), true);
    CHECK(invalid.exit_code == 2);
    CHECK(contains(invalid.output, "degree"));

    const std::string bad_path = "/tmp/chowcal_cli_bad_input.json";
    {
        std::ofstream out(bad_path);
        out << "{\n  \"ambient\": 2,\n  broken\n}\n";
    }
    const RunResult broken = run_cli("report " + bad_path, true);
    CHECK(broken.exit_code == 2);
    CHECK(contains(broken.output, "line 3"));
    std::remove(bad_path.c_str());
}

TEST_CASE("involve matches the library and round-trips") {
    const RunResult r = run_cli("involve --n 2 --twist 1 --ambient 2 1H");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "-1H - 1H^2\n");

    // applying the same involution to the output returns the input
    const RunResult back =
        run_cli("involve --n 2 --twist 1 --ambient 2 \"-1H - 1H^2\"");
    REQUIRE(back.exit_code == 0);
    CHECK(back.output == "1H\n");

    // twist 0 is the dual regardless of n
    const RunResult dual_run =
        run_cli("involve --n 7 --twist 0 \"1 + 1H + 1H^2\"");
    REQUIRE(dual_run.exit_code == 0);
    CHECK(dual_run.output == "1 - 1H + 1H^2\n");

    const RunResult json_run =
        run_cli("involve --n 2 --twist 1 --ambient 2 [0,1,0] --output-format json");
    REQUIRE(json_run.exit_code == 0);
    CHECK(json_run.output == "[0,-1,-1]\n");
}

TEST_CASE("involve rejects bad input with exit code 2") {
    CHECK(run_cli("involve --n 0 --twist 0 zzz", true).exit_code == 2);
    CHECK(run_cli("involve 1H", true).exit_code == 2);  // missing flags
    CHECK(run_cli("involve --n 0 --twist 0 --ambient 1 1H^4", true).exit_code == 2);
}

TEST_CASE("correspond emit") {
    const RunResult r = run_cli("correspond emit --ambient 1 --n 1 --twist 1");
    REQUIRE(r.exit_code == 0);
    CHECK(r.output == "x + x*y - y\n");

    const RunResult dual_corr =
        run_cli("correspond emit --ambient 2 --n 0 --twist 0");
    REQUIRE(dual_corr.exit_code == 0);
    CHECK(dual_corr.output == "x^2 - x*y + y^2\n");

    const RunResult as_json =
        run_cli("correspond emit --ambient 1 --n 0 --twist 0 --output-format json");
    REQUIRE(as_json.exit_code == 0);
    CHECK(as_json.output == "{\"ambient\":1,\"grid\":[[0,-1],[1,0]]}\n");

    const RunResult matrix =
        run_cli("correspond emit --ambient 1 --n 0 --twist 0 --matrix");
    REQUIRE(matrix.exit_code == 0);
    CHECK(matrix.output == "{\"ambient\":1,\"matrix\":[[1,0],[0,-1]]}\n");
}

TEST_CASE("correspond apply and compose") {
    const RunResult pushed = run_cli("correspond apply \"x - y\" \"3 + 4H\"");
    REQUIRE(pushed.exit_code == 0);
    CHECK(pushed.output == "3 - 4H\n");

    const RunResult pulled =
        run_cli("correspond apply --pullback \"x - y\" \"3 + 4H\"");
    REQUIRE(pulled.exit_code == 0);
    CHECK(pulled.output == "-3 + 4H\n");

    const RunResult composed = run_cli("correspond compose \"x - y\" \"x - y\"");
    REQUIRE(composed.exit_code == 0);
    CHECK(composed.output == "x + y\n");

    // a correspondence can come from a JSON file
    const std::string corr_path = "/tmp/chowcal_cli_corr.json";
    {
        std::ofstream out(corr_path);
        out << R"({"ambient":1,"grid":[[0,-1],[1,0]]})";
    }
    const RunResult from_file =
        run_cli("correspond apply " + corr_path + " \"3 + 4H\"");
    REQUIRE(from_file.exit_code == 0);
    CHECK(from_file.output == "3 - 4H\n");
    std::remove(corr_path.c_str());

    CHECK(run_cli("correspond apply \"x - q\" 1H", true).exit_code == 2);
    CHECK(run_cli("correspond compose \"x - y\" \"x^2 - x*y + y^2\"", true)
              .exit_code == 2);  // ambient mismatch
}

TEST_CASE("verify passes, is deterministic, and honours exit codes") {
    const RunResult r = run_cli("verify --seed 7 --max-dim 1");
    REQUIRE(r.exit_code == 0);
    CHECK(contains(r.output, "result: PASS"));
    CHECK(r.output == run_cli("verify --seed 7 --max-dim 1").output);

    const RunResult json_run =
        run_cli("verify --seed 7 --max-dim 1 --output-format json");
    REQUIRE(json_run.exit_code == 0);
    const ojson doc = ojson::parse(json_run.output);
    CHECK(doc.at("all_passed").get<bool>());

    const RunResult vacuous = run_cli("verify --seed 7 --max-dim 0");
    REQUIRE(vacuous.exit_code == 0);
    CHECK(contains(vacuous.output, "vacuous"));

    CHECK(run_cli("verify --max-dim 1", true).exit_code == 2);  // missing seed
    CHECK(run_cli("verify --seed 1 --max-dim 1 --mutant bogus", true).exit_code == 2);
}

TEST_CASE("verify flags an injected defect with exit code 1") {
    const RunResult r = run_cli("verify --seed 1 --max-dim 2 --mutant dual-sign");
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "FAIL"));
    CHECK(contains(r.output, "counterexample"));
}

TEST_CASE("unknown subcommands exit with code 2") {
    CHECK(run_cli("frobnicate", true).exit_code == 2);
    CHECK(run_cli("", true).exit_code == 2);
}
