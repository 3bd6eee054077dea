// SPDX-License-Identifier: Apache-2.0
//
// groupframe: group frames with few distinct inner products
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Drives the groupframe binary through std::system and inspects its output.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "catch_amalgamated.hpp"

namespace fs = std::filesystem;
using Catch::Matchers::WithinAbs;

namespace {

struct Run {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch() {
    const fs::path dir = fs::temp_directory_path() / ("groupframe_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

Run run(const std::string& args) {
    const fs::path dir = scratch();
    const fs::path out = dir / "stdout.txt";
    const fs::path err = dir / "stderr.txt";
    const std::string cmd = std::string("\"") + GROUPFRAME_CLI + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    Run r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

// Value of key=... on the first line that starts with record=<kind>.
std::string kv(const std::string& text, const std::string& kind, const std::string& key) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("record=" + kind + " ", 0) != 0) continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok.rfind(key + "=", 0) == 0) return tok.substr(key.size() + 1);
        }
    }
    return {};
}

double kv_num(const std::string& text, const std::string& kind, const std::string& key) {
    const std::string v = kv(text, kind, key);
    REQUIRE_FALSE(v.empty());
    return std::stod(v);
}

std::string first_line(const std::string& text) { return text.substr(0, text.find('\n')); }

}  // namespace

TEST_CASE("build prime-cyclic writes a 166 x 499 file") {
    const fs::path f = scratch() / "f.frm";
    const auto r = run("build --family prime-cyclic --n 499 --m 166 --out \"" + f.string() + "\"");
    REQUIRE(r.code == 0);
    CHECK(first_line(slurp(f)) == "FRM1 166 499");
    CHECK(r.out.find("family=prime-cyclic") != std::string::npos);
    CHECK(r.out.find("generator=7") != std::string::npos);
}

TEST_CASE("build dihedral derives D from the twist") {
    const auto r = run("build --family dihedral --n 7 --twist 6 --m 3");
    REQUIRE(r.code == 0);
    CHECK(first_line(r.out) == "FRM1 6 14");
    CHECK(r.out.find("# D=2") != std::string::npos);
    CHECK(run("build --family dihedral --n 7 --twist 6 --m 3 --D 3").code == 2);
    CHECK(run("build --family dihedral --n 7 --twist 7 --m 3").code == 2);
}

TEST_CASE("build rejects invalid parameters with exit 2") {
    const auto r = run("build --family prime-cyclic --n 500 --m 166");
    CHECK(r.code == 2);
    CHECK(r.err.find("not an odd prime") != std::string::npos);
    const auto d = run("build --family prime-cyclic --n 499 --m 5");
    CHECK(d.code == 2);
    CHECK(d.err.find("does not divide") != std::string::npos);
    CHECK(run("build --family cyclic --n 7 --exponents 1,8").code == 2);
    CHECK(run("build --family nosuch --n 7 --m 3").code == 2);
    CHECK(run("build --bogus-flag").code == 2);
    CHECK(run("").code == 2);
}

TEST_CASE("build other families") {
    CHECK(first_line(run("build --family cyclic --n 10 --exponents 0,3,7").out) == "FRM1 3 10");
    CHECK(first_line(run("build --family abelian --orders 2,2 --exponents \"0,1;0,1\"").out) == "FRM1 2 4");
    CHECK(first_line(run("build --family gaussian --n 12 --m 4 --seed 9").out) == "FRM1 4 12");
    CHECK(first_line(run("build --family random-fourier --n 12 --m 4 --seed 9").out) == "FRM1 4 12");
}

TEST_CASE("builds are deterministic") {
    const auto a = run("build --family gaussian --n 40 --m 10 --seed 77");
    const auto b = run("build --family gaussian --n 40 --m 10 --seed 77");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("# prng=mt19937_64/box-muller/v1") != std::string::npos);
    CHECK(run("build --family gaussian --n 40 --m 10 --seed 78").out != a.out);
}

TEST_CASE("analyze certifies the Welch rows") {
    const auto r = run("analyze --family prime-cyclic --n 251 --m 125");
    REQUIRE(r.code == 0);
    CHECK_THAT(kv_num(r.out, "analyze", "coherence"), WithinAbs(0.0635, 5e-4));
    CHECK_THAT(kv_num(r.out, "analyze", "welch"), WithinAbs(0.0635, 5e-4));
    CHECK(kv(r.out, "analyze", "equiangular") == "true");
    CHECK(kv(r.out, "analyze", "tight") == "true");
    CHECK(kv(r.out, "analyze", "welch_achieved") == "true");
    CHECK(r.out.find("welch bound achieved") != std::string::npos);
}

TEST_CASE("analyze reports the general bound") {
    const auto r = run("analyze --family prime-cyclic --n 521 --m 130");
    REQUIRE(r.code == 0);
    CHECK_THAT(kv_num(r.out, "analyze", "coherence"), WithinAbs(0.1175, 5e-4));
    CHECK_THAT(kv_num(r.out, "analyze", "thm_bound"), WithinAbs(0.1336, 5e-5));
    CHECK(kv(r.out, "analyze", "distinct_values") == "4");
    CHECK(kv(r.out, "analyze", "welch_achieved") == "false");
}

TEST_CASE("analyze a file round trips through build") {
    const fs::path f = scratch() / "g.frm";
    REQUIRE(run("build --family prime-cyclic --n 61 --m 12 --out \"" + f.string() + "\"").code == 0);
    const auto from_file = run("analyze --in \"" + f.string() + "\"");
    const auto from_spec = run("analyze --family prime-cyclic --n 61 --m 12");
    REQUIRE(from_file.code == 0);
    CHECK_THAT(kv_num(from_file.out, "analyze", "coherence"), WithinAbs(kv_num(from_spec.out, "analyze", "coherence"), 1e-12));
    CHECK(kv(from_file.out, "analyze", "distinct_values") == kv(from_spec.out, "analyze", "distinct_values"));
    CHECK(kv(from_file.out, "analyze", "thm_bound") == kv(from_spec.out, "analyze", "thm_bound"));
}

TEST_CASE("analyze an orthonormal basis") {
    const fs::path f = scratch() / "eye.frm";
    std::ofstream(f) << "FRM1 3 3\n1:0 0:0 0:0\n0:0 1:0 0:0\n0:0 0:0 1:0\n";
    const auto r = run("analyze --in \"" + f.string() + "\"");
    REQUIRE(r.code == 0);
    CHECK(kv_num(r.out, "analyze", "coherence") == 0.0);
    CHECK(kv(r.out, "analyze", "welch") == "na");
}

TEST_CASE("analyze reports malformed files with a position") {
    const fs::path f = scratch() / "bad.frm";
    std::ofstream(f) << "FRM1 2 2\n1:0 0:0\n0:0 oops\n";
    const auto r = run("analyze --in \"" + f.string() + "\"");
    CHECK(r.code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(r.err.find("column 5") != std::string::npos);
    CHECK(run("analyze --in \"" + (scratch() / "missing.frm").string() + "\"").code == 2);
}

TEST_CASE("table1 rows") {
    const auto r = run("table1 --rows 1009:504,643:214,701:350");
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.rfind("record=table1 ", 0) != 0) continue;
        ++rows;
        CHECK(line.find("match=true") != std::string::npos);
    }
    CHECK(rows == 3);
    const auto one = run("table1 --rows 1009:504");
    CHECK_THAT(kv_num(one.out, "table1", "group"), WithinAbs(0.0325, 5e-4));
    CHECK_THAT(kv_num(one.out, "table1", "welch"), WithinAbs(0.0315, 5e-4));
    CHECK(run("table1 --rows 7:3").code == 2);
}

TEST_CASE("table1 is deterministic") {
    const auto a = run("table1 --rows 251 --seed 5 --seeds 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == run("table1 --rows 251 --seed 5 --seeds 3").out);
    CHECK(a.out.find("seed=7 ") != std::string::npos);
}

TEST_CASE("bounds rows") {
    const auto r3 = run("bounds --r 3 --m-min 166 --m-max 166");
    REQUIRE(r3.code == 0);
    CHECK_THAT(kv_num(r3.out, "bounds", "r3_upper"), WithinAbs(0.09172, 1e-5));
    CHECK_THAT(kv_num(r3.out, "bounds", "r3_asymptotic_lower"), WithinAbs(0.07761, 1e-5));

    const auto r4 = run("bounds --r 4 --m-min 175 --m-max 175");
    CHECK_THAT(kv_num(r4.out, "bounds", "modd_upper"), WithinAbs(0.08522, 1e-5));

    const auto r1 = run("bounds --r 1 --m-min 8 --m-max 8");
    CHECK_THAT(kv_num(r1.out, "bounds", "general_upper"), WithinAbs(0.125, 1e-15));

    CHECK(run("bounds --r 0").code == 2);
    CHECK(run("bounds").code == 2);
}

TEST_CASE("bounds columns decrease in m") {
    const auto r = run("bounds --r 4 --m-min 1 --m-max 60");
    REQUIRE(r.code == 0);
    std::istringstream is(r.out);
    std::string line;
    double prev_general = 1e9, prev_welch = 1e9;
    int rows = 0;
    while (std::getline(is, line)) {
        if (line.rfind("record=bounds ", 0) != 0) continue;
        const double general = kv_num(line, "bounds", "general_upper");
        const double welch = kv_num(line, "bounds", "welch");
        CHECK(general < prev_general);
        CHECK(welch < prev_welch);
        prev_general = general;
        prev_welch = welch;
        ++rows;
    }
    CHECK(rows == 60);
}

TEST_CASE("verify suites pass") {
    const auto p = run("verify --suite pairing --max-n 200");
    CHECK(p.code == 0);
    CHECK(p.out.find("suite=pairing") != std::string::npos);
    CHECK(p.out.find("result=pass") != std::string::npos);
    CHECK(run("verify --suite spectra --max-n 500").code == 0);
    CHECK(run("verify --suite dihedral --max-n 100").code == 0);
    CHECK(run("verify --suite nosuch").code == 2);
}

TEST_CASE("help exits 0") { CHECK(run("--help").code == 0); }
