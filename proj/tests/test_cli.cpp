// Copyright 2026 The trinest authors
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

// End-to-end tests spawning the CLI binary: exit codes, the machine-readable
// schema (pinned by golden files), and artifact round trips.

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "trinest/bitmat.hpp"
#include "trinest/nests.hpp"
#include "trinest/triortho.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(TRINEST_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer;
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string data(const std::string& name) { return std::string(TRINEST_DATA_DIR) + "/" + name; }

std::string golden(const std::string& name) {
  std::ifstream in(std::string(TRINEST_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("check-triortho: verdicts and exit codes") {
  const RunResult tri = run_cli("check-triortho " + data("nest15.mat"));
  CHECK(tri.exit_code == 0);
  CHECK(tri.output.substr(0, 13) == "triorthogonal");

  const RunResult bad = run_cli("check-triortho " + data("notsemi.mat"));
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.substr(0, 7) == "neither");
}

TEST_CASE("machine-readable schemas match the golden files") {
  CHECK(run_cli("--format machine check-triortho " + data("nest15.mat")).output ==
        golden("check_triortho_nest15.txt"));
  CHECK(run_cli("--format machine indicator " + data("notsemi.mat")).output ==
        golden("indicator_notsemi.txt"));
  CHECK(run_cli("--format machine rm-dual --r 1 --m 4").output == golden("rm_dual_1_4.txt"));
  CHECK(run_cli("--format machine css-transversal " + data("rm15.code") + " --h " +
                data("rm15_h_x1.gate") + " --p " + data("rm15_p_ones.op"))
            .output == golden("css_check_rm15.txt"));
  CHECK(run_cli("--format machine simulate " + data("tgate.gadgets")).output ==
        golden("simulate_tgate.txt"));
  CHECK(run_cli("--format machine circ-equiv " + data("ccz_7t.circ") + " " +
                data("ccz_native.circ"))
            .output == golden("circ_equiv_ccz.txt"));
}

TEST_CASE("circ-equiv exit codes") {
  CHECK(run_cli("circ-equiv " + data("t0.circ") + " " + data("t0.circ")).exit_code == 0);
  CHECK(run_cli("circ-equiv " + data("t0.circ") + " " + data("s0.circ")).exit_code == 1);
}

TEST_CASE("rm-dual usage error for r >= m") {
  CHECK(run_cli("rm-dual --r 2 --m 2").exit_code == 2);
}

TEST_CASE("gen-nest emits a matrix whose indicator is the monomial") {
  const RunResult result = run_cli("gen-nest --monomial 011000 --vars 6");
  REQUIRE(result.exit_code == 0);
  const trinest::BitMatrix m = trinest::parse_bit_matrix(result.output);
  CHECK(trinest::indicator_polynomial(m).to_string() == "x2x3");
  CHECK(trinest::is_triorthogonal(m));
  // Degree above m-4 cannot be triorthogonal and is rejected.
  CHECK(run_cli("gen-nest --monomial 1100 --vars 4").exit_code == 2);
}

TEST_CASE("prove-identity emits a certificate that verifies") {
  const RunResult emitted = run_cli("prove-identity " + data("nest15.mat"));
  REQUIRE(emitted.exit_code == 0);
  const trinest::NestCertificate cert = trinest::parse_certificate(emitted.output);
  CHECK(trinest::verify_certificate(cert));

  const std::string cert_path = std::string(TRINEST_DATA_DIR) + "/../.cert_tmp.txt";
  {
    std::ofstream out(cert_path);
    out << emitted.output;
  }
  CHECK(run_cli("prove-identity --verify " + cert_path).exit_code == 0);
  CHECK(run_cli("prove-identity " + data("nest15.mat") + " --verify " + cert_path).exit_code == 0);
  std::remove(cert_path.c_str());

  // Non-triorthogonal input is a property failure, not a usage error.
  CHECK(run_cli("prove-identity " + data("notsemi.mat")).exit_code == 1);
}

TEST_CASE("css-transversal solve and enumerate modes") {
  const RunResult solve = run_cli("--format machine css-transversal " + data("rm15.code") +
                                  " --h " + data("rm15_h_x1.gate"));
  CHECK(solve.exit_code == 0);
  CHECK(solve.output == "n=15\nk=1\nr=4\nz_checks=10\nsolvable=true\np=111111111111111\n");

  const RunResult all = run_cli("--format machine css-transversal " + data("rm15.code") +
                                " --all");
  CHECK(all.exit_code == 0);
  CHECK(all.output.find("\ngenerators=") != std::string::npos);

  CHECK(run_cli("css-transversal " + data("rm15.code")).exit_code == 2);
  CHECK(run_cli("css-transversal " + data("rm15.code") + " --all --h " +
                data("rm15_h_x1.gate"))
            .exit_code == 2);
}

TEST_CASE("format and usage failures exit 2") {
  CHECK(run_cli("check-triortho /nonexistent.mat").exit_code == 2);
  CHECK(run_cli("check-triortho " + data("bad.mat")).exit_code == 2);
  CHECK(run_cli("unknown-subcommand").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("deterministic output: repeated runs agree byte for byte") {
  const std::string cmd = "--format machine css-transversal " + data("c832.code") + " --all";
  CHECK(run_cli(cmd).output == run_cli(cmd).output);
}
