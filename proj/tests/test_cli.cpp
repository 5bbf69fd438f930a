// Copyright 2026 The gemreason Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "gemreason/cli.hpp"
#include "gemreason/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string kData = std::string(GEMREASON_DATA_DIR) + "/";

struct Run {
  int status;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = gemreason::run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gemreason_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("validate") {
  auto r = cli({"validate", kData + "toy1.json"});
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());

  r = cli({"validate", kData + "toy1_invalid.json"});
  CHECK(r.status == 1);
  CHECK(r.out == "UNKNOWN_METABOLITE\tr1\tZ\nUNKNOWN_PROTEIN\tp9\te1\n");
  CHECK(r.err == "invalid model: 2 violation(s)\n");
}

TEST_CASE("compile to stdout and to a file") {
  auto r = cli({"compile", kData + "toy1.json", "--medium", kData + "toy1_medium.txt", "--goal",
                kData + "toy1_goal.txt"});
  REQUIRE(r.status == 0);
  const auto theory = gemreason::io::parse_theory(r.out);
  CHECK(theory.facts.size() == 5);
  CHECK(theory.rules.size() == 12);

  const auto dir = scratch("compile");
  const auto path = (dir / "t.tsv").string();
  r = cli({"compile", kData + "toy1.json", "--medium", kData + "toy1_medium.txt", "--goal",
           kData + "toy1_goal.txt", "--delete", "g1,g2", "--emit-theory", path});
  REQUIRE(r.status == 0);
  CHECK(r.out == "facts\t3\nrules\t12\nC1\t2\nC2\t3\nC3\t3\nC4\t3\nC5\t3\nC6\t1\n");
  CHECK(gemreason::io::parse_theory(slurp(path)).facts.size() == 3);
  CHECK_FALSE(fs::exists(path + ".tmp"));
}

TEST_CASE("essentiality with truth") {
  const auto r = cli({"essentiality", kData + "toy1.json", "--setup", kData + "toy1_setup.json",
                      "--truth", kData + "toy1_truth.tsv"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "gene\tessential\tmissing_goals\n"
        "g1\t1\tmet(C,cyt)\ng2\t0\t\ng3\t0\t\ng4\t0\t\n"
        "\n"
        "metric\tvalue\ntp\t1\nfp\t0\nfn\t0\ntn\t3\n"
        "precision\t1.000000\nrecall\t1.000000\nf1\t1.000000\n");
}

TEST_CASE("abduce") {
  auto r = cli({"abduce", kData + "toy1_working.json", "--setup", kData + "toy1_setup_dg2.json",
                "--schema", kData + "toy1_schema.json"});
  CHECK(r.status == 0);
  CHECK(r.out ==
        "rank\tsize\tnew_metabolites\tmml_bits\thypothesis\n"
        "1\t1\t1\t1.000000\tenz(e2)\n"
        "2\t1\t1\t1.000000\tpro(p3)->enz(e2)\n");

  r = cli({"abduce", kData + "toy1_working.json", "--setup", kData + "toy1_setup_dg2.json",
           "--schema", kData + "toy1_schema.json", "--top", "1"});
  CHECK(r.out.find("pro(p3)") == std::string::npos);

  r = cli({"abduce", kData + "toy1.json", "--setup", kData + "toy1_setup.json", "--schema",
           kData + "toy1_schema.json"});
  CHECK(r.out == "ALREADY_ENTAILED\n");
}

TEST_CASE("loop writes a parseable trace") {
  const auto dir = scratch("loop");
  const auto trace_path = (dir / "trace.json").string();
  const auto r = cli({"loop", "--hidden", kData + "toy1.json", "--working", kData + "toy1_working.json",
                      "--config", kData + "toy1_loop.json", "--trace", trace_path});
  REQUIRE(r.status == 0);
  const auto trace = gemreason::io::parse_trace(slurp(trace_path));
  CHECK(r.out.find("stop_reason\t" + trace.stop_reason + "\n") == 0);
  CHECK(r.out.find("experiments\t" + std::to_string(trace.experiments()) + "\n") != std::string::npos);
  CHECK(r.out.find("agreement\t1.000000\n") != std::string::npos);
  CHECK(trace.experiments() <= 8);
}

TEST_CASE("exit codes for usage and domain errors") {
  CHECK(cli({}).status == 2);
  CHECK(cli({"frobnicate"}).status == 2);
  CHECK(cli({"compile", kData + "toy1.json"}).status == 2);  // --goal is required
  CHECK(cli({"abduce", kData + "toy1.json", "--setup", kData + "toy1_setup.json", "--schema",
             kData + "toy1_schema.json", "--top", "x"})
            .status == 2);

  auto r = cli({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("essentiality") != std::string::npos);

  r = cli({"essentiality", kData + "missing.json", "--setup", kData + "toy1_setup.json"});
  CHECK(r.status == 1);
  CHECK(r.err.find("error: IO_ERROR") == 0);

  r = cli({"essentiality", kData + "toy1_invalid.json", "--setup", kData + "toy1_setup.json"});
  CHECK(r.status == 1);
  CHECK(r.err.find("error: VALIDATION_FAILED") == 0);

  r = cli({"essentiality", kData + "toy1.json", "--setup", kData + "toy1_truth.tsv"});
  CHECK(r.status == 1);
  CHECK(r.err.find("error: PARSE_ERROR: line 1, column 1") == 0);
}

TEST_CASE("failed write leaves no file behind") {
  const auto r = cli({"compile", kData + "toy1.json", "--goal", kData + "toy1_goal.txt",
                      "--emit-theory", "/nonexistent-dir/t.tsv"});
  CHECK(r.status == 1);
  CHECK(r.err.find("IO_ERROR") != std::string::npos);
}
