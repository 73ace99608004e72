// Copyright 2026 The fracrev Authors.
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "fracrev/io.hpp"

namespace fracrev::cli {
namespace {

namespace fs = std::filesystem;

std::string DataPath(const std::string& name) { return std::string(FRACREV_TEST_DATA_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
  io::Json json() const { return io::Parse(out); }
};

Result Fr(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("fracrev_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(Cli, SpectrumZ2Z3) {
  const Result r = Fr({"spectrum", DataPath("z2_z3.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::vector<Int> values;
  const io::Json doc = r.json();
  for (const auto& e : doc["eigenvalues"]) values.push_back(e["value"].get<Int>());
  EXPECT_EQ(values, (std::vector<Int>{3, 0, 0, 1, -2, -2}));
  EXPECT_TRUE(r.json()["warnings"].empty());
}

TEST(Cli, SpectrumFiveCycleAndEmptySet) {
  const Result c5 = Fr({"spectrum", DataPath("cycle_5.json")});
  ASSERT_EQ(c5.code, kExitOk);
  EXPECT_FALSE(c5.json()["integral"].get<bool>());

  const Result empty = Fr({"spectrum", DataPath("empty_set.json")});
  ASSERT_EQ(empty.code, kExitOk);
  const io::Json empty_doc = empty.json();
  for (const auto& e : empty_doc["eigenvalues"]) EXPECT_EQ(e["value"].get<Int>(), 0);
  EXPECT_EQ(empty.json()["warnings"][0], "disconnected");
  EXPECT_NE(empty.err.find("disconnected"), std::string::npos);
}

TEST(Cli, SearchExitCodes) {
  const Result ex = Fr({"search", DataPath("z2_z9_units.json")});
  EXPECT_EQ(ex.code, kExitOk);
  ASSERT_EQ(ex.json()["certificates"].size(), 1u);
  EXPECT_EQ(ex.json()["certificates"][0]["kind"], "FR");

  const Result odd = Fr({"search", DataPath("odd_order.json")});
  EXPECT_EQ(odd.code, kExitNegative);
  EXPECT_TRUE(odd.json()["certificates"].empty());

  const Result q3 = Fr({"search", DataPath("hypercube_q3.json")});
  EXPECT_EQ(q3.code, kExitNegative);
  bool saw_pst = false;
  const io::Json q3_doc = q3.json();
  for (const auto& c : q3_doc["certificates"]) {
    EXPECT_NE(c["kind"], "FR");
    saw_pst = saw_pst || c["kind"] == "PST";
  }
  EXPECT_TRUE(saw_pst);
}

TEST(Cli, Check) {
  const Result yes = Fr({"check", DataPath("z2_z9_units.json"), "--a", "1,0"});
  EXPECT_EQ(yes.code, kExitOk);
  EXPECT_EQ(yes.json()["certificate"]["modulus"], 3);
  const Result bad = Fr({"check", DataPath("z2_z9_units.json"), "--a", "1,x"});
  EXPECT_EQ(bad.code, kExitParse);
  const Result not_inv = Fr({"check", DataPath("z2_z9_units.json"), "--a", "0,3"});
  EXPECT_EQ(not_inv.code, kExitNegative);
  EXPECT_TRUE(not_inv.json()["certificate"].is_null());
}

TEST(Cli, ValidationAndParseErrors) {
  EXPECT_EQ(Fr({}).code, kExitParse);
  EXPECT_EQ(Fr({"bogus"}).code, kExitParse);
  EXPECT_EQ(Fr({"spectrum", "/nonexistent.json"}).code, kExitParse);
  EXPECT_EQ(Fr({"construct", DataPath("family_ramanujan_3_1.json")}).code, kExitHypothesis);
}

TEST_F(CliFiles, ValidationExitCode) {
  const std::string asym = Write("asym.json", R"({"group": [2, 9], "set": [[0, 1]]})");
  const Result r = Fr({"spectrum", asym});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("(0,8)"), std::string::npos) << r.err;
}

TEST_F(CliFiles, ConstructSearchVerifyClosure) {
  const std::vector<std::string> families{
      R"({"variant": "RAMANUJAN_A", "p": 3, "r": 2, "H": []})",
      R"({"variant": "RAMANUJAN_A", "p": 3, "r": 1, "H": [5]})",
      R"({"variant": "MULTI_PRIME_B", "prime_powers": [[2, 2], [3, 2]]})",
      R"({"variant": "PLATEAUED_C", "H": [9], "S1": [1, 2, 4, 5, 7, 8]})",
      R"({"variant": "BENT_E", "f": "8887"})",
  };
  for (std::size_t i = 0; i < families.size(); ++i) {
    SCOPED_TRACE(families[i]);
    const std::string spec = Write("family" + std::to_string(i) + ".json", families[i]);
    const std::string graph = Path("graph" + std::to_string(i) + ".json");
    const std::string cert = Path("cert" + std::to_string(i) + ".json");
    ASSERT_EQ(Fr({"construct", spec, "--graph-out", graph, "--cert-out", cert}).code, kExitOk);
    EXPECT_EQ(Fr({"verify", graph, cert}).code, kExitOk);
    const std::string found = Path("found" + std::to_string(i) + ".json");
    ASSERT_EQ(Fr({"-o", found, "search", graph}).code, kExitOk);
    const Result v = Fr({"verify", graph, found});
    EXPECT_EQ(v.code, kExitOk) << v.out;
  }
}

TEST_F(CliFiles, TamperedCertificateFails) {
  const std::string cert = Path("cert.json");
  ASSERT_EQ(Fr({"-o", cert, "check", DataPath("z2_z9_units.json"), "--a", "1,0"}).code, kExitOk);
  EXPECT_EQ(Fr({"verify", DataPath("z2_z9_units.json"), cert}).code, kExitOk);
  io::Json doc = io::ReadFile(cert);
  doc["certificate"]["rho1"] = 0;
  const std::string tampered = Write("tampered.json", io::Dump(doc));
  const Result r = Fr({"verify", DataPath("z2_z9_units.json"), tampered});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_FALSE(r.json()["pass"].get<bool>());
}

TEST(Cli, VerifyTolerance) {
  const std::string cert = (fs::temp_directory_path() / "fracrev_cli_tol.json").string();
  ASSERT_EQ(Fr({"-o", cert, "search", DataPath("z2_z9_units.json")}).code, kExitOk);
  const Result tight = Fr({"verify", DataPath("z2_z9_units.json"), cert, "--tol", "1e-15"});
  EXPECT_LT(tight.json()["max_deviation"].get<double>(), 1e-12);
  EXPECT_EQ(Fr({"verify", DataPath("z2_z9_units.json"), cert, "--tol", "-1"}).code, kExitParse);
  fs::remove(cert);
}

TEST(Cli, Boolfn) {
  const Result r = Fr({"boolfn", "--truth-table", "8887", "--report"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.json()["class"], "BENT");
  EXPECT_EQ(r.json()["support_size"], 6);
  EXPECT_EQ(r.json()["eigenvalues"][0], 6);
  const Result x1 = Fr({"boolfn", "--truth-table", "c", "--n", "2"});
  EXPECT_EQ(x1.json()["walsh"], io::Json::array({0, 0, 4, 0}));
  EXPECT_EQ(Fr({"boolfn", "--truth-table", "zz"}).code, kExitParse);
}

TEST(Cli, Plateaued) {
  const Result r = Fr({"plateaued", DataPath("groupfn_z9_units.json"), "--p", "3"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.json()["fourier"], io::Json::array({6, 0, 0, -3, 0, 0, -3, 0, 0}));
  EXPECT_EQ(r.json()["plateaued"]["k"], 0);
  EXPECT_EQ(r.json()["plateaued"]["r"], 1);
  EXPECT_EQ(Fr({"plateaued", DataPath("groupfn_z9_units.json"), "--p", "2"}).code, kExitNegative);
}

TEST_F(CliFiles, PlateauedRejectsNonClassFunction) {
  const std::string f = Write("f.json", R"({"group": [9], "values": [0, 1, 0, 0, 0, 0, 0, 0, 0]})");
  EXPECT_EQ(Fr({"plateaued", f, "--p", "3"}).code, kExitValidation);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"search", DataPath("z2_z9_units.json")},
           {"spectrum", DataPath("cycle_5.json")},
           {"construct", DataPath("family_ramanujan_3_2.json")}}) {
    const Result a = Fr(args), b = Fr(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
  }
}

}  // namespace
}  // namespace fracrev::cli
