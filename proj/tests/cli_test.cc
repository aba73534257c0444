/*
 * Copyright 2026 The satmetric Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "satmetric/cli.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace satmetric::cli {
namespace {

const std::string kData = SATMETRIC_TEST_DIR "/data/";
const std::string kGolden = SATMETRIC_TEST_DIR "/golden/";

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "satmetric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Outcome o;
  o.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> rows(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> f;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, '\t')) f.push_back(field);
    out.push_back(f);
  }
  return out;
}

TEST(Evaluate, ApPrecisionGolden) {
  const Outcome o = invoke({"evaluate", "--qrels", kData + "basic.qrels",
                            "--run", kData + "basic.run", "--stopping", "ap",
                            "--satisfaction", "precision"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden + "evaluate_ap_precision.tsv"));
}

TEST(Evaluate, RbpGainGolden) {
  const Outcome o = invoke({"evaluate", "--qrels", kData + "basic.qrels",
                            "--run", kData + "basic.run", "--stopping", "rbp",
                            "--persistence", "0.5", "--satisfaction", "gain"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden + "evaluate_rbp_gain.tsv"));
}

TEST(Evaluate, EmptyRunGolden) {
  const Outcome o = invoke({"evaluate", "--qrels", kData + "basic.qrels",
                            "--run", kData + "empty.run"});
  EXPECT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden + "evaluate_empty_run.tsv"));
}

TEST(Evaluate, UndefinedTopicsFlaggedAndExcludedFromMean) {
  const Outcome o = invoke({"evaluate", "--qrels", kData + "multi.qrels",
                            "--run", kData + "multi.run"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto r = rows(o.out);
  ASSERT_EQ(r.size(), 9u);  // 8 topics + all
  double sum = 0.0;
  int defined = 0;
  for (std::size_t i = 0; i + 1 < r.size(); ++i) {
    ASSERT_EQ(r[i].size(), 4u);
    EXPECT_EQ(r[i][0], std::to_string(i + 1));
    if (r[i][0] == "5") {
      EXPECT_EQ(r[i][2], "undefined");
      continue;
    }
    sum += std::stod(r[i][2]);
    ++defined;
  }
  EXPECT_EQ(r.back()[0], "all");
  EXPECT_NEAR(std::stod(r.back()[2]), sum / defined, 1e-11);
}

TEST(Evaluate, AllUndefinedIsFailure) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string qrels = (dir / "satmetric_norel.qrels").string();
  std::ofstream(qrels) << "1 0 a 0\n";
  const Outcome o = invoke({"evaluate", "--qrels", qrels, "--run",
                            kData + "basic.run"});
  EXPECT_EQ(o.code, kExitDataFailure);
}

TEST(Evaluate, ExitStatusContract) {
  EXPECT_EQ(invoke({"evaluate", "--qrels", kData + "missing.qrels", "--run",
                    kData + "basic.run"})
                .code,
            kExitDataFailure);
  EXPECT_EQ(invoke({"evaluate", "--run", kData + "basic.run"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"evaluate", "--qrels", kData + "basic.qrels", "--run",
                    kData + "basic.run", "--stopping", "dcg"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"evaluate", "--qrels", kData + "basic.qrels", "--run",
                    kData + "basic.run", "--stopping", "rbp",
                    "--persistence", "1"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"evaluate", "--qrels", kData + "basic.qrels", "--run",
                    kData + "basic.run", "--satisfaction", "gain", "--gains",
                    "0:0,1:2"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  // Malformed data file.
  EXPECT_EQ(invoke({"evaluate", "--qrels", kData + "basic.run", "--run",
                    kData + "basic.run"})
                .code,
            kExitDataFailure);
}

TEST(Evaluate, UnjudgedErrorPolicyAborts) {
  const Outcome o =
      invoke({"evaluate", "--qrels", kData + "multi.qrels", "--run",
              kData + "multi.run", "--unjudged", "error"});
  EXPECT_EQ(o.code, kExitDataFailure);
  EXPECT_NE(o.err.find("unjudged"), std::string::npos);
}

TEST(Evaluate, JsonCarriesConfigEcho) {
  const Outcome o = invoke({"evaluate", "--qrels", kData + "basic.qrels",
                            "--run", kData + "basic.run", "--stopping", "we",
                            "--gamma", "2", "--json"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["metric"], "esat:we:precision");
  EXPECT_EQ(j["config"]["stopping"], "we");
  EXPECT_EQ(j["config"]["gamma"], 2.0);
  EXPECT_EQ(j["topics"].size(), 1u);
  EXPECT_TRUE(j["all"]["defined"].get<bool>());
}

TEST(Evaluate, ConfigFileWithFlagOverride) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string cfg = (dir / "satmetric_cfg.json").string();
  std::ofstream(cfg) << R"({"stopping": "rbp", "persistence": 0.9,
                           "satisfaction": "gain"})";
  Outcome o = invoke({"evaluate", "--qrels", kData + "basic.qrels", "--run",
                      kData + "basic.run", "--config", cfg});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NE(o.out.find("esat:rbp(0.9):gain"), std::string::npos);

  o = invoke({"evaluate", "--qrels", kData + "basic.qrels", "--run",
              kData + "basic.run", "--config", cfg, "--persistence", "0.5"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden + "evaluate_rbp_gain.tsv"));

  std::ofstream(cfg) << R"({"colour": 1})";
  EXPECT_EQ(invoke({"evaluate", "--qrels", kData + "basic.qrels", "--run",
                    kData + "basic.run", "--config", cfg})
                .code,
            kExitUsage);
}

TEST(Compare, ApInstantiation) {
  const Outcome o = invoke({"compare", "--qrels", kData + "multi.qrels",
                            "--run", kData + "multi.run", "--stopping", "ap"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  int checked = 0;
  for (const auto& r : rows(o.out)) {
    ASSERT_EQ(r.size(), 4u);
    if (r[3] == "undefined") continue;
    EXPECT_LE(std::stod(r[3]), 1e-12);
    ++checked;
  }
  EXPECT_EQ(checked, 7);
}

TEST(Compare, RbpInstantiation) {
  const Outcome o = invoke({"compare", "--qrels", kData + "multi.qrels",
                            "--run", kData + "multi.run", "--stopping", "rbp",
                            "--persistence", "0.8"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto r = rows(o.out);
  EXPECT_EQ(r.size(), 8u);
  for (const auto& row : r) EXPECT_LE(std::stod(row[3]), 1e-12);
}

TEST(Compare, WeHasNoOracle) {
  EXPECT_EQ(invoke({"compare", "--qrels", kData + "basic.qrels", "--run",
                    kData + "basic.run", "--stopping", "we"})
                .code,
            kExitUsage);
  EXPECT_EQ(invoke({"compare", "--qrels", kData + "basic.qrels", "--run",
                    kData + "basic.run", "--stopping", "ap",
                    "--satisfaction", "navigational"})
                .code,
            kExitUsage);
}

TEST(Simulate, AgreesWithClosedForm) {
  const Outcome o = invoke({"simulate", "--qrels", kData + "multi.qrels",
                            "--run", kData + "multi.run", "--stopping", "we",
                            "--trials", "100000", "--seed", "7"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  int summaries = 0;
  for (const auto& r : rows(o.out)) {
    if (r[1] != "sim") continue;
    ++summaries;
    if (r[2] == "undefined") continue;
    EXPECT_EQ(r[5], "yes") << r[0];
  }
  EXPECT_EQ(summaries, 8);
}

TEST(Simulate, SeedDeterminism) {
  const std::vector<std::string> args = {
      "simulate", "--qrels", kData + "multi.qrels", "--run",
      kData + "multi.run", "--stopping", "rbp", "--satisfaction", "gain",
      "--trials", "20000", "--seed", "123"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Simulate, SingleTrial) {
  const Outcome o = invoke({"simulate", "--qrels", kData + "basic.qrels",
                            "--run", kData + "basic.run", "--trials", "1"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto r = rows(o.out);
  ASSERT_FALSE(r.empty());
  EXPECT_EQ(r[0][1], "sim");
  EXPECT_EQ(r[0][3], "n/a");
  EXPECT_EQ(r[0][5], "n/a");
  // Histogram: three ranks plus the never-stop row.
  EXPECT_EQ(r.size(), 5u);
  EXPECT_EQ(r.back()[2], "never");
}

TEST(Simulate, ZeroTrialsIsUsageError) {
  EXPECT_EQ(invoke({"simulate", "--qrels", kData + "basic.qrels", "--run",
                    kData + "basic.run", "--trials", "0"})
                .code,
            kExitUsage);
}

}  // namespace
}  // namespace satmetric::cli
