// Copyright 2026 The greendoc Authors
// SPDX-License-Identifier: Apache-2.0

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "greendoc/cli.hpp"
#include "greendoc/config.hpp"

namespace greendoc {
namespace {

namespace fs = std::filesystem;

const std::string kRoot = GREENDOC_SOURCE_DIR;
const std::string kConfig = kRoot + "/data/config.json";
const std::string kInvoice = kRoot + "/fixtures/proforma_invoice.txt";
const std::string kPrompt = kRoot + "/fixtures/extraction_prompt.txt";
const std::string kLedger = kRoot + "/fixtures/ledger.json";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "greendoc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("greendoc_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string str() const { return path_.string(); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write(const std::string& path, const std::string& body) {
  std::ofstream(path, std::ios::binary) << body;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST(Cli, NoSubcommandIsInputError) { EXPECT_EQ(run({}).code, cli::kInputError); }

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "scenario-compare"));
}

TEST(Cli, ScenarioCompareToStdout) {
  const auto r = run({"scenario-compare", "--config", kConfig});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "== scenario_table.md =="));
  EXPECT_TRUE(contains(r.out, "| Energy (kWh/day) | 36.3 -- 194.7 | 6.1 -- 16.2 | 10.1 -- 20.2 |"));
  EXPECT_TRUE(contains(r.out, "| agentic vs hitl (incremental) | +24.7 -- +65.7 |"));
  EXPECT_TRUE(contains(r.out, "manual-water-lower-bound"));
}

TEST(Cli, UnknownBaseline) {
  const auto r = run({"scenario-compare", "--config", kConfig, "--baseline", "nope"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_TRUE(contains(r.err, "unknown scenario 'nope'"));
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, UnknownFormatAndProfile) {
  EXPECT_EQ(run({"scenario-compare", "--config", kConfig, "--format", "xml"}).code, cli::kInputError);
  const auto r = run({"scenario-compare", "--config", kConfig, "--profile", "nope"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_TRUE(contains(r.err, "unknown profile 'nope'"));
}

TEST(Cli, MissingConfigFile) {
  const auto r = run({"scenario-compare", "--config", kRoot + "/does/not/exist.json"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, ScenarioCompareJsonGolden) {
  TempDir dir;
  ASSERT_EQ(run({"scenario-compare", "--config", kConfig, "--format", "json", "--out", dir.str()}).code, cli::kOk);
  for (const char* name : {"scenario_table.json", "reduction_table.json"}) {
    EXPECT_EQ(read_text_file(dir.file(name)), read_text_file(kRoot + "/tests/golden/" + name)) << name;
  }
  const auto bundle = json::parse(read_text_file(dir.file("bundle.json")));
  EXPECT_EQ(bundle["metadata"]["profile"], "flash-prompt-2025");
  EXPECT_EQ(bundle["metadata"]["config_hash"].get<std::string>().size(), 64u);
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  TempDir a;
  const auto second = a.str() + "_2";
  for (const auto& d : {a.str(), second}) {
    ASSERT_EQ(run({"report-emit", "--config", kConfig, "--document", kInvoice, "--prompt", kPrompt, "--ledger",
                   kLedger, "--out", d})
                  .code,
              cli::kOk);
  }
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(a.str())) {
    ++files;
    const auto name = entry.path().filename().string();
    EXPECT_EQ(read_text_file(entry.path().string()), read_text_file(second + "/" + name)) << name;
  }
  EXPECT_EQ(files, 6u);  // three tables, plot data, bundle, deviations
  fs::remove_all(second);
}

TEST(Cli, UsecaseRunMeasuredLedger) {
  TempDir dir;
  const auto r = run({"usecase-run", "--document", kInvoice, "--prompt", kPrompt, "--ledger", kLedger, "--out",
                      dir.str()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(read_text_file(dir.file("extraction_output.json")),
            read_text_file(kRoot + "/fixtures/extraction_output.json"));
  const auto report = read_text_file(dir.file("footprint.md"));
  EXPECT_TRUE(contains(report, "Ledger: measured"));
  EXPECT_TRUE(contains(report, "| Energy (kWh) | 0.35718 |")) << report;
  EXPECT_TRUE(contains(report, "| CO2 (g) | 102.87 |")) << report;
  EXPECT_TRUE(contains(report, "| Total | 11906 | 100.0 |"));
}

TEST(Cli, UsecaseRunJsonReport) {
  TempDir dir;
  ASSERT_EQ(run({"usecase-run", "--document", kInvoice, "--prompt", kPrompt, "--ledger", kLedger, "--out",
                 dir.str(), "--format", "json"})
                .code,
            cli::kOk);
  const auto j = json::parse(read_text_file(dir.file("footprint.json")));
  EXPECT_NEAR(j["footprint"]["energy_kwh"].get<double>(), 0.35718, 1e-12);
  EXPECT_NEAR(j["footprint"]["co2_g"].get<double>(), 102.86784, 1e-9);
  EXPECT_NEAR(j["footprint"]["water_l"][0].get<double>(), 0.0642924, 1e-12);
  EXPECT_NEAR(j["footprint"]["water_l"][1].get<double>(), 0.107154, 1e-12);
  EXPECT_NEAR(j["normalized_energy_kwh"].get<double>(), 0.2070608696, 1e-9);
  EXPECT_EQ(j["items"], 15);
}

TEST(Cli, UsecaseRunEstimatedLedger) {
  TempDir dir;
  const auto r = run({"usecase-run", "--document", kInvoice, "--prompt", kPrompt, "--out", dir.str()});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto report = read_text_file(dir.file("footprint.md"));
  EXPECT_TRUE(contains(report, "Ledger: estimated"));
  EXPECT_TRUE(contains(report, "| Total | 1333 | 100.0 |")) << report;
}

TEST(Cli, UsecaseRunVerificationFailure) {
  TempDir dir;
  auto text = read_text_file(kInvoice);
  const auto pos = text.find("| 3400.00 |");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 11, "| 3400.02 |");
  write(dir.file("bad.txt"), text);
  const auto r = run({"usecase-run", "--document", dir.file("bad.txt"), "--prompt", kPrompt, "--out",
                      dir.file("out")});
  EXPECT_EQ(r.code, cli::kVerificationFailed);
  EXPECT_TRUE(contains(r.err, "verification failed for 1 item(s): ITEM 03")) << r.err;
  EXPECT_TRUE(fs::exists(dir.file("out/footprint.md")));
}

TEST(Cli, UsecaseRunGrammarError) {
  TempDir dir;
  write(dir.file("bad.txt"), "ITEM 01 | Widget | 2 | 1.00\n");
  const auto r = run({"usecase-run", "--document", dir.file("bad.txt"), "--prompt", kPrompt});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_TRUE(contains(r.err, "parser")) << r.err;
  EXPECT_TRUE(contains(r.err, "line 1")) << r.err;
}

TEST(Cli, UsecaseRunNoItemsWarns) {
  TempDir dir;
  write(dir.file("empty.txt"), "Nothing to see here.\n");
  const auto r = run({"usecase-run", "--document", dir.file("empty.txt"), "--prompt", kPrompt, "--out",
                      dir.str()});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.err, "no line items found"));
  EXPECT_EQ(read_text_file(dir.file("extraction_output.json")), "[]\n");
}

TEST(Cli, ThinkingDeltaPublishedExample) {
  const auto r = run({"thinking-delta", "18000", "10000"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "| Energy (Wh) | 4.32 | 6.72 | 2.40 |"));
  EXPECT_TRUE(contains(r.out, "| CO2 (g) | 1.24 | 1.94 | 0.69 |"));
  EXPECT_TRUE(contains(r.out, "0.43 -- 0.72"));
  EXPECT_TRUE(contains(r.out, "| 55.6 |"));
}

TEST(Cli, ThinkingDeltaZeroThinking) {
  const auto r = run({"thinking-delta", "18000", "0", "--format", "csv"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(contains(r.out, "energy_wh,4.32,4.32,0.00"));
  EXPECT_TRUE(contains(r.out, "increase_pct,,,0.0"));
}

TEST(Cli, ThinkingDeltaRejectsBadCounts) {
  EXPECT_EQ(run({"thinking-delta", "-5", "10"}).code, cli::kInputError);
  EXPECT_EQ(run({"thinking-delta", "abc", "10"}).code, cli::kInputError);
  EXPECT_EQ(run({"thinking-delta", "10", "1.5"}).code, cli::kInputError);
  EXPECT_EQ(run({"thinking-delta", "10"}).code, cli::kInputError);
}

TEST(Cli, TokensCountFiles) {
  const auto r = run({"tokens-count", kInvoice, kPrompt});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "660\t" + kInvoice + "\n271\t" + kPrompt + "\n");
}

}  // namespace
}  // namespace greendoc
