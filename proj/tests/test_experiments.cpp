// Copyright 2026 The hpl Authors
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

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "hpl/error.hpp"
#include "hpl/experiments.hpp"
#include "hpl/graph.hpp"

namespace hpl::experiments {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("hpl_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

ExperimentConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

TEST(Config, ParseAndRoundTrip) {
  const auto cfg = parse(
      "# grid run\n"
      "k = 1\n"
      "n=48\n"
      "alpha=0.6\n"
      "C_grid=5, 10,20.5\n"
      "trials=7   # few\n"
      "mode=pipeline-then-exact\n"
      "seed=0x10\n"
      "gamma=0.4\n");
  EXPECT_EQ(cfg.n, 48u);
  EXPECT_EQ(cfg.alpha, Rational(3, 5));
  EXPECT_EQ(cfg.eps(), Rational(1, 10));
  ASSERT_EQ(cfg.c_grid.size(), 3u);
  EXPECT_DOUBLE_EQ(cfg.c_grid[2], 20.5);
  EXPECT_EQ(cfg.trials, 7u);
  EXPECT_EQ(cfg.mode, Mode::pipeline_then_exact);
  EXPECT_EQ(cfg.seed, 16u);
  ASSERT_TRUE(cfg.gamma.has_value());

  const auto text = serialize(cfg);
  EXPECT_EQ(serialize(parse(text)), text);
  EXPECT_EQ(config_hash(parse(text)), config_hash(cfg));
  EXPECT_EQ(config_hash(cfg).size(), 16u);
  auto other = cfg;
  other.seed = 17;
  EXPECT_NE(config_hash(other), config_hash(cfg));
}

TEST(Config, ParseErrorsNameTheLine) {
  try {
    parse("k=1\nbogus=3\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::parse);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parse("trials=abc\n"), Error);
  EXPECT_THROW(parse("mode=fast\n"), Error);
}

TEST(Config, Validation) {
  auto cfg = parse("k=1\nn=60\nalpha=0.6\nC_grid=10\n");
  EXPECT_NO_THROW(cfg.validate());
  auto bad = cfg;
  bad.alpha = Rational(1, 2);
  EXPECT_THROW(bad.validate(), Error);
  bad = cfg;
  bad.trials = 0;
  EXPECT_THROW(bad.validate(), Error);
  bad = cfg;
  bad.mode = Mode::exact;
  EXPECT_THROW(bad.validate(), Error);
  bad = cfg;
  bad.c_grid.clear();
  EXPECT_THROW(bad.validate(), Error);
  bad.c_min = 1;
  bad.c_max = 200;
  EXPECT_NO_THROW(bad.validate());
}

// Independent Wilson score formula.
Interval wilson_oracle(double s, double n, double z) {
  const double ph = s / n, z2 = z * z;
  const double center = (ph + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z / (1 + z2 / n) * std::sqrt(ph * (1 - ph) / n + z2 / (4 * n * n));
  return {center - half, center + half};
}

TEST(Wilson, MatchesFormula) {
  constexpr double z95 = 1.959963984540054;
  for (auto [s, n] : {std::pair<std::size_t, std::size_t>{0, 100}, {37, 50}, {100, 100}, {1, 3}}) {
    const auto got = wilson_interval(s, n, 0.95);
    const auto want = wilson_oracle(static_cast<double>(s), static_cast<double>(n), z95);
    EXPECT_NEAR(got.lo, want.lo, 1e-9);
    EXPECT_NEAR(got.hi, want.hi, 1e-9);
  }
  EXPECT_NEAR(wilson_interval(100, 100, 0.95).hi, 1.0, 1e-12);
  EXPECT_GT(wilson_interval(0, 100, 0.95).hi, 0.0);
  const auto w100 = wilson_interval(50, 100, 0.95);
  const auto w400 = wilson_interval(200, 400, 0.95);
  EXPECT_LT(w400.hi - w400.lo, w100.hi - w100.lo);
  const auto none = wilson_interval(0, 0, 0.95);
  EXPECT_EQ(none.lo, 0.0);
  EXPECT_EQ(none.hi, 1.0);
}

TEST(Summary, CountsEveryOutcome) {
  std::vector<RunRecord> recs(10);
  for (std::size_t i = 0; i < 10; ++i) recs[i].outcome = i < 6 ? Outcome::success : Outcome::stage_failure;
  recs[9].outcome = Outcome::unknown;
  recs[8].outcome = Outcome::absent;
  const auto s = summarize(5, recs, 0.95);
  EXPECT_EQ(s.trials, 10u);
  EXPECT_EQ(s.successes, 6u);
  EXPECT_EQ(s.unknowns, 1u);
  EXPECT_EQ(s.successes + s.failures + s.unknowns, s.trials);
  EXPECT_DOUBLE_EQ(s.rate, 6.0 / 9);
  EXPECT_DOUBLE_EQ(s.optimistic(), 0.7);
  EXPECT_DOUBLE_EQ(s.pessimistic(), 0.6);
}

TEST(SummaryCsv, HeaderOnlyAndRoundTrip) {
  const auto dir = scratch("csv");
  write_summary_csv(dir / "empty.csv", {});
  EXPECT_EQ(slurp(dir / "empty.csv"), std::string(kSummaryHeader) + "\n");
  EXPECT_TRUE(read_summary_csv(dir / "empty.csv").empty());

  PointSummary p;
  p.c = 12.5;
  p.trials = 40;
  p.successes = 30;
  p.failures = 9;
  p.unknowns = 1;
  p.rate = 30.0 / 39;
  p.ci_lo = 0.61;
  p.ci_hi = 0.87;
  p.mean_ms = 3.25;
  write_summary_csv(dir / "one.csv", {p});
  std::istringstream lines(slurp(dir / "one.csv"));
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(std::count(row.begin(), row.end(), ','), 8);
  const auto back = read_summary_csv(dir / "one.csv");
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0].c, p.c);
  EXPECT_EQ(back[0].successes, 30u);
  EXPECT_EQ(back[0].rate, p.rate);
  EXPECT_EQ(back[0].mean_ms, p.mean_ms);

  std::ofstream(dir / "bad.csv") << "C,trials\n1,2\n";
  EXPECT_THROW(read_summary_csv(dir / "bad.csv"), Error);
  fs::remove_all(dir);
}

PointSummary step_rate(double c, double at) {
  PointSummary s;
  s.c = c;
  s.trials = 10;
  s.rate = c >= at ? 1.0 : 0.0;
  return s;
}

TEST(Bisection, ConvergesOnStepFunction) {
  const auto r = threshold_bisect(0, 100, 0.9, 1.0, 20, [](double c) { return step_rate(c, 37.3); });
  EXPECT_LT(r.c_lo, 37.3);
  EXPECT_GE(r.c_hi, 37.3);
  EXPECT_LE(r.c_hi - r.c_lo, 1.0);
  EXPECT_EQ(r.steps, 7);
  EXPECT_EQ(r.evaluated.size(), 9u);
}

TEST(Bisection, StepCapStopsEarly) {
  const auto r = threshold_bisect(0, 100, 0.9, 1e-6, 3, [](double c) { return step_rate(c, 37.3); });
  EXPECT_EQ(r.steps, 3);
  EXPECT_DOUBLE_EQ(r.c_hi - r.c_lo, 12.5);
}

TEST(Bisection, DegenerateAndInvalidBrackets) {
  int calls = 0;
  auto counting = [&](double c) {
    ++calls;
    return step_rate(c, 5);
  };
  const auto r = threshold_bisect(7, 7, 0.9, 1, 8, counting);
  EXPECT_EQ(r.c_lo, 7);
  EXPECT_EQ(r.c_hi, 7);
  EXPECT_EQ(calls, 0);
  for (auto [lo, hi] : {std::pair{10.0, 1.0}, {6.0, 9.0}, {0.0, 4.0}}) {
    try {
      threshold_bisect(lo, hi, 0.9, 1, 8, counting);
      FAIL() << lo << " " << hi;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::bracket_invalid);
    }
  }
}

TEST(Trial, ExactModeOnCompleteHost) {
  const auto dir = scratch("kn");
  std::ofstream(dir / "k12.txt") << [] {
    std::ostringstream ss;
    write_edge_list(ss, Graph::complete(12));
    return ss.str();
  }();
  auto cfg = parse("k=1\nn=12\nalpha=0.9\nC_grid=0\nmode=exact\ntrials=1\n");
  cfg.host = HostKind::file;
  cfg.host_file = dir / "k12.txt";
  const auto rec = run_trial(cfg, 0, 0, dir);
  EXPECT_EQ(rec.outcome, Outcome::success);
  EXPECT_EQ(rec.host_id, "file:k12.txt");
  ASSERT_FALSE(rec.certificate.empty());
  EXPECT_TRUE(fs::exists(dir / rec.certificate));
  fs::remove_all(dir);
}

TEST(Trial, ExactModeOnExtremalHostWithoutRandomEdges) {
  auto cfg = parse("k=1\nn=12\nalpha=7/12\nC_grid=0\nmode=exact\ntrials=1\nhost=extremal\n");
  const auto rec = run_trial(cfg, 0, 0);
  EXPECT_EQ(rec.outcome, Outcome::absent);
  EXPECT_TRUE(rec.certificate.empty());
  EXPECT_GT(rec.exact_nodes, 0u);
}

TEST(Trial, StageErrorsLandInTheRecord) {
  // A host whose size disagrees with n.
  const auto dir = scratch("mismatch");
  std::ofstream(dir / "g.txt") << "3 0\n";
  auto cfg = parse("k=0\nn=30\nalpha=0.6\nC_grid=10\ntrials=1\n");
  cfg.host = HostKind::file;
  cfg.host_file = dir / "g.txt";
  const auto rec = run_trial(cfg, 10, 0);
  EXPECT_EQ(rec.outcome, Outcome::stage_failure);
  EXPECT_EQ(rec.stage, "error");
  fs::remove_all(dir);
}

std::vector<std::string> stripped_lines(const BatchResult& b) {
  std::vector<std::string> out;
  for (const auto& r : b.records) out.push_back(to_json_line_without_timing(r));
  return out;
}

TEST(Grid, ReplayAndThreadCountIndependence) {
  const auto cfg = parse("k=0\nn=40\nalpha=0.55\nC_grid=10,30\ntrials=6\nseed=99\ncertificates=false\n");
  ::setenv("HPL_THREADS", "1", 1);
  const auto one = run_grid(cfg, cfg.c_grid);
  const auto again = run_grid(cfg, cfg.c_grid);
  ::setenv("HPL_THREADS", "3", 1);
  const auto three = run_grid(cfg, cfg.c_grid);
  ::unsetenv("HPL_THREADS");
  ASSERT_EQ(one.records.size(), 12u);
  EXPECT_EQ(stripped_lines(one), stripped_lines(again));
  EXPECT_EQ(stripped_lines(one), stripped_lines(three));
  for (std::size_t i = 0; i < one.records.size(); ++i) {
    EXPECT_EQ(one.records[i].trial, i % 6);
    EXPECT_EQ(one.records[i].c, i < 6 ? 10.0 : 30.0);
    EXPECT_EQ(one.records[i].sub_seed, one.records[i % 6].sub_seed);
  }
  ASSERT_EQ(one.points.size(), 2u);
  EXPECT_EQ(one.points[0].trials, 6u);
}

TEST(Grid, JsonLineTimingIsSeparable) {
  RunRecord r;
  r.config_hash = "00";
  r.total_ms = 12.5;
  r.stage_ms = {{"cover", 3.0}};
  const auto full = to_json_line(r);
  const auto bare = to_json_line_without_timing(r);
  EXPECT_NE(full.find("\"timing\""), std::string::npos);
  EXPECT_EQ(bare.find("\"timing\""), std::string::npos);
  EXPECT_EQ(full.find('\n'), std::string::npos);
}

TEST(Experiment, GridWritesArtifacts) {
  const auto dir = scratch("exp");
  const auto cfg = parse("k=0\nn=30\nalpha=0.6\nC_grid=20\ntrials=3\ncertificates=false\n");
  const auto out = run_experiment(cfg, dir);
  EXPECT_FALSE(out.threshold.has_value());
  for (const char* f : {"records.jsonl", "summary.csv", "curve.dat"}) EXPECT_TRUE(fs::exists(dir / f)) << f;
  EXPECT_FALSE(fs::exists(dir / "threshold.json"));
  const auto records = slurp(dir / "records.jsonl");
  EXPECT_EQ(std::count(records.begin(), records.end(), '\n'), 3);
  EXPECT_EQ(read_summary_csv(dir / "summary.csv").size(), 1u);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace hpl::experiments
