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

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hpl/absorption.hpp"
#include "hpl/power_search.hpp"
#include "hpl/rational.hpp"

namespace hpl::experiments {

enum class Mode { pipeline, exact, pipeline_then_exact };
std::string_view to_string(Mode mode);

enum class HostKind { dense, extremal, file };

/// Flat key=value configuration. Keys mirror the field names; C_grid is a
/// comma-separated list.
struct ExperimentConfig {
  int k = 1;
  std::size_t n = 60;
  Rational alpha{29, 50};
  std::optional<double> gamma;
  std::optional<double> beta;
  std::optional<std::size_t> m;
  std::vector<double> c_grid;
  std::optional<double> c_min;
  std::optional<double> c_max;
  std::size_t trials = 100;
  double confidence = 0.95;
  Mode mode = Mode::pipeline;
  std::uint64_t seed = 1;
  HostKind host = HostKind::dense;
  std::filesystem::path host_file;
  std::string preset = "desk";
  double target = 0.9;
  double tolerance = 1.0;
  int max_steps = 8;
  SearchBudget exact_budget{5'000'000, 30};
  bool certificates = true;

  /// Throws invalid_argument when alpha <= k/(k+1) or alpha >= 1, trials
  /// is 0, exact mode is asked for n > 12, or no C values are given.
  void validate() const;
  /// ε = alpha - k/(k+1), exactly.
  Rational eps() const;
};

inline constexpr std::size_t kExactModeLimit = 12;

ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::filesystem::path& path);
/// Canonical key=value text; parse_config(serialize(c)) reproduces c.
std::string serialize(const ExperimentConfig& cfg);
/// 16 hex digits identifying the canonical text.
std::string config_hash(const ExperimentConfig& cfg);

/// Pipeline parameters for one run at augmentation constant C.
absorb::PipelineParams pipeline_params(const ExperimentConfig& cfg, double c, std::uint64_t seed);

enum class Outcome { success, stage_failure, absent, unknown };
std::string_view to_string(Outcome outcome);

struct RunRecord {
  std::string config_hash;
  std::size_t trial = 0;
  double c = 0;
  std::uint64_t sub_seed = 0;
  std::string host_id;
  Outcome outcome = Outcome::unknown;
  std::string stage;   // failing stage, or the stage that decided the outcome
  std::string detail;
  std::vector<std::pair<std::string, int>> retries;
  std::uint64_t exact_nodes = 0;
  std::string certificate;  // path relative to the output directory
  // Wall-clock values; excluded from determinism comparisons.
  double total_ms = 0;
  std::vector<std::pair<std::string, double>> stage_ms;
};

/// One trial at constant C: host from (seed, trial), G(n, min(1, C/n)), then the
/// configured mode. Never throws for stage errors; they land in the record.
/// Certificates are written below `out_dir` when given.
RunRecord run_trial(const ExperimentConfig& cfg, double c, std::size_t trial,
                    const std::optional<std::filesystem::path>& out_dir = std::nullopt);

/// JSON line with wall-clock values grouped under "timing".
std::string to_json_line(const RunRecord& record);
/// The same line with the "timing" object removed.
std::string to_json_line_without_timing(const RunRecord& record);

struct Interval {
  double lo = 0;
  double hi = 1;
};

/// Two-sided Wilson score interval for `successes` out of `n`; [0, 1] when
/// n = 0.
Interval wilson_interval(std::size_t successes, std::size_t n, double confidence);

struct PointSummary {
  double c = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::size_t unknowns = 0;
  double rate = 0;  // successes / (trials - unknowns)
  double ci_lo = 0;
  double ci_hi = 1;
  double mean_ms = 0;

  double optimistic() const;   // unknowns counted as successes
  double pessimistic() const;  // unknowns counted as failures
};

PointSummary summarize(double c, const std::vector<RunRecord>& records, double confidence);

struct BatchResult {
  std::vector<RunRecord> records;  // ordered by (C index, trial)
  std::vector<PointSummary> points;
};

/// Runs every (C, trial) pair on up to HPL_THREADS worker threads. The
/// result does not depend on the thread count.
BatchResult run_grid(const ExperimentConfig& cfg, const std::vector<double>& c_values,
                     const std::optional<std::filesystem::path>& out_dir = std::nullopt);

std::size_t worker_count();

inline constexpr const char* kSummaryHeader = "C,trials,successes,failures,unknowns,rate,ci_lo,ci_hi,mean_ms";

void write_records(const std::filesystem::path& path, const std::vector<RunRecord>& records);
void write_summary_csv(const std::filesystem::path& path, const std::vector<PointSummary>& points);
std::vector<PointSummary> read_summary_csv(const std::filesystem::path& path);
void write_curve(const std::filesystem::path& path, const std::vector<PointSummary>& points);

struct ThresholdResult {
  double c_lo = 0;
  double c_hi = 0;
  std::optional<PointSummary> at_lo;
  std::optional<PointSummary> at_hi;
  int steps = 0;
  std::vector<PointSummary> evaluated;
};

using RateEvaluator = std::function<PointSummary(double c)>;

/// Bisects [c_lo, c_hi] until its width is at most `tolerance` or
/// `max_steps` midpoints were evaluated. Throws bracket_invalid unless
/// rate(c_lo) < target <= rate(c_hi). A degenerate bracket returns at once.
ThresholdResult threshold_bisect(double c_lo, double c_hi, double target, double tolerance, int max_steps,
                                 const RateEvaluator& rate);

/// Full experiment: a grid run when C_grid is set, bisection otherwise.
/// Writes records.jsonl, summary.csv and curve.dat (and threshold.json
/// after bisection) into out_dir.
struct ExperimentOutput {
  BatchResult batch;
  std::optional<ThresholdResult> threshold;
};
ExperimentOutput run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir);

}  // namespace hpl::experiments
