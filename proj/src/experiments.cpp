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

#include "hpl/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/math/distributions/normal.hpp>
#include <json.hpp>

#include "hpl/constructions.hpp"
#include "hpl/error.hpp"

namespace hpl::experiments {

using json = nlohmann::ordered_json;

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::pipeline: return "pipeline";
    case Mode::exact: return "exact";
    case Mode::pipeline_then_exact: return "pipeline-then-exact";
  }
  return "unknown";
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::success: return "success";
    case Outcome::stage_failure: return "stage_failure";
    case Outcome::absent: return "absent";
    case Outcome::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

/// Shortest decimal text that reads back to the same double.
std::string fmt(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::string_view host_name(HostKind h) {
  switch (h) {
    case HostKind::dense: return "dense";
    case HostKind::extremal: return "extremal";
    case HostKind::file: return "file";
  }
  return "dense";
}

}  // namespace

Rational ExperimentConfig::eps() const { return alpha - Rational(k, k + 1); }

void ExperimentConfig::validate() const {
  require(k >= 0, ErrorCode::invalid_argument, "k must be non-negative");
  require(n >= static_cast<std::size_t>(k) + 3, ErrorCode::invalid_argument, "n too small for k");
  require(alpha > Rational(k, k + 1) && alpha < 1, ErrorCode::invalid_argument,
          "alpha must lie strictly between k/(k+1) and 1, got " + hpl::to_string(alpha));
  require(trials >= 1, ErrorCode::invalid_argument, "trials must be at least 1");
  require(confidence > 0 && confidence < 1, ErrorCode::invalid_argument, "confidence must lie in (0,1)");
  require(mode != Mode::exact || n <= kExactModeLimit, ErrorCode::invalid_argument,
          "exact mode requires n <= 12, got n=" + std::to_string(n));
  require(!c_grid.empty() || (c_min && c_max), ErrorCode::invalid_argument, "need C_grid or C_min and C_max");
  for (double c : c_grid)
    require(c >= 0 && std::isfinite(c), ErrorCode::invalid_argument, "C must be finite and non-negative");
  if (c_min && c_max)
    require(*c_min >= 0 && *c_min <= *c_max && std::isfinite(*c_max), ErrorCode::invalid_argument,
            "need 0 <= C_min <= C_max");
  require(host != HostKind::file || !host_file.empty(), ErrorCode::invalid_argument, "host=file needs host_file");
}

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto text = trim(line);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    const auto where = "line " + std::to_string(lineno) + ": ";
    require(eq != std::string::npos, ErrorCode::parse, where + "expected key=value");
    const auto key = trim(std::string_view(text).substr(0, eq));
    const auto value = trim(std::string_view(text).substr(eq + 1));
    try {
      if (key == "k") cfg.k = std::stoi(value);
      else if (key == "n") cfg.n = std::stoul(value);
      else if (key == "alpha") cfg.alpha = parse_rational(value);
      else if (key == "gamma") cfg.gamma = std::stod(value);
      else if (key == "beta") cfg.beta = std::stod(value);
      else if (key == "m") cfg.m = std::stoul(value);
      else if (key == "C_grid") {
        cfg.c_grid.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) cfg.c_grid.push_back(std::stod(trim(item)));
      } else if (key == "C_min") cfg.c_min = std::stod(value);
      else if (key == "C_max") cfg.c_max = std::stod(value);
      else if (key == "trials") cfg.trials = std::stoul(value);
      else if (key == "confidence") cfg.confidence = std::stod(value);
      else if (key == "mode") {
        if (value == "pipeline") cfg.mode = Mode::pipeline;
        else if (value == "exact") cfg.mode = Mode::exact;
        else if (value == "pipeline-then-exact") cfg.mode = Mode::pipeline_then_exact;
        else fail(ErrorCode::parse, where + "unknown mode '" + value + "'");
      } else if (key == "seed") cfg.seed = std::stoull(value, nullptr, 0);
      else if (key == "host") {
        if (value == "dense") cfg.host = HostKind::dense;
        else if (value == "extremal") cfg.host = HostKind::extremal;
        else if (value == "file") cfg.host = HostKind::file;
        else fail(ErrorCode::parse, where + "unknown host '" + value + "'");
      } else if (key == "host_file") {
        cfg.host_file = value;
        cfg.host = HostKind::file;
      } else if (key == "preset") cfg.preset = value;
      else if (key == "target") cfg.target = std::stod(value);
      else if (key == "tolerance") cfg.tolerance = std::stod(value);
      else if (key == "max_steps") cfg.max_steps = std::stoi(value);
      else if (key == "exact_node_cap") cfg.exact_budget.node_cap = std::stoull(value);
      else if (key == "exact_time_cap") cfg.exact_budget.time_cap_seconds = std::stod(value);
      else if (key == "certificates") cfg.certificates = value == "true" || value == "1";
      else fail(ErrorCode::parse, where + "unknown key '" + key + "'");
    } catch (const std::logic_error&) {
      fail(ErrorCode::parse, where + "bad value '" + value + "' for " + key);
    }
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open config " + path.string());
  return parse_config(in);
}

std::string serialize(const ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "k=" << cfg.k << "\n";
  out << "n=" << cfg.n << "\n";
  out << "alpha=" << hpl::to_string(cfg.alpha) << "\n";
  if (cfg.gamma) out << "gamma=" << fmt(*cfg.gamma) << "\n";
  if (cfg.beta) out << "beta=" << fmt(*cfg.beta) << "\n";
  if (cfg.m) out << "m=" << *cfg.m << "\n";
  if (!cfg.c_grid.empty()) {
    out << "C_grid=";
    for (std::size_t i = 0; i < cfg.c_grid.size(); ++i) out << (i ? "," : "") << fmt(cfg.c_grid[i]);
    out << "\n";
  }
  if (cfg.c_min) out << "C_min=" << fmt(*cfg.c_min) << "\n";
  if (cfg.c_max) out << "C_max=" << fmt(*cfg.c_max) << "\n";
  out << "trials=" << cfg.trials << "\n";
  out << "confidence=" << fmt(cfg.confidence) << "\n";
  out << "mode=" << to_string(cfg.mode) << "\n";
  out << "seed=" << cfg.seed << "\n";
  out << "host=" << host_name(cfg.host) << "\n";
  if (cfg.host == HostKind::file) out << "host_file=" << cfg.host_file.string() << "\n";
  out << "preset=" << cfg.preset << "\n";
  out << "target=" << fmt(cfg.target) << "\n";
  out << "tolerance=" << fmt(cfg.tolerance) << "\n";
  out << "max_steps=" << cfg.max_steps << "\n";
  out << "exact_node_cap=" << cfg.exact_budget.node_cap << "\n";
  out << "exact_time_cap=" << fmt(cfg.exact_budget.time_cap_seconds) << "\n";
  out << "certificates=" << (cfg.certificates ? "true" : "false") << "\n";
  return out.str();
}

std::string config_hash(const ExperimentConfig& cfg) {
  // FNV-1a over the canonical text.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize(cfg)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return hex64(h);
}

absorb::PipelineParams pipeline_params(const ExperimentConfig& cfg, double c, std::uint64_t seed) {
  auto p = absorb::preset(cfg.preset, cfg.k, cfg.n, to_double(cfg.alpha));
  if (cfg.gamma) p.gamma = *cfg.gamma;
  if (cfg.beta) p.beta = *cfg.beta;
  if (cfg.m) p.m = *cfg.m;
  p.C = c;
  p.seed = seed;
  return p;
}

namespace {

Graph make_host(const ExperimentConfig& cfg, std::uint64_t sub, std::string& id) {
  switch (cfg.host) {
    case HostKind::dense: {
      const auto s = derive_seed(sub, 1);
      id = "dense:" + hex64(s);
      return construct::dense_host(cfg.n, cfg.alpha, s);
    }
    case HostKind::extremal: {
      construct::ExtremalSpec spec{cfg.k, cfg.n, cfg.eps()};
      id = "extremal:k=" + std::to_string(cfg.k) + ",n=" + std::to_string(cfg.n) + ",eps=" + hpl::to_string(cfg.eps());
      return construct::extremal_graph(spec);
    }
    case HostKind::file: {
      id = "file:" + cfg.host_file.filename().string();
      auto g = read_edge_list(cfg.host_file);
      require(g.vertex_count() == cfg.n, ErrorCode::size_mismatch, "host file vertex count differs from n");
      return g;
    }
  }
  fail(ErrorCode::internal, "unknown host kind");
}

std::string write_certificate(const std::filesystem::path& out_dir, double c, std::size_t trial,
                              const CycleCertificate& cert) {
  const auto rel = std::filesystem::path("certs") / ("C" + fmt(c) + "_t" + std::to_string(trial) + ".txt");
  std::filesystem::create_directories(out_dir / "certs");
  std::ofstream out(out_dir / rel);
  require(static_cast<bool>(out), ErrorCode::io, "cannot write certificate " + (out_dir / rel).string());
  for (auto v : cert.order) out << v << "\n";
  return rel.generic_string();
}

}  // namespace

RunRecord run_trial(const ExperimentConfig& cfg, double c, std::size_t trial,
                    const std::optional<std::filesystem::path>& out_dir) {
  RunRecord rec;
  rec.config_hash = config_hash(cfg);
  rec.trial = trial;
  rec.c = c;
  rec.sub_seed = derive_seed(cfg.seed, trial);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g = make_host(cfg, rec.sub_seed, rec.host_id);
    const double p = std::clamp(c / static_cast<double>(cfg.n), 0.0, 1.0);
    const augment::AugmentedGraph h(g, augment::sample_gnp(cfg.n, p, derive_seed(rec.sub_seed, 2)));
    std::optional<CycleCertificate> cert;
    bool run_exact = cfg.mode == Mode::exact;

    if (cfg.mode != Mode::exact) {
      const auto params = pipeline_params(cfg, c, derive_seed(rec.sub_seed, 3));
      auto res = absorb::assemble(h, params);
      const auto tries = res.retries();
      for (std::size_t s = 0; s < tries.size(); ++s)
        rec.retries.emplace_back(std::string(absorb::to_string(static_cast<absorb::Stage>(s))), tries[s]);
      for (const auto& e : res.trace) {
        const std::string name(absorb::to_string(e.stage));
        auto it = std::find_if(rec.stage_ms.begin(), rec.stage_ms.end(), [&](const auto& kv) { return kv.first == name; });
        if (it == rec.stage_ms.end()) rec.stage_ms.emplace_back(name, e.millis);
        else it->second += e.millis;
      }
      if (res.certificate) {
        rec.outcome = Outcome::success;
        rec.stage = "pipeline";
        cert = std::move(res.certificate);
      } else {
        rec.outcome = Outcome::stage_failure;
        rec.stage = std::string(absorb::to_string(*res.failed_stage));
        rec.detail = res.detail;
        run_exact = cfg.mode == Mode::pipeline_then_exact && cfg.n <= kExactModeLimit;
      }
    }
    if (run_exact) {
      auto found = find_power_ham_cycle(h.graph(), cfg.k + 1, cfg.exact_budget);
      rec.exact_nodes = found.nodes;
      rec.stage = "exact";
      switch (found.outcome) {
        case SearchOutcome::found:
          rec.outcome = Outcome::success;
          cert = std::move(found.certificate);
          break;
        case SearchOutcome::absent: rec.outcome = Outcome::absent; break;
        case SearchOutcome::budget_exhausted: rec.outcome = Outcome::unknown; break;
      }
    }
    if (cert) {
      require(verify_certificate(h.graph(), *cert), ErrorCode::internal, "certificate failed re-verification");
      if (out_dir && cfg.certificates) rec.certificate = write_certificate(*out_dir, c, trial, *cert);
    }
  } catch (const Error& e) {
    rec.outcome = Outcome::stage_failure;
    rec.stage = "error";
    rec.detail = std::string(to_string(e.code())) + ": " + e.what();
  }
  rec.total_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

json record_json(const RunRecord& r, bool timing) {
  json j;
  j["config_hash"] = r.config_hash;
  j["trial"] = r.trial;
  j["C"] = r.c;
  j["sub_seed"] = hex64(r.sub_seed);
  j["host_id"] = r.host_id;
  j["outcome"] = std::string(to_string(r.outcome));
  j["stage"] = r.stage;
  j["detail"] = r.detail;
  json retries = json::object();
  for (const auto& [name, count] : r.retries) retries[name] = count;
  j["retries"] = retries;
  j["exact_nodes"] = r.exact_nodes;
  j["certificate"] = r.certificate;
  if (timing) {
    json stages = json::object();
    for (const auto& [name, ms] : r.stage_ms) stages[name] = ms;
    j["timing"] = {{"total_ms", r.total_ms}, {"stages", stages}};
  }
  return j;
}

}  // namespace

std::string to_json_line(const RunRecord& record) { return record_json(record, true).dump(); }
std::string to_json_line_without_timing(const RunRecord& record) { return record_json(record, false).dump(); }

Interval wilson_interval(std::size_t successes, std::size_t n, double confidence) {
  require(successes <= n, ErrorCode::invalid_argument, "successes exceed trials");
  require(confidence > 0 && confidence < 1, ErrorCode::invalid_argument, "confidence must lie in (0,1)");
  if (n == 0) return {0, 1};
  const boost::math::normal_distribution<double> normal;
  const double z = boost::math::quantile(normal, 1 - (1 - confidence) / 2);
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double denom = 1 + z2 / nn;
  const double center = (p + z2 / (2 * nn)) / denom;
  const double half = z / denom * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn));
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

double PointSummary::optimistic() const {
  return trials ? static_cast<double>(successes + unknowns) / static_cast<double>(trials) : 0.0;
}
double PointSummary::pessimistic() const {
  return trials ? static_cast<double>(successes) / static_cast<double>(trials) : 0.0;
}

PointSummary summarize(double c, const std::vector<RunRecord>& records, double confidence) {
  PointSummary s;
  s.c = c;
  double ms = 0;
  for (const auto& r : records) {
    ++s.trials;
    ms += r.total_ms;
    if (r.outcome == Outcome::success) ++s.successes;
    else if (r.outcome == Outcome::unknown) ++s.unknowns;
    else ++s.failures;
  }
  const auto decided = s.trials - s.unknowns;
  s.rate = decided ? static_cast<double>(s.successes) / static_cast<double>(decided) : 0.0;
  const auto ci = wilson_interval(s.successes, decided, confidence);
  s.ci_lo = ci.lo;
  s.ci_hi = ci.hi;
  s.mean_ms = s.trials ? ms / static_cast<double>(s.trials) : 0.0;
  return s;
}

std::size_t worker_count() {
  if (const char* env = std::getenv("HPL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

BatchResult run_grid(const ExperimentConfig& cfg, const std::vector<double>& c_values,
                     const std::optional<std::filesystem::path>& out_dir) {
  cfg.validate();
  const std::size_t tasks = c_values.size() * cfg.trials;
  BatchResult out;
  out.records.resize(tasks);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    while (true) {
      const auto i = next.fetch_add(1);
      if (i >= tasks) return;
      try {
        out.records[i] = run_trial(cfg, c_values[i / cfg.trials], i % cfg.trials, out_dir);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const auto threads = std::min(worker_count(), std::max<std::size_t>(tasks, 1));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);

  for (std::size_t ci = 0; ci < c_values.size(); ++ci) {
    const auto first = out.records.begin() + static_cast<std::ptrdiff_t>(ci * cfg.trials);
    std::vector<RunRecord> point(first, first + static_cast<std::ptrdiff_t>(cfg.trials));
    out.points.push_back(summarize(c_values[ci], point, cfg.confidence));
  }
  return out;
}

void write_records(const std::filesystem::path& path, const std::vector<RunRecord>& records) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::io, "cannot write " + path.string());
  for (const auto& r : records) out << to_json_line(r) << "\n";
  require(static_cast<bool>(out), ErrorCode::io, "write failed for " + path.string());
}

void write_summary_csv(const std::filesystem::path& path, const std::vector<PointSummary>& points) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::io, "cannot write " + path.string());
  out << kSummaryHeader << "\n";
  for (const auto& p : points)
    out << fmt(p.c) << ',' << p.trials << ',' << p.successes << ',' << p.failures << ',' << p.unknowns << ','
        << fmt(p.rate) << ',' << fmt(p.ci_lo) << ',' << fmt(p.ci_hi) << ',' << fmt(p.mean_ms) << "\n";
  require(static_cast<bool>(out), ErrorCode::io, "write failed for " + path.string());
}

std::vector<PointSummary> read_summary_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorCode::io, "cannot open " + path.string());
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && trim(line) == kSummaryHeader, ErrorCode::parse,
          "summary header mismatch in " + path.string());
  std::vector<PointSummary> points;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    require(cells.size() == 9, ErrorCode::parse, "line " + std::to_string(lineno) + ": expected 9 columns");
    try {
      PointSummary p;
      p.c = std::stod(cells[0]);
      p.trials = std::stoul(cells[1]);
      p.successes = std::stoul(cells[2]);
      p.failures = std::stoul(cells[3]);
      p.unknowns = std::stoul(cells[4]);
      p.rate = std::stod(cells[5]);
      p.ci_lo = std::stod(cells[6]);
      p.ci_hi = std::stod(cells[7]);
      p.mean_ms = std::stod(cells[8]);
      points.push_back(p);
    } catch (const std::logic_error&) {
      fail(ErrorCode::parse, "line " + std::to_string(lineno) + ": bad number");
    }
  }
  return points;
}

void write_curve(const std::filesystem::path& path, const std::vector<PointSummary>& points) {
  std::ofstream out(path);
  require(static_cast<bool>(out), ErrorCode::io, "cannot write " + path.string());
  out << "# C rate\n";
  for (const auto& p : points) out << fmt(p.c) << ' ' << fmt(p.rate) << "\n";
}

ThresholdResult threshold_bisect(double c_lo, double c_hi, double target, double tolerance, int max_steps,
                                 const RateEvaluator& rate) {
  require(c_lo <= c_hi, ErrorCode::bracket_invalid, "C_lo exceeds C_hi");
  ThresholdResult out;
  out.c_lo = c_lo;
  out.c_hi = c_hi;
  if (c_lo == c_hi) return out;
  out.at_lo = rate(c_lo);
  out.at_hi = rate(c_hi);
  out.evaluated = {*out.at_lo, *out.at_hi};
  if (!(out.at_lo->rate < target && target <= out.at_hi->rate))
    fail(ErrorCode::bracket_invalid, "rates " + fmt(out.at_lo->rate) + " at C=" + fmt(c_lo) + " and " +
                                         fmt(out.at_hi->rate) + " at C=" + fmt(c_hi) + " do not straddle " +
                                         fmt(target));
  while (out.c_hi - out.c_lo > tolerance && out.steps < max_steps) {
    const double mid = (out.c_lo + out.c_hi) / 2;
    auto s = rate(mid);
    out.evaluated.push_back(s);
    ++out.steps;
    if (s.rate < target) {
      out.c_lo = mid;
      out.at_lo = s;
    } else {
      out.c_hi = mid;
      out.at_hi = s;
    }
  }
  return out;
}

ExperimentOutput run_experiment(const ExperimentConfig& cfg, const std::filesystem::path& out_dir) {
  cfg.validate();
  std::filesystem::create_directories(out_dir);
  ExperimentOutput out;
  if (!cfg.c_grid.empty()) {
    out.batch = run_grid(cfg, cfg.c_grid, out_dir);
  } else {
    auto eval = [&](double c) {
      auto b = run_grid(cfg, {c}, out_dir);
      out.batch.records.insert(out.batch.records.end(), b.records.begin(), b.records.end());
      return b.points.front();
    };
    out.threshold = threshold_bisect(*cfg.c_min, *cfg.c_max, cfg.target, cfg.tolerance, cfg.max_steps, eval);
    out.batch.points = out.threshold->evaluated;
    std::sort(out.batch.points.begin(), out.batch.points.end(),
              [](const PointSummary& a, const PointSummary& b) { return a.c < b.c; });
  }
  write_records(out_dir / "records.jsonl", out.batch.records);
  write_summary_csv(out_dir / "summary.csv", out.batch.points);
  write_curve(out_dir / "curve.dat", out.batch.points);
  if (out.threshold) {
    json j;
    j["C_lo"] = out.threshold->c_lo;
    j["C_hi"] = out.threshold->c_hi;
    j["target"] = cfg.target;
    j["steps"] = out.threshold->steps;
    auto point = [](const std::optional<PointSummary>& p) -> json {
      if (!p) return nullptr;
      return {{"C", p->c}, {"rate", p->rate}, {"ci_lo", p->ci_lo}, {"ci_hi", p->ci_hi}, {"trials", p->trials}};
    };
    j["at_lo"] = point(out.threshold->at_lo);
    j["at_hi"] = point(out.threshold->at_hi);
    std::ofstream f(out_dir / "threshold.json");
    require(static_cast<bool>(f), ErrorCode::io, "cannot write threshold.json");
    f << j.dump(2) << "\n";
  }
  return out;
}

}  // namespace hpl::experiments
