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

// Command-line front end over the C API.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hpl/hpl.h"

namespace {

struct CliError {
  int status;
  std::string message;
};

void check(int status) {
  if (status != HPL_OK) throw CliError{status, hpl_last_error()};
}

struct GraphDeleter {
  void operator()(hpl_graph* g) const { hpl_graph_free(g); }
};
struct AugmentedDeleter {
  void operator()(hpl_augmented* h) const { hpl_augmented_free(h); }
};
struct StringDeleter {
  void operator()(char* s) const { hpl_string_free(s); }
};
using GraphPtr = std::unique_ptr<hpl_graph, GraphDeleter>;
using AugmentedPtr = std::unique_ptr<hpl_augmented, AugmentedDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

GraphPtr read_graph(const std::string& path) {
  hpl_graph* g = nullptr;
  check(hpl_graph_read(path.c_str(), &g));
  return GraphPtr(g);
}

std::size_t vertex_count(const hpl_graph* g) {
  std::size_t n = 0;
  check(hpl_graph_vertex_count(g, &n));
  return n;
}

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// "p/q", an integer, or a plain decimal such as 0.05.
Fraction parse_fraction(const std::string& text) {
  auto bad = [&] { return CliError{HPL_ERR_INVALID_ARGUMENT, "not a rational number: '" + text + "'"}; };
  try {
    std::size_t used = 0;
    if (auto slash = text.find('/'); slash != std::string::npos) {
      Fraction f{std::stoll(text.substr(0, slash), &used), std::stoll(text.substr(slash + 1))};
      if (used != slash || f.den == 0) throw bad();
      return f;
    }
    const auto dot = text.find('.');
    if (dot == std::string::npos) {
      Fraction f{std::stoll(text, &used), 1};
      if (used != text.size()) throw bad();
      return f;
    }
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const auto places = text.size() - dot - 1;
    if (places > 15) throw bad();
    Fraction f{std::stoll(digits, &used), 1};
    if (used != digits.size()) throw bad();
    for (std::size_t i = 0; i < places; ++i) f.den *= 10;
    return f;
  } catch (const std::logic_error&) {
    throw bad();
  }
}

std::string six_digits(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void write_order(const std::string& path, const std::vector<std::uint32_t>& order) {
  std::ofstream out(path);
  if (!out) throw CliError{HPL_ERR_IO, "cannot write " + path};
  for (auto v : order) out << v << "\n";
}

// -- construct ----------------------------------------------------------------

struct ConstructArgs {
  std::string kind;
  int k = 1;
  std::size_t n = 0;
  std::string eps = "1/12";
  std::string alpha = "29/50";
  std::size_t m = 1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_construct(const ConstructArgs& a) {
  hpl_graph* g = nullptr;
  if (a.kind == "extremal") {
    const auto e = parse_fraction(a.eps);
    check(hpl_construct_extremal(a.k, a.n, e.num, e.den, &g));
  } else if (a.kind == "pminus") {
    check(hpl_construct_pminus(a.k, &g));
  } else if (a.kind == "blowup") {
    check(hpl_construct_blowup(a.k, a.m, &g));
  } else {
    const auto al = parse_fraction(a.alpha);
    check(hpl_construct_dense(a.n, al.num, al.den, a.seed, &g));
  }
  GraphPtr owned(g);
  check(hpl_graph_write(g, a.out.c_str()));
  std::size_t edges = 0;
  check(hpl_graph_edge_count(g, &edges));
  std::cout << a.kind << ": n=" << vertex_count(g) << " m=" << edges << " -> " << a.out << "\n";
  return 0;
}

// -- augment ------------------------------------------------------------------

struct AugmentArgs {
  std::string input;
  std::optional<double> c;
  std::optional<double> p;
  std::uint64_t seed = 1;
  std::string out;
  std::string manifest;
};

int run_augment(const AugmentArgs& a) {
  auto g = read_graph(a.input);
  const auto n = vertex_count(g.get());
  const double p = a.p ? *a.p : std::min(1.0, *a.c / static_cast<double>(n));
  hpl_augmented* h = nullptr;
  check(hpl_augment(g.get(), p, a.seed, &h));
  AugmentedPtr owned(h);
  hpl_graph* u = nullptr;
  check(hpl_augmented_union(h, &u));
  GraphPtr uni(u);
  check(hpl_graph_write(u, a.out.c_str()));

  char* raw = nullptr;
  check(hpl_augmented_manifest(h, &raw));
  StringPtr text(raw);
  auto manifest = nlohmann::ordered_json::parse(text.get());
  manifest["input"] = a.input;
  if (a.c) manifest["C"] = *a.c;
  const auto path = a.manifest.empty() ? a.out + ".manifest.json" : a.manifest;
  std::ofstream out(path);
  if (!out) throw CliError{HPL_ERR_IO, "cannot write " + path};
  out << manifest.dump(2) << "\n";
  std::cout << "H: n=" << n << " random edges=" << manifest["random_edges"] << " -> " << a.out << " (manifest "
            << path << ")\n";
  return 0;
}

// -- search -------------------------------------------------------------------

struct SearchArgs {
  std::string input;
  int power = 1;
  std::uint64_t budget_nodes = 0;
  double budget_seconds = 0;
  std::string cert;
};

int run_search(const SearchArgs& a) {
  auto g = read_graph(a.input);
  std::vector<std::uint32_t> order(vertex_count(g.get()));
  int outcome = HPL_UNKNOWN;
  std::uint64_t nodes = 0;
  check(hpl_search_power_cycle(g.get(), a.power, a.budget_nodes, a.budget_seconds, &outcome, order.data(), &nodes));
  switch (outcome) {
    case HPL_FOUND: {
      const auto path = a.cert.empty() ? a.input + ".cert" : a.cert;
      write_order(path, order);
      std::cout << "FOUND " << path << "\n";
      break;
    }
    case HPL_ABSENT: std::cout << "ABSENT\n"; break;
    default: std::cout << "UNKNOWN\n"; break;
  }
  std::cerr << "nodes: " << nodes << "\n";
  return 0;
}

// -- pipeline -----------------------------------------------------------------

struct PipelineArgs {
  std::string input;
  int k = 1;
  double eps = 0.05;
  double c = 40;
  std::optional<double> gamma;
  std::uint64_t seed = 1;
  std::string preset = "desk";
  std::string emit_cert;
  std::string trace;
};

int run_pipeline(const PipelineArgs& a) {
  auto g = read_graph(a.input);
  const auto n = vertex_count(g.get());
  hpl_augmented* h = nullptr;
  check(hpl_augment(g.get(), std::min(1.0, a.c / static_cast<double>(n)), a.seed, &h));
  AugmentedPtr owned(h);

  hpl_pipeline_options opts;
  hpl_pipeline_options_init(&opts);
  opts.k = a.k;
  opts.eps = a.eps;
  opts.C = a.c;
  opts.seed = a.seed;
  opts.preset = a.preset.c_str();
  if (a.gamma) opts.gamma = *a.gamma;

  std::vector<std::uint32_t> order(n);
  int success = 0;
  char* raw = nullptr;
  check(hpl_pipeline_run(h, &opts, &success, order.data(), &raw));
  StringPtr text(raw);
  const auto report = nlohmann::ordered_json::parse(text.get());

  if (!a.trace.empty()) {
    std::ofstream out(a.trace);
    if (!out) throw CliError{HPL_ERR_IO, "cannot write " + a.trace};
    for (const auto& ev : report["trace"]) out << ev.dump() << "\n";
  }
  if (success) {
    if (!a.emit_cert.empty()) write_order(a.emit_cert, order);
    std::cout << "SUCCESS";
    if (!a.emit_cert.empty()) std::cout << " " << a.emit_cert;
    std::cout << "\n";
    return 0;
  }
  std::cout << "STAGE_FAILURE " << report["failed_stage"].get<std::string>() << ": "
            << report["detail"].get<std::string>() << "\n";
  return 1;
}

// -- bounds -------------------------------------------------------------------

void print_bound(double bound, double exponent, const char* variant) {
  nlohmann::ordered_json j;
  j["variant"] = variant;
  // Numbers are emitted pre-rounded to six significant digits.
  std::cout << "{\"bound\": " << six_digits(bound) << ", \"exponent\": " << six_digits(exponent)
            << ", \"variant\": " << j["variant"].dump() << "}\n";
}

// -- threshold ----------------------------------------------------------------

int run_threshold(const std::string& config, const std::string& out_dir) {
  char* raw = nullptr;
  check(hpl_experiment_run(config.c_str(), out_dir.c_str(), &raw));
  StringPtr text(raw);
  std::cout << text.get() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Powers of Hamiltonian cycles in randomly augmented graphs"};
  app.set_version_flag("--version", std::string(hpl_version()));
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Write a generated graph as an edge list");
  construct->add_option("--kind", ca.kind, "extremal | pminus | blowup | dense")
      ->required()
      ->check(CLI::IsMember({"extremal", "pminus", "blowup", "dense"}));
  construct->add_option("--k", ca.k, "Power parameter k");
  construct->add_option("--n", ca.n, "Vertex count (extremal, dense)");
  construct->add_option("--eps", ca.eps, "Marked-set density for extremal, e.g. 1/12");
  construct->add_option("--alpha", ca.alpha, "Minimum degree ratio for dense, e.g. 29/50");
  construct->add_option("--m", ca.m, "Blow-up factor");
  construct->add_option("--seed", ca.seed, "Seed for dense");
  construct->add_option("--out", ca.out, "Output edge list")->required();

  AugmentArgs aa;
  auto* augment = app.add_subcommand("augment", "Add a binomial random graph to a host graph");
  augment->add_option("--input", aa.input, "Host edge list")->required()->check(CLI::ExistingFile);
  auto* c_opt = augment->add_option("--C", aa.c, "Constant C with p = C/n");
  auto* p_opt = augment->add_option("--p", aa.p, "Edge probability");
  c_opt->excludes(p_opt);
  augment->add_option("--seed", aa.seed, "Sampling seed");
  augment->add_option("--out", aa.out, "Output edge list of H")->required();
  augment->add_option("--manifest", aa.manifest, "Manifest path (default: <out>.manifest.json)");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exact search for the r-th power of a Hamiltonian cycle");
  search->add_option("--input", sa.input, "Edge list")->required()->check(CLI::ExistingFile);
  search->add_option("--power", sa.power, "Power r")->required();
  search->add_option("--budget-nodes", sa.budget_nodes, "Node cap (0: unlimited)");
  search->add_option("--budget-seconds", sa.budget_seconds, "Time cap (0: unlimited)");
  search->add_option("--cert", sa.cert, "Certificate path (default: <input>.cert)");

  PipelineArgs pa;
  auto* pipeline = app.add_subcommand("pipeline", "Run the absorption pipeline on G plus G(n, C/n)");
  pipeline->add_option("--input", pa.input, "Host edge list")->required()->check(CLI::ExistingFile);
  pipeline->add_option("--k", pa.k, "Power parameter k");
  pipeline->add_option("--eps", pa.eps, "Degree surplus over k/(k+1)");
  pipeline->add_option("--C", pa.c, "Constant C with p = C/n");
  pipeline->add_option("--gamma", pa.gamma, "Override gamma");
  pipeline->add_option("--seed", pa.seed, "Seed for the random part and the pipeline");
  pipeline->add_option("--preset", pa.preset, "desk | formula")->check(CLI::IsMember({"desk", "formula"}));
  pipeline->add_option("--emit-cert", pa.emit_cert, "Write the certificate here on success");
  pipeline->add_option("--trace", pa.trace, "Write stage events as JSON lines");

  auto* bounds = app.add_subcommand("bounds", "Probability bound calculators");
  bounds->require_subcommand(1);
  double rho = 0, p = 0, n = 0, cf = 1, lambda = 0, delta_bar = 0, mu = 0, t = 0;
  auto* jp = bounds->add_subcommand("janson-paper", "2^(-c_F rho^2 p n^2)");
  jp->add_option("--rho", rho)->required();
  jp->add_option("--p", p)->required();
  jp->add_option("--n", n)->required();
  jp->add_option("--cf", cf, "c_F (default 1)");
  auto* jg = bounds->add_subcommand("janson-generic", "exp(-lambda + delta_bar/2)");
  jg->add_option("--lambda", lambda)->required();
  jg->add_option("--delta-bar", delta_bar)->required();
  auto* ch = bounds->add_subcommand("chernoff", "exp(-t^2 mu/2)");
  ch->add_option("--mu", mu)->required();
  ch->add_option("--t", t)->required();
  auto* ic = bounds->add_subcommand("implied-c", "2 / (c_F rho^2)");
  ic->add_option("--rho", rho)->required();
  ic->add_option("--cf", cf, "c_F (default 1)");

  std::string config, out_dir;
  auto* threshold = app.add_subcommand("threshold", "Monte Carlo grid or threshold bisection over C");
  threshold->add_option("--config", config, "key=value config file")->required()->check(CLI::ExistingFile);
  threshold->add_option("--out", out_dir, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) return run_construct(ca);
    if (*augment) {
      if (!aa.c && !aa.p) throw CliError{HPL_ERR_INVALID_ARGUMENT, "augment needs --C or --p"};
      return run_augment(aa);
    }
    if (*search) return run_search(sa);
    if (*pipeline) return run_pipeline(pa);
    if (*bounds) {
      double bound = 0, exponent = 0;
      const char* variant = "";
      if (*jp) check(hpl_bound_janson_paper(rho, p, n, cf, &bound, &exponent, &variant));
      if (*jg) check(hpl_bound_janson_generic(lambda, delta_bar, &bound, &exponent, &variant));
      if (*ch) check(hpl_bound_chernoff(mu, t, &bound, &exponent, &variant));
      if (*ic) {
        double c = 0;
        check(hpl_implied_c(cf, rho, &c));
        std::cout << "{\"C\": " << six_digits(c) << ", \"c_F\": " << six_digits(cf) << "}\n";
        return 0;
      }
      print_bound(bound, exponent, variant);
      return 0;
    }
    if (*threshold) return run_threshold(config, out_dir);
  } catch (const CliError& e) {
    std::cerr << "error (" << hpl_status_name(e.status) << "): " << e.message << "\n";
    return 2;
  }
  return 0;
}
