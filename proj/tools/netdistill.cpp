// Copyright 2026 The netdistill Authors
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

// netdistill: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "criteria.hpp"
#include "netdistill/errors.hpp"
#include "netdistill/graph.hpp"
#include "netdistill/graph_io.hpp"
#include "netdistill/numeric.hpp"
#include "netdistill/parallel.hpp"
#include "netdistill/protocol.hpp"
#include "netdistill/spectra.hpp"
#include "netdistill/spider.hpp"
#include "netdistill/version.hpp"

namespace {

using namespace netdistill;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct GraphSource {
  std::string family = "complete";
  std::size_t n = 10;
  std::size_t k = 1;
  std::string input;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--family", family, "complete, cycle, path, star, tree or grid")->capture_default_str();
    cmd->add_option("--n", n, "vertex count (grid: side length)")->capture_default_str();
    cmd->add_option("--k", k, "grid tuple length")->capture_default_str();
    cmd->add_option("--input", input, "edge-list file; overrides --family");
  }

  Graph build(std::uint64_t seed) const {
    if (!input.empty()) return read_edge_list_file(input);
    return generate(parse_graph_family(family), {n, k, seed});
  }

  std::string id() const {
    if (!input.empty()) return input;
    std::string out = family + "-n" + std::to_string(n);
    if (family == "grid") out += "-k" + std::to_string(k);
    return out;
  }

  std::string describe() const {
    if (!input.empty()) return "input=" + input;
    return "family=" + family + " n=" + std::to_string(n) + " k=" + std::to_string(k);
  }
};

struct Common {
  std::uint64_t seed = 1;
  std::string out;
  double tol = 1.0;
};

// Output goes to --out when given, stdout otherwise.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw InputError("cannot open output file " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void write_header(std::ostream& out, const std::string& command, const Common& common, const std::string& config) {
  out << "# netdistill " << kVersion << '\n';
  out << "# seed: " << common.seed << '\n';
  out << "# config: command=" << command << ' ' << config << " tol=" << format_real(common.tol) << '\n';
}

template <typename T>
std::string join(const std::vector<T>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ',';
    if constexpr (std::is_floating_point_v<T>) out << format_real(xs[i]);
    else out << xs[i];
  }
  return out.str();
}

void check_visibilities(const std::vector<double>& ps) {
  if (ps.empty()) throw InputError("at least one --p value is required");
  for (double p : ps) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("p values must lie in [0, 1]");
  }
}

// ---------------------------------------------------------------------------

int cmd_graph(const GraphSource& src, const Common& common, const std::vector<std::size_t>& sizes) {
  Sink sink(common.out);
  auto& out = sink.stream();
  std::string config = src.describe();
  if (!sizes.empty()) {
    const auto scan = necessary_condition_scan(parse_graph_family(src.family), sizes, src.k, common.seed);
    write_header(out, "graph", common, config + " sizes=" + join(sizes));
    out << "size,N,lambda,min_degree\n";
    for (const auto& row : scan.rows) {
      out << row.size << ',' << row.order << ',' << row.edge_connectivity << ',' << row.min_degree << '\n';
    }
    out << "# verdict: " << to_string(scan.verdict) << " (finite-sample evidence, not a proof)\n";
    return 0;
  }
  const Graph g = src.build(common.seed);
  const auto stats = degree_stats(g);
  write_header(out, "graph", common, config);
  out << "N,min_degree,max_degree,lambda,diam\n";
  out << g.order() << ',' << stats.min_degree << ',' << stats.max_degree << ','
      << (g.order() >= 2 ? edge_connectivity(g) : 0) << ',' << diameter(g).to_string() << '\n';
  return 0;
}

int cmd_spider(const GraphSource& src, const Common& common, const std::vector<Vertex>& subset,
               std::optional<Vertex> center, const std::string& method, std::optional<std::size_t> max_spiders) {
  const Graph g = src.build(common.seed);
  const Vertex c = center.value_or(default_center(g, subset));
  SpiderDecomposition dec;
  if (method == "greedy") {
    GreedyOptions opts;
    opts.max_spiders = max_spiders;
    dec = extract_spiders_greedy(g, subset, c, opts);
  } else if (method == "unchecked") {
    dec = extract_spiders(g, subset, c, std::nullopt, max_spiders);
  } else if (method == "grid") {
    if (src.family != "grid" || !src.input.empty()) throw InputError("--method grid needs --family grid");
    dec = grid_spiders({src.n, src.k}, subset, c);
  } else {
    throw InputError("unknown method '" + method + "' (greedy, unchecked or grid)");
  }
  const auto report = validate_spiders(dec);
  Sink sink(common.out);
  auto& out = sink.stream();
  write_header(out, "spider", common,
               src.describe() + " subset=" + join(subset) + " center=" + std::to_string(c) + " method=" + method);
  out << "# spiders: " << dec.size() << '\n';
  out << "# leg_length_bound: " << dec.leg_length_bound << '\n';
  out << "# stop_reason: " << to_string(dec.stop_reason) << '\n';
  if (method == "greedy") out << "# guaranteed: " << lemma6_guarantee(g, subset).budget << '\n';
  if (method == "grid") out << "# guaranteed: " << grid_spider_guarantee({src.n, src.k}, subset.size()) << '\n';
  out << "# valid: " << (report.ok ? "yes" : "no: " + report.violation) << '\n';
  write_spiders(out, dec);
  return report.ok ? 0 : kExitFailure;
}

int cmd_ppt_scan(const Common& common, const std::vector<double>& ps, const std::vector<std::size_t>& ws,
                 std::size_t n_min, std::size_t n_max) {
  if (ps.empty() || ws.empty()) throw InputError("need at least one --p and one --w");
  for (double p : ps) {
    if (!(p < 1.0)) throw InputError("p must be < 1 for crossover");
    if (!(p > 0.0)) throw InputError("p must be > 0");
  }
  if (n_min > n_max) throw InputError("--n-min exceeds --n-max");
  if (n_max - n_min > 100000) throw InputError("n range too large");
  // One task per (p, w); rows are concatenated in input order.
  std::vector<std::pair<double, std::size_t>> grid;
  for (double p : ps) {
    for (std::size_t w : ws) grid.emplace_back(p, w);
  }
  const auto blocks = parallel_map(grid, [&](const std::pair<double, std::size_t>& pw) {
    const std::vector<double> p1{pw.first};
    const std::vector<std::size_t> w1{pw.second};
    return ppt_scan(p1, w1, n_min, n_max);
  });
  std::vector<PptScanRow> rows;
  for (const auto& b : blocks) rows.insert(rows.end(), b.begin(), b.end());
  Sink sink(common.out);
  auto& out = sink.stream();
  write_header(out, "ppt-scan", common,
               "p=" + join(ps) + " w=" + join(ws) + " n_min=" + std::to_string(n_min) + " n_max=" + std::to_string(n_max));
  for (const auto& [p, w] : grid) out << "# n0(p=" << format_real(p) << ", w=" << w << ") = " << ppt_crossover_n0(p, w) << '\n';
  write_ppt_scan_csv(out, rows);
  return 0;
}

int cmd_protocol(const GraphSource& src, const Common& common, const std::vector<double>& ps,
                 const std::vector<Vertex>& subset, std::optional<Vertex> center, bool uniform_legs, bool sweep,
                 std::optional<std::size_t> max_spiders) {
  check_visibilities(ps);
  const Graph g = src.build(common.seed);
  for (Vertex v : subset) {
    if (!g.contains(v)) throw InputError("V0 vertex " + std::to_string(v) + " is not in the graph");
  }
  const PureState target = ghz(subset.size());
  const auto reports = parallel_map(ps, [&](double p) {
    ProtocolOptions opts;
    opts.p = p;
    opts.center = center;
    opts.uniform_legs = uniform_legs;
    opts.max_spiders = max_spiders;
    return simulate_partial_distillation(g, subset, target, opts);
  });
  Sink sink(common.out);
  auto& out = sink.stream();
  std::string config = src.describe() + " p=" + join(ps) + " subset=" + join(subset) + " target=ghz" +
                       " uniform_legs=" + (uniform_legs ? "true" : "false");
  if (center) config += " center=" + std::to_string(*center);
  write_header(out, "protocol", common, config);
  if (sweep) {
    std::vector<SweepRow> rows;
    for (const auto& r : reports) rows.push_back({src.id(), r});
    out << "# model: " << ProtocolReport::kModel << '\n';
    write_sweep_csv(out, rows);
    return 0;
  }
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out << '\n';
    out << "[graph]\nid = " << src.id() << '\n' << '\n';
    write_report(out, reports[i]);
  }
  return 0;
}

int cmd_verify(const Common& common, const std::string& filter, bool perturb) {
  acceptance::SuiteOptions opts;
  opts.filter = filter;
  opts.perturb = perturb;
  opts.seed = common.seed;
  opts.tolerance_scale = common.tol;
  bool known = filter.empty();
  for (const auto& c : acceptance::criteria()) known = known || acceptance::selected(c, filter);
  if (!known) throw InputError("--filter '" + filter + "' matches no check");
  const auto results = acceptance::run_suite(opts);
  Sink sink(common.out);
  auto& out = sink.stream();
  write_header(out, "verify", common, "filter=" + (filter.empty() ? std::string("all") : filter) +
                                          " perturb=" + (perturb ? "true" : "false"));
  acceptance::print_results(out, results);
  std::size_t passed = 0;
  for (const auto& r : results) passed += r.passed ? 1 : 0;
  out << passed << "/" << results.size() << " checks passed\n";
  return passed == results.size() ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial distillability of noisy isotropic networks: graphs, spiders, PPT scans, protocol runs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  GraphSource src;
  std::vector<Vertex> subset{0, 1, 2};
  std::optional<Vertex> center;
  std::vector<double> ps;
  std::vector<std::size_t> ws{1};
  std::vector<std::size_t> sizes;
  std::size_t n_min = 2;
  std::size_t n_max = 64;
  bool uniform_legs = false;
  bool sweep = false;
  bool perturb = false;
  std::string method = "greedy";
  std::string filter;
  std::optional<std::size_t> max_spiders;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--seed", common.seed, "seed for randomised generators and checks")->capture_default_str();
    cmd->add_option("--out", common.out, "output file (default: stdout)");
    cmd->add_option("--tol", common.tol, "scale factor applied to every verification tolerance")->capture_default_str();
  };

  auto* graph = app.add_subcommand("graph", "connectivity profile: N, min/max degree, lambda, diameter");
  src.add_options(graph);
  add_common(graph);
  graph->add_option("--sizes", sizes, "scan these sizes of --family and report a lambda verdict")->delimiter(',');

  auto* spider = app.add_subcommand("spider", "extract edge-disjoint spiders centred in V0");
  src.add_options(spider);
  add_common(spider);
  spider->add_option("--subset", subset, "V0, comma separated")->delimiter(',')->capture_default_str();
  spider->add_option("--center", center, "centre v0 in V0 (default: largest degree)");
  spider->add_option("--method", method, "greedy, unchecked or grid")->capture_default_str();
  spider->add_option("--max-spiders", max_spiders, "cap on the number of spiders");

  auto* ppt = app.add_subcommand("ppt-scan", "PPT of the teleported GHZ state over (n, p, |M|)");
  add_common(ppt);
  ppt->add_option("--p", ps, "visibilities in (0, 1), comma separated")->delimiter(',')->required();
  ppt->add_option("--w", ws, "bipartition sizes |M|, comma separated")->delimiter(',')->capture_default_str();
  ppt->add_option("--n-min", n_min, "smallest n")->capture_default_str();
  ppt->add_option("--n-max", n_max, "largest n")->capture_default_str();

  auto* protocol = app.add_subcommand("protocol", "simulate partial distillation towards a GHZ state on V0");
  src.add_options(protocol);
  add_common(protocol);
  protocol->add_option("--p", ps, "visibilities, comma separated")->delimiter(',')->required();
  protocol->add_option("--subset", subset, "V0, comma separated")->delimiter(',')->capture_default_str();
  protocol->add_option("--center", center, "centre v0 in V0 (default: largest degree)");
  protocol->add_flag("--uniform-legs", uniform_legs, "degrade every copy to the 5/c worst case");
  protocol->add_flag("--sweep", sweep, "emit one CSV row per p instead of full reports");
  protocol->add_option("--max-spiders", max_spiders, "cap on the number of spiders");

  auto* verify = app.add_subcommand("verify", "run the oracle suite");
  add_common(verify);
  verify->add_option("--filter", filter, "module name, check number or name substring");
  verify->add_flag("--perturb", perturb, "debug: bias library values so every check must fail");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*graph) return cmd_graph(src, common, sizes);
    if (*spider) return cmd_spider(src, common, subset, center, method, max_spiders);
    if (*ppt) return cmd_ppt_scan(common, ps, ws, n_min, n_max);
    if (*protocol) return cmd_protocol(src, common, ps, subset, center, uniform_legs, sweep, max_spiders);
    if (*verify) return cmd_verify(common, filter, perturb);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
