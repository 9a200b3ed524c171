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

#include "netdistill/protocol.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>

#include "netdistill/channels.hpp"
#include "netdistill/errors.hpp"
#include "netdistill/numeric.hpp"

namespace netdistill {

namespace {

void check_visibility(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("visibility must lie in [0, 1]");
}

std::vector<Vertex> checked_subset(const Graph& g, std::span<const Vertex> subset, Vertex center) {
  std::vector<Vertex> out(subset.begin(), subset.end());
  std::sort(out.begin(), out.end());
  if (out.size() < 2) throw InputError("V0 needs at least two vertices");
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) throw InputError("V0 repeats a vertex");
  if (!g.contains(out.back())) throw InputError("V0 vertex " + std::to_string(out.back()) + " is not in the graph");
  if (!std::binary_search(out.begin(), out.end(), center)) {
    throw InputError("centre " + std::to_string(center) + " is not in V0");
  }
  return out;
}

std::vector<Vertex> non_center_targets(const std::vector<Vertex>& subset, Vertex center) {
  std::vector<Vertex> out;
  for (Vertex v : subset) {
    if (v != center) out.push_back(v);
  }
  return out;
}

ProtocolReport run_pipeline(const SpiderDecomposition& dec, ProtocolPlan plan, const PureState& target,
                            const ProtocolOptions& options, std::string extraction) {
  const std::size_t d = options.dimension;
  const auto targets = non_center_targets(dec.subset, dec.center);
  if (target.dims() != Dims(dec.subset.size(), d)) {
    throw InputError("target state must live on |V0| factors of dimension d");
  }

  ProtocolReport report;
  report.plan = std::move(plan);
  report.p = options.p;
  report.dimension = d;
  report.uniform_legs = options.uniform_legs;
  report.extraction = std::move(extraction);
  report.stop_reason = dec.stop_reason;

  for (const auto& spider : dec.spiders) {
    std::vector<LegReport> legs;
    for (const auto& leg : spider.legs) {
      legs.push_back({leg.target, leg.path.length(), path_teleport_visibility(options.p, leg.path.length())});
    }
    std::sort(legs.begin(), legs.end(), [](const LegReport& a, const LegReport& b) { return a.target < b.target; });
    report.spiders.push_back(std::move(legs));
  }

  const double uniform_length = report.extraction == "lemma6" ? report.plan.leg_bound
                                                              : static_cast<double>(dec.leg_length_bound);
  const auto host_distances = bfs_distances(dec.host, dec.center);
  std::vector<double> factor_visibility{1.0};  // the centre keeps its half
  for (Vertex t : targets) {
    TargetReport tr;
    tr.target = t;
    tr.max_disjoint_paths = max_edge_disjoint_paths(dec.host, dec.center, t);
    std::size_t longest = 0;
    for (const auto& spider : dec.spiders) {
      for (const auto& leg : spider.legs) {
        if (leg.target != t) continue;
        ++tr.copies;
        longest = std::max(longest, leg.path.length());
      }
    }
    if (tr.copies == 0) {
      tr.fallback_copy = true;
      const Distance& dist = host_distances[t];
      tr.chunk_visibility = dist.is_finite() ? path_teleport_visibility(options.p, dist.value()) : 0.0;
      tr.distilled = {tr.chunk_visibility, 0, 0, false};
    } else {
      const double length = static_cast<double>(longest);
      tr.chunk_visibility =
          downgrade_visibility(options.p, length, options.uniform_legs ? std::max(uniform_length, length) : length);
      if (d == 2) {
        tr.distilled = distilled_visibility(tr.chunk_visibility, tr.copies);
      } else {
        tr.distilled = {tr.chunk_visibility, 0, 1, false};
      }
    }
    if (tr.max_disjoint_paths <= options.obstruction_threshold) report.necessary_condition_violated = true;
    factor_visibility.push_back(tr.distilled.visibility);
    report.targets.push_back(tr);
  }

  report.p_prime_min = 1.0;
  for (const auto& tr : report.targets) report.p_prime_min = std::min(report.p_prime_min, tr.distilled.visibility);
  if (d == 2) report.fidelity = star_teleport_fidelity(target, factor_visibility);
  return report;
}

}  // namespace

double threshold_p0(double c, std::size_t d) {
  if (!(c > 0.0 && c <= 1.0)) throw InputError("c must lie in (0, 1]");
  if (d < 2) throw InputError("dimension must be >= 2");
  const double exponent = std::exp2(5.0 / c - 1.0);
  return std::exp(-std::log(static_cast<double>(d + 1)) / exponent);
}

double downgrade_visibility(double p, double actual, double uniform) {
  check_visibility(p);
  if (!(actual >= 1.0)) throw InputError("path length must be >= 1");
  if (actual > uniform) throw InputError("actual length exceeds the uniform length");
  if (p == 1.0) return 1.0;
  return std::pow(p, std::exp2(uniform - 1.0));
}

double fidelity_from_visibility(double p) {
  check_visibility(p);
  return p + (1.0 - p) / 4.0;
}

double visibility_from_fidelity(double f) {
  if (!(f >= 0.25 && f <= 1.0)) throw InputError("isotropic qubit fidelity must lie in [1/4, 1]");
  return std::clamp((4.0 * f - 1.0) / 3.0, 0.0, 1.0);
}

double distill_recurrence_step(double f) {
  if (!(f > 0.25 && f <= 1.0)) throw InputError("recurrence needs fidelity in (1/4, 1]");
  // (F^2 + y^2) / (F^2 + 2Fy + 5y^2) with y = (1-F)/3, scaled by 9 so both
  // fixed points come out exact.
  const double g = 1.0 - f;
  return (9.0 * f * f + g * g) / (9.0 * f * f + 6.0 * f * g + 5.0 * g * g);
}

Distillation distilled_visibility(double p_chunk, std::size_t copies) {
  check_visibility(p_chunk);
  if (copies == 0) throw InputError("distillation needs at least one copy");
  if (copies == 1) return {p_chunk, 0, 1, false};
  if (p_chunk <= 1.0 / 3.0) return {p_chunk, 0, 1, true};
  // Pair copies each round; an odd leftover never catches up, so it is dropped.
  const auto rounds = static_cast<std::size_t>(std::bit_width(copies) - 1);
  double f = fidelity_from_visibility(p_chunk);
  for (std::size_t i = 0; i < rounds; ++i) f = distill_recurrence_step(f);
  return {visibility_from_fidelity(f), rounds, std::size_t{1} << rounds, false};
}

Vertex default_center(const Graph& g, std::span<const Vertex> subset) {
  if (subset.empty()) throw InputError("V0 is empty");
  Vertex best = subset.front();
  for (Vertex v : subset) {
    if (!g.contains(v)) throw InputError("V0 vertex " + std::to_string(v) + " is not in the graph");
    if (g.degree(v) > g.degree(best) || (g.degree(v) == g.degree(best) && v < best)) best = v;
  }
  return best;
}

ProtocolPlan plan_protocol(const Graph& g, std::span<const Vertex> subset, Vertex center, double p, std::size_t d) {
  check_visibility(p);
  ProtocolPlan plan;
  plan.subset = checked_subset(g, subset, center);
  plan.center = center;
  const auto stats = degree_stats(g);
  plan.order = g.order();
  plan.min_degree = stats.min_degree;
  plan.edge_connectivity = edge_connectivity(g);
  plan.c = static_cast<double>(plan.min_degree) / static_cast<double>(plan.order);
  plan.premises_hold = plan.min_degree > 1 && plan.edge_connectivity > 0;
  if (plan.c > 0.0) {
    plan.p0 = threshold_p0(plan.c, d);
    plan.leg_bound = 5.0 / plan.c;
  }
  if (plan.premises_hold) plan.budget = lemma6_guarantee(g, plan.subset).budget;
  plan.above_threshold = p > plan.p0;
  return plan;
}

ProtocolReport simulate_partial_distillation(const Graph& g, std::span<const Vertex> subset,
                                             const PureState& target, const ProtocolOptions& options) {
  const Vertex center = options.center.value_or(default_center(g, subset));
  ProtocolPlan plan = plan_protocol(g, subset, center, options.p, options.dimension);
  if (plan.premises_hold) {
    GreedyOptions greedy;
    greedy.max_spiders = options.max_spiders;
    const auto dec = extract_spiders_greedy(g, plan.subset, center, greedy);
    return run_pipeline(dec, std::move(plan), target, options, "lemma6");
  }
  const auto dec = extract_spiders(g, plan.subset, center, std::nullopt, options.max_spiders);
  return run_pipeline(dec, std::move(plan), target, options, "unchecked");
}

ProtocolReport simulate_partial_distillation(const SpiderDecomposition& dec, const PureState& target,
                                             const ProtocolOptions& options) {
  if (options.center && *options.center != dec.center) throw InputError("centre differs from the decomposition");
  const auto validation = validate_spiders(dec);
  if (!validation) throw InputError("invalid spider decomposition: " + validation.violation);
  ProtocolPlan plan = plan_protocol(dec.host, dec.subset, dec.center, options.p, options.dimension);
  return run_pipeline(dec, std::move(plan), target, options, "given");
}

double star_teleport_fidelity(const PureState& psi, std::span<const double> visibilities) {
  const Dims& dims = psi.dims();
  const std::size_t m = dims.size();
  if (visibilities.size() != m) throw InputError("one visibility per factor required");
  if (m > 20) throw CapacityError("too many factors for the subset expansion");
  for (double v : visibilities) check_visibility(v);
  const DensityOperator rho(psi);
  CompensatedSum total;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    double weight = 1.0;
    double traced_dim = 1.0;
    std::vector<std::size_t> traced;
    for (std::size_t i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        weight *= 1.0 - visibilities[i];
        traced_dim *= static_cast<double>(dims[i]);
        traced.push_back(i);
      } else {
        weight *= visibilities[i];
      }
    }
    if (weight == 0.0) continue;
    double purity = 1.0;
    if (!traced.empty() && traced.size() < m) purity = partial_trace(rho, traced).matrix().squaredNorm();
    total.add(weight * purity / traced_dim);
  }
  return std::clamp(total.value(), 0.0, 1.0);
}

void write_report(std::ostream& out, const ProtocolReport& r) {
  const auto& plan = r.plan;
  out << "[model]\n";
  out << "label = " << ProtocolReport::kModel << '\n';
  out << "dimension = " << r.dimension << '\n';
  out << "p = " << format_real(r.p) << '\n';
  out << "uniform_legs = " << (r.uniform_legs ? "true" : "false") << '\n';
  out << "\n[plan]\n";
  out << "N = " << plan.order << '\n';
  out << "min_degree = " << plan.min_degree << '\n';
  out << "edge_connectivity = " << plan.edge_connectivity << '\n';
  out << "c = " << format_real(plan.c) << '\n';
  out << "p0 = " << format_real(plan.p0) << '\n';
  out << "M_n = " << plan.budget << '\n';
  out << "leg_bound = " << format_real(plan.leg_bound) << '\n';
  out << "center = " << plan.center << '\n';
  out << "V0 =";
  for (Vertex v : plan.subset) out << ' ' << v;
  out << '\n';
  out << "premises_hold = " << (plan.premises_hold ? "true" : "false") << '\n';
  out << "above_threshold = " << (plan.above_threshold ? "true" : "false") << '\n';
  out << "\n[spiders]\n";
  out << "extraction = " << r.extraction << '\n';
  out << "found = " << r.spiders_found() << '\n';
  out << "stop_reason = " << to_string(r.stop_reason) << '\n';
  for (std::size_t s = 0; s < r.spiders.size(); ++s) {
    for (const auto& leg : r.spiders[s]) {
      out << "spider." << s << ".leg." << leg.target << " = " << leg.length << ' ' << format_real(leg.visibility)
          << '\n';
    }
  }
  out << "\n[targets]\n";
  for (const auto& t : r.targets) {
    const std::string key = "target." + std::to_string(t.target) + '.';
    out << key << "copies = " << t.copies << '\n';
    out << key << "fallback_copy = " << (t.fallback_copy ? "true" : "false") << '\n';
    out << key << "max_disjoint_paths = " << t.max_disjoint_paths << '\n';
    out << key << "chunk_visibility = " << format_real(t.chunk_visibility) << '\n';
    out << key << "rounds = " << t.distilled.rounds << '\n';
    out << key << "copies_consumed = " << t.distilled.copies_consumed << '\n';
    out << key << "below_threshold = " << (t.distilled.below_threshold ? "true" : "false") << '\n';
    out << key << "p_prime = " << format_real(t.distilled.visibility) << '\n';
  }
  out << "\n[result]\n";
  out << "p_prime_min = " << format_real(r.p_prime_min) << '\n';
  out << "fidelity = " << (r.fidelity ? format_real(*r.fidelity) : std::string("NA")) << '\n';
  out << "necessary_condition_violated = " << (r.necessary_condition_violated ? "true" : "false") << '\n';
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "graph_id,N,V0_size,p,c,p0,M_n,spiders_found,p_prime_min,fidelity\n";
  for (const auto& row : rows) {
    const auto& r = row.report;
    out << row.graph_id << ',' << r.plan.order << ',' << r.plan.subset.size() << ',' << format_real(r.p) << ','
        << format_real(r.plan.c) << ',' << format_real(r.plan.p0) << ',' << r.plan.budget << ',' << r.spiders_found()
        << ',' << format_real(r.p_prime_min) << ',' << (r.fidelity ? format_real(*r.fidelity) : std::string("NA"))
        << '\n';
  }
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kConsistent:
      return "consistent";
    case Verdict::kObstructed:
      return "obstructed";
    case Verdict::kInconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

NecessaryConditionScan necessary_condition_scan(GraphFamily family, std::span<const std::size_t> sizes, std::size_t k,
                                                std::uint64_t seed) {
  NecessaryConditionScan scan;
  scan.family = family;
  for (std::size_t size : sizes) {
    const Graph g = generate(family, {size, k, seed});
    scan.rows.push_back({size, g.order(), edge_connectivity(g), degree_stats(g).min_degree});
  }
  if (scan.rows.size() < 2) return scan;
  bool increasing = true;
  bool constant = true;
  for (std::size_t i = 1; i < scan.rows.size(); ++i) {
    increasing = increasing && scan.rows[i].edge_connectivity > scan.rows[i - 1].edge_connectivity;
    constant = constant && scan.rows[i].edge_connectivity == scan.rows[i - 1].edge_connectivity;
  }
  if (increasing) scan.verdict = Verdict::kConsistent;
  else if (constant) scan.verdict = Verdict::kObstructed;
  return scan;
}

}  // namespace netdistill
