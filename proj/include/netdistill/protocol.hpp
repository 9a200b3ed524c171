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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netdistill/graph.hpp"
#include "netdistill/hilbert.hpp"
#include "netdistill/spider.hpp"

namespace netdistill {

/// (d+1)^{-1/2^{5/c-1}}: above it, p^{2^{5/c-1}} > 1/(d+1).
double threshold_p0(double c, std::size_t d);

/// Visibility of a path of `actual` hops, degraded to that of `uniform` hops.
/// Lengths are real so the uniform bound 5/c can be used unrounded.
double downgrade_visibility(double p, double actual, double uniform);

double fidelity_from_visibility(double p);
double visibility_from_fidelity(double f);

/// One round of the two-copy recurrence on a qubit isotropic pair.
double distill_recurrence_step(double f);

struct Distillation {
  double visibility = 0;
  std::size_t rounds = 0;
  std::size_t copies_consumed = 0;
  /// Chunk is at or below 1/(d+1) with more than one copy: nothing to gain.
  bool below_threshold = false;
};

Distillation distilled_visibility(double p_chunk, std::size_t copies);

struct ProtocolPlan {
  std::size_t order = 0;
  std::size_t min_degree = 0;
  std::size_t edge_connectivity = 0;
  double c = 0;
  double p0 = 1;
  /// Guaranteed spider count; 0 when the extraction premises fail.
  std::size_t budget = 0;
  double leg_bound = 0;
  Vertex center{};
  std::vector<Vertex> subset;
  bool premises_hold = false;
  bool above_threshold = false;
};

ProtocolPlan plan_protocol(const Graph& g, std::span<const Vertex> subset, Vertex center, double p,
                           std::size_t d = 2);

/// Heuristic default: the V0 vertex of largest degree (smallest id on ties).
Vertex default_center(const Graph& g, std::span<const Vertex> subset);

struct ProtocolOptions {
  double p = 1;
  std::size_t dimension = 2;
  std::optional<Vertex> center;
  /// Degrade every copy to the 5/c worst case, as in the existence proof.
  bool uniform_legs = false;
  std::optional<std::size_t> max_spiders;
  /// Flag an obstruction when some pair (v0, v) has at most this many
  /// edge-disjoint paths.
  std::size_t obstruction_threshold = 1;
};

struct LegReport {
  Vertex target{};
  std::size_t length = 0;
  double visibility = 0;
};

struct TargetReport {
  Vertex target{};
  std::size_t copies = 0;
  std::size_t max_disjoint_paths = 0;
  double chunk_visibility = 0;
  /// True when no spider reached the target and one shortest-path copy in the
  /// full graph stands in.
  bool fallback_copy = false;
  Distillation distilled;
};

struct ProtocolReport {
  static constexpr const char* kModel = "recurrence model, deterministic best case";

  ProtocolPlan plan;
  double p = 0;
  std::size_t dimension = 2;
  bool uniform_legs = false;
  std::string extraction;  // "lemma6", "unchecked" or "given"
  StopReason stop_reason = StopReason::kExhausted;
  std::vector<std::vector<LegReport>> spiders;
  std::vector<TargetReport> targets;
  double p_prime_min = 0;
  std::optional<double> fidelity;  // absent for d != 2
  bool necessary_condition_violated = false;

  std::size_t spiders_found() const { return spiders.size(); }
};

/// Full pipeline on a graph. `target` lives on |V0| qubits; factor 0 is the
/// centre, the others follow in ascending vertex order.
ProtocolReport simulate_partial_distillation(const Graph& g, std::span<const Vertex> subset,
                                             const PureState& target, const ProtocolOptions& options);

/// Same, starting from a precomputed decomposition (centre taken from it).
ProtocolReport simulate_partial_distillation(const SpiderDecomposition& dec, const PureState& target,
                                             const ProtocolOptions& options);

/// F(psi, [id (x) T_{p_1} (x) ... ](psi)) by expanding over traced subsets.
/// visibilities[i] acts on factor i.
double star_teleport_fidelity(const PureState& psi, std::span<const double> visibilities);

void write_report(std::ostream& out, const ProtocolReport& r);

struct SweepRow {
  std::string graph_id;
  ProtocolReport report;
};

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

enum class Verdict { kConsistent, kObstructed, kInconclusive };
std::string to_string(Verdict v);

struct ConnectivityRow {
  std::size_t size = 0;
  std::size_t order = 0;
  std::size_t edge_connectivity = 0;
  std::size_t min_degree = 0;
};

struct NecessaryConditionScan {
  GraphFamily family{};
  std::vector<ConnectivityRow> rows;
  /// Finite-sample evidence only.
  Verdict verdict = Verdict::kInconclusive;
};

/// `sizes` are the n parameter of `generate`; k and seed are held fixed.
NecessaryConditionScan necessary_condition_scan(GraphFamily family, std::span<const std::size_t> sizes,
                                                std::size_t k = 1, std::uint64_t seed = 0);

}  // namespace netdistill
