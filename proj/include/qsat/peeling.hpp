// Copyright 2026 The qsat-bounds Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QSAT_PEELING_HPP_
#define QSAT_PEELING_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "qsat/gadgets.hpp"
#include "qsat/hypergraph.hpp"

namespace qsat {

enum class PeelAlgorithm { Sunflower, Nosegay };

const char* to_string(PeelAlgorithm algorithm) noexcept;

/// One gadget removed from the hypergraph; counts are taken after removal.
struct PeelStep {
  std::size_t vertices_remaining = 0;
  std::size_t edges_remaining = 0;
  GadgetSpec gadget;
  std::size_t anomalies = 0;
};

struct PeelTrace {
  PeelAlgorithm algorithm = PeelAlgorithm::Sunflower;
  std::vector<PeelStep> steps;
  std::size_t anomalies = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
};

/// Per-qubit log-rank bound accumulated from a trace, in nats.
struct EmpiricalBound {
  double value = 0.0;
  std::size_t step_count = 0;
  std::size_t anomalies = 0;
  bool zero_rank = false;  // some gadget has rank 0; value is -inf
};

/// Removes vertices in a uniformly random order; each vertex takes every edge
/// still incident to it as a (d,k)-sunflower. Anomalies count pairs of
/// gadget edges sharing a vertex besides the center. `k` is only consulted
/// for a graph without edges.
PeelTrace sunflower_peel(const Hypergraph& g, std::uint64_t seed,
                         std::optional<std::size_t> k = std::nullopt);

/// Repeatedly removes a uniformly random edge, its three vertices and every
/// edge touching them as an (a,b,c)-nosegay. An edge meeting two or more
/// centers counts once, toward the first, and is an anomaly.
PeelTrace nosegay_peel(const Hypergraph& g, std::uint64_t seed);

/// ln 2 + (1/n) * sum of gadget log-weights.
EmpiricalBound empirical_log_rank(const PeelTrace& trace);

/// Columns: step,vertices_remaining,edges_remaining,gadget,params,log_weight,anomaly
void write_trace_csv(std::ostream& out, const PeelTrace& trace);

}  // namespace qsat

#endif  // QSAT_PEELING_HPP_
