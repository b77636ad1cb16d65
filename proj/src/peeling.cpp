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

#include "qsat/peeling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#include "qsat/rng.hpp"

namespace qsat {

const char* to_string(PeelAlgorithm algorithm) noexcept {
  return algorithm == PeelAlgorithm::Sunflower ? "sunflower" : "nosegay";
}

namespace {

/// Number of distinct edge pairs that share a vertex other than the center.
std::size_t count_stuck_petals(const Hypergraph& g, Vertex center,
                               const std::vector<std::uint32_t>& petals) {
  if (petals.size() < 2) return 0;
  std::vector<std::pair<Vertex, std::uint32_t>> touches;
  for (std::uint32_t e : petals)
    for (Vertex w : g.edge(e))
      if (w != center) touches.emplace_back(w, e);
  std::sort(touches.begin(), touches.end());

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < touches.size();) {
    std::size_t j = i;
    while (j < touches.size() && touches[j].first == touches[i].first) ++j;
    for (std::size_t x = i; x < j; ++x)
      for (std::size_t y = x + 1; y < j; ++y) pairs.emplace_back(touches[x].second, touches[y].second);
    i = j;
  }
  std::sort(pairs.begin(), pairs.end());
  return static_cast<std::size_t>(std::unique(pairs.begin(), pairs.end()) - pairs.begin());
}

}  // namespace

PeelTrace sunflower_peel(const Hypergraph& g, std::uint64_t seed, std::optional<std::size_t> k) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  std::size_t arity;
  if (m > 0) {
    const auto uniform = g.uniform_arity();
    if (!uniform) throw std::invalid_argument("sunflower_peel: hypergraph has mixed arities");
    if (k && *k != *uniform) throw std::invalid_argument("sunflower_peel: arity mismatch");
    arity = *uniform;
  } else {
    arity = k.value_or(3);
    if (arity < 2) throw std::invalid_argument("sunflower_peel: arity must be at least 2");
  }

  Rng rng(seed);
  std::vector<Vertex> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);

  PeelTrace trace;
  trace.algorithm = PeelAlgorithm::Sunflower;
  trace.n = n;
  trace.m = m;
  trace.k = arity;
  trace.seed = seed;
  trace.steps.reserve(n);

  const auto inc = g.incidence();
  std::vector<bool> consumed(m, false);
  std::vector<std::uint32_t> petals;
  std::size_t edges_left = m;
  std::size_t vertices_left = n;
  for (Vertex v : order) {
    petals.clear();
    for (std::uint32_t e : inc[v]) {
      if (consumed[e]) continue;
      consumed[e] = true;
      petals.push_back(e);
    }
    const std::size_t stuck = count_stuck_petals(g, v, petals);
    edges_left -= petals.size();
    --vertices_left;
    trace.anomalies += stuck;
    trace.steps.push_back(PeelStep{vertices_left, edges_left,
                                   Sunflower{static_cast<int>(petals.size()), static_cast<int>(arity)},
                                   stuck});
  }
  return trace;
}

PeelTrace nosegay_peel(const Hypergraph& g, std::uint64_t seed) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  for (std::size_t i = 0; i < m; ++i)
    if (g.arity(i) != 3) throw std::invalid_argument("nosegay_peel: hypergraph must be 3-uniform");

  PeelTrace trace;
  trace.algorithm = PeelAlgorithm::Nosegay;
  trace.n = n;
  trace.m = m;
  trace.k = 3;
  trace.seed = seed;

  // Alive edges live in `pool`; removal swaps with the back.
  std::vector<std::uint32_t> pool(m);
  std::vector<std::size_t> slot(m);
  for (std::size_t i = 0; i < m; ++i) {
    pool[i] = static_cast<std::uint32_t>(i);
    slot[i] = i;
  }
  std::vector<bool> alive(m, true);
  auto remove = [&](std::uint32_t e) {
    alive[e] = false;
    const std::size_t at = slot[e];
    const std::uint32_t last = pool.back();
    pool[at] = last;
    slot[last] = at;
    pool.pop_back();
  };

  const auto inc = g.incidence();
  Rng rng(seed);
  std::size_t vertices_left = n;
  std::vector<std::uint32_t> taken;
  while (!pool.empty()) {
    const std::uint32_t center = pool[rng.below(pool.size())];
    const auto centers = g.edge(center);
    remove(center);

    int counts[3] = {0, 0, 0};
    std::size_t anomalies = 0;
    taken.clear();
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::uint32_t e : inc[centers[i]]) {
        if (!alive[e]) continue;
        remove(e);
        taken.push_back(e);
        ++counts[i];
        const auto edge = g.edge(e);
        const auto shared = std::count_if(edge.begin(), edge.end(), [&](Vertex w) {
          return w == centers[0] || w == centers[1] || w == centers[2];
        });
        if (shared >= 2) ++anomalies;
      }
    }
    vertices_left -= 3;
    trace.anomalies += anomalies;
    trace.steps.push_back(
        PeelStep{vertices_left, pool.size(), Nosegay3{counts[0], counts[1], counts[2]}, anomalies});
  }
  return trace;
}

EmpiricalBound empirical_log_rank(const PeelTrace& trace) {
  EmpiricalBound out;
  out.step_count = trace.steps.size();
  out.anomalies = trace.anomalies;
  if (trace.n == 0) {
    out.value = std::log(2.0);
    return out;
  }

  std::map<std::string, double> cache;
  double total = 0.0;
  for (const auto& step : trace.steps) {
    const std::string key = gadget_name(step.gadget) + ':' + gadget_params(step.gadget) + ':' +
                            std::to_string(trace.k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, gadget_log_weight(step.gadget)).first;
    if (std::isinf(it->second)) {
      out.zero_rank = true;
      out.value = -std::numeric_limits<double>::infinity();
      return out;
    }
    total += it->second;
  }
  out.value = std::log(2.0) + total / static_cast<double>(trace.n);
  return out;
}

void write_trace_csv(std::ostream& out, const PeelTrace& trace) {
  out << "step,vertices_remaining,edges_remaining,gadget,params,log_weight,anomaly\n";
  std::map<std::string, double> cache;
  char buf[64];
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    const std::string params = gadget_params(step.gadget);
    auto it = cache.find(params);
    if (it == cache.end()) it = cache.emplace(params, gadget_log_weight(step.gadget)).first;
    std::snprintf(buf, sizeof buf, "%.17g", it->second);
    out << (i + 1) << ',' << step.vertices_remaining << ',' << step.edges_remaining << ','
        << gadget_name(step.gadget) << ',' << params << ',' << buf << ',' << step.anomalies << '\n';
  }
}

}  // namespace qsat
