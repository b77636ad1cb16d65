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

#include "qsat/verify.hpp"

#include <algorithm>
#include <utility>

#include "qsat/rank_oracle.hpp"

namespace qsat {

std::vector<Hypergraph> connected_multigraphs(std::size_t n, std::size_t m) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<Hypergraph> out;
  if (n == 1) {
    if (m == 0) out.emplace_back(1);
    return out;
  }
  // Non-decreasing index sequences enumerate multisets of pairs.
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    Hypergraph g(n);
    for (std::size_t i : pick) g.add_edge({pairs[i].first, pairs[i].second});
    if (n > 0 && components(g).size() == 1) out.push_back(std::move(g));

    std::size_t pos = m;
    while (pos > 0 && pick[pos - 1] + 1 == pairs.size()) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    std::fill(pick.begin() + static_cast<std::ptrdiff_t>(pos), pick.end(), pick[pos - 1]);
  }
  return out;
}

std::vector<VerifyCase> verify_gadgets(const VerifyOptions& options,
                                       const std::function<void(const VerifyCase&)>& progress) {
  std::vector<VerifyCase> cases;
  std::uint64_t stream = 0;
  auto oracle = [&](const Hypergraph& g) {
    return generic_rank_field(g, options.trials, derive_seed(options.seed, stream++)).rank;
  };
  auto check = [&](GadgetSpec spec, bool asserted) {
    const Hypergraph g = gadget_graph(spec);
    VerifyCase c{spec, g.vertex_count(), gadget_rank(spec).rank, oracle(g), asserted};
    if (progress) progress(c);
    cases.push_back(std::move(c));
  };
  const std::size_t cap = options.max_qubits;

  for (int k = 2; k <= 4; ++k)
    for (int d = 0; 1 + static_cast<std::size_t>(d * (k - 1)) <= cap; ++d) check(Sunflower{d, k}, true);

  for (int s = 0; 3 + 2 * static_cast<std::size_t>(s) <= cap; ++s)
    for (int a = 0; a <= s; ++a)
      for (int b = 0; a + b <= s; ++b) check(Nosegay3{a, b, s - a - b}, true);

  for (int s = 0; 3 + static_cast<std::size_t>(s) <= cap; ++s)
    for (int a = 0; a <= s; ++a)
      for (int b = 0; a + b <= s; ++b) check(NosegayHang{a, b, s - a - b}, true);

  for (int s = 0; 4 + 3 * static_cast<std::size_t>(s) <= cap; ++s)
    for (int a = 0; a <= s; ++a)
      for (int b = 0; a + b <= s; ++b)
        for (int c = 0; a + b + c <= s; ++c) check(NosegayK{{a, b, c, s - a - b - c}, 4}, false);

  for (std::size_t n = 1; n <= std::min<std::size_t>(4, cap); ++n)
    for (std::size_t m = n - 1; m <= 5; ++m)
      for (const auto& g : connected_multigraphs(n, m)) {
        const auto comp = components(g).front();
        VerifyCase c{K2Component{comp.vertex_count, comp.edge_count, comp.max_edge_multiplicity},
                     n, k2_rank(g), oracle(g), true};
        if (progress) progress(c);
        cases.push_back(std::move(c));
      }
  return cases;
}

}  // namespace qsat
