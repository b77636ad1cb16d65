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

#include "qsat/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "qsat/rng.hpp"

namespace qsat {

Hypergraph::Hypergraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

Hypergraph::Hypergraph(std::size_t vertex_count, const std::vector<std::vector<Vertex>>& edges)
    : vertex_count_(vertex_count) {
  for (const auto& e : edges) add_edge(e);
}

void Hypergraph::add_edge(std::span<const Vertex> edge) {
  if (edge.size() < 2) throw std::invalid_argument("edge arity must be at least 2");
  std::vector<Vertex> sorted(edge.begin(), edge.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("edge repeats a vertex");
  if (sorted.back() >= vertex_count_)
    throw std::invalid_argument("edge vertex " + std::to_string(sorted.back()) +
                                " out of range");
  vertices_.insert(vertices_.end(), sorted.begin(), sorted.end());
  offsets_.push_back(vertices_.size());
}

std::optional<std::size_t> Hypergraph::uniform_arity() const {
  if (edge_count() == 0) return std::nullopt;
  const std::size_t k = arity(0);
  for (std::size_t i = 1; i < edge_count(); ++i)
    if (arity(i) != k) return std::nullopt;
  return k;
}

std::vector<std::vector<std::uint32_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::uint32_t>> inc(vertex_count_);
  for (std::size_t i = 0; i < edge_count(); ++i)
    for (Vertex v : edge(i)) inc[v].push_back(static_cast<std::uint32_t>(i));
  return inc;
}

Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("random_hypergraph: k must be at least 2");
  if (n < k) throw std::invalid_argument("random_hypergraph: need n >= k");
  Rng rng(seed);
  Hypergraph g(n);
  std::vector<Vertex> e(k);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t filled = 0;
    while (filled < k) {
      const auto v = static_cast<Vertex>(rng.below(n));
      if (std::find(e.begin(), e.begin() + filled, v) == e.begin() + filled) e[filled++] = v;
    }
    g.add_edge(e);
  }
  return g;
}

namespace {

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<ComponentSummary> components(const Hypergraph& g) {
  const std::size_t n = g.vertex_count();
  DisjointSets sets(n);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (g.arity(i) != 2) throw std::invalid_argument("components: all edges must have arity 2");
    const auto e = g.edge(i);
    sets.unite(e[0], e[1]);
  }

  std::vector<std::size_t> slot(n, SIZE_MAX);
  std::vector<ComponentSummary> out;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == SIZE_MAX) {
      slot[root] = out.size();
      out.emplace_back();
    }
    ++out[slot[root]].vertex_count;
  }

  std::map<std::pair<Vertex, Vertex>, std::size_t> multiplicity;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto e = g.edge(i);
    auto& c = out[slot[sets.find(e[0])]];
    ++c.edge_count;
    const std::size_t mult = ++multiplicity[{e[0], e[1]}];
    c.max_edge_multiplicity = std::max(c.max_edge_multiplicity, mult);
  }
  return out;
}

Hypergraph attach(const Hypergraph& g, const Hypergraph& h, std::span<const Vertex> embedding) {
  if (embedding.size() != h.vertex_count())
    throw std::invalid_argument("attach: embedding must map every vertex of h");
  std::vector<bool> used(g.vertex_count(), false);
  for (Vertex image : embedding) {
    if (image >= g.vertex_count()) throw std::invalid_argument("attach: image out of range");
    if (used[image]) throw std::invalid_argument("attach: embedding is not injective");
    used[image] = true;
  }
  Hypergraph out = g;
  std::vector<Vertex> mapped;
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    mapped.clear();
    for (Vertex v : h.edge(i)) mapped.push_back(embedding[v]);
    out.add_edge(mapped);
  }
  return out;
}

Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  Hypergraph out(g.vertex_count() + h.vertex_count());
  std::vector<Vertex> shifted;
  for (std::size_t i = 0; i < g.edge_count(); ++i) out.add_edge(g.edge(i));
  const auto shift = static_cast<Vertex>(g.vertex_count());
  for (std::size_t i = 0; i < h.edge_count(); ++i) {
    shifted.clear();
    for (Vertex v : h.edge(i)) shifted.push_back(v + shift);
    out.add_edge(shifted);
  }
  return out;
}

Hypergraph read_hypergraph(std::istream& in) {
  std::string line;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };

  if (!next_content_line()) throw std::runtime_error("hypergraph file: missing header");
  std::istringstream header(line);
  long long n = -1, m = -1;
  if (!(header >> n >> m) || n < 0 || m < 0)
    throw std::runtime_error("hypergraph file: header must be 'n m'");

  Hypergraph g(static_cast<std::size_t>(n));
  std::vector<Vertex> e;
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line())
      throw std::runtime_error("hypergraph file: expected " + std::to_string(m) + " edges");
    std::istringstream row(line);
    e.clear();
    long long v;
    while (row >> v) {
      if (v < 0 || v >= n) throw std::runtime_error("hypergraph file: vertex out of range");
      e.push_back(static_cast<Vertex>(v));
    }
    if (!row.eof()) throw std::runtime_error("hypergraph file: malformed edge line");
    try {
      g.add_edge(e);
    } catch (const std::invalid_argument& err) {
      throw std::runtime_error("hypergraph file, edge " + std::to_string(i) + ": " + err.what());
    }
  }
  return g;
}

void write_hypergraph(std::ostream& out, const Hypergraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const auto e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
    out << '\n';
  }
}

}  // namespace qsat
