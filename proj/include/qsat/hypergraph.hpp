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

#ifndef QSAT_HYPERGRAPH_HPP_
#define QSAT_HYPERGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qsat {

using Vertex = std::uint32_t;

/// Hypergraph (or multigraph) on vertices 0..n-1.
///
/// Edges are stored flat, each one sorted ascending. Edges may have mixed
/// arities (at least 2) and repeated edges keep their multiplicity. Vertices
/// inside one edge are pairwise distinct.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t vertex_count);
  Hypergraph(std::size_t vertex_count, const std::vector<std::vector<Vertex>>& edges);

  /// Appends an edge after sorting it. Throws std::invalid_argument on an
  /// arity below 2, a repeated vertex or an out-of-range index.
  void add_edge(std::span<const Vertex> edge);
  void add_edge(std::initializer_list<Vertex> edge) {
    add_edge(std::span<const Vertex>(edge.begin(), edge.size()));
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return offsets_.size() - 1; }

  std::span<const Vertex> edge(std::size_t i) const {
    return {vertices_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  std::size_t arity(std::size_t i) const { return offsets_[i + 1] - offsets_[i]; }

  /// Common arity of all edges, or nullopt for mixed arities / no edges.
  std::optional<std::size_t> uniform_arity() const;

  /// Edges incident to each vertex, listed in edge order.
  std::vector<std::vector<std::uint32_t>> incidence() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::size_t> offsets_{0};
};

/// Connected component of a multigraph (all edges of arity 2).
struct ComponentSummary {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;  // with multiplicity
  std::size_t max_edge_multiplicity = 0;

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

/// m independent uniform k-subsets of {0..n-1}, chosen with replacement.
/// Each edge draws k distinct vertices by rejection.
Hypergraph random_hypergraph(std::size_t n, std::size_t m, std::size_t k, std::uint64_t seed);

/// Connected components, ordered by smallest vertex. Requires arity 2.
std::vector<ComponentSummary> components(const Hypergraph& g);

/// g plus a copy of h placed on g's vertices through an injective embedding
/// (embedding[v] is the image of h's vertex v).
Hypergraph attach(const Hypergraph& g, const Hypergraph& h, std::span<const Vertex> embedding);

/// g and h side by side; h's vertices are shifted by g.vertex_count().
Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h);

/// Text format: "n m" on the first line, then one edge per line.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& g);

}  // namespace qsat

#endif  // QSAT_HYPERGRAPH_HPP_
