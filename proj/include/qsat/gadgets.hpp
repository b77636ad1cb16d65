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

#ifndef QSAT_GADGETS_HPP_
#define QSAT_GADGETS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsat/hypergraph.hpp"

namespace qsat {

using BigInt = boost::multiprecision::cpp_int;

/// d edges of arity k sharing one center vertex and otherwise disjoint.
struct Sunflower {
  int d = 0;
  int k = 3;
};

/// Central 3-edge whose vertices carry a, b, c hanging 3-edges.
struct Nosegay3 {
  int a = 0, b = 0, c = 0;
};

/// Central 3-edge whose vertices carry a, b, c hanging 2-edges.
struct NosegayHang {
  int a = 0, b = 0, c = 0;
};

/// Central k-edge whose i-th vertex carries d[i] hanging k-edges.
struct NosegayK {
  std::vector<int> d;
  int k = 3;
};

/// Connected multigraph component, classified by its vertex and edge counts.
struct K2Component {
  std::size_t vertex_count = 1;
  std::size_t edge_count = 0;
  std::size_t max_edge_multiplicity = 0;
};

using GadgetSpec = std::variant<Sunflower, Nosegay3, NosegayHang, NosegayK, K2Component>;

/// Generic rank of a gadget together with its vertex count t.
struct GadgetRank {
  BigInt rank;
  std::size_t vertex_count = 0;
  double log_weight = 0.0;  // ln(rank) - t ln 2; -inf when rank == 0

  bool is_zero() const { return rank == 0; }
};

/// Natural log of a nonnegative big integer (-inf for zero).
double log_bigint(const BigInt& x);

/// S(d,k) = 2 (2^(k-1) - 1)^d (d / (2^k - 2) + 1).
GadgetRank sunflower_rank(int d, int k);

/// R_(a,b,c) = 3^(a+b+c-3) [(a+6)(b+6)(c+6) - (a+3)(b+3)(c+3)].
GadgetRank nosegay3_rank(int a, int b, int c);

/// R_[a,b,c] = (a+2)(b+2)(c+2) - (a+1)(b+1)(c+1).
GadgetRank nosegay_hang_rank(int a, int b, int c);

/// R_(a,b,c) from the binomial expansion over hanging-edge nosegays R_[p,q,r].
GadgetRank nosegay3_via_binomial(int a, int b, int c);

/// N(d) for the k-uniform d-nosegay with separable clause vectors in general
/// position. This is an upper bound on the generic rank.
GadgetRank nosegay_k_rank(std::span<const int> d, int k);

/// Generic rank of one connected 2-SAT component with n vertices, m edges:
/// n+1 for a tree, 2 for m == n, (4-m)^+ on two vertices, 0 for n >= 3, m > n.
/// The two-vertex rule extends the usual classification to m >= 4.
BigInt k2_component_rank(std::size_t vertex_count, std::size_t edge_count);

/// Generic rank of a multigraph: product of its component ranks.
BigInt k2_rank(const Hypergraph& g);

enum class StoquasticMode {
  Hypercube,      // union-find over the 2^n basis states
  CubeDiagonals,  // diagonals parallel to (1,1,1) in [0,a+1]x[0,b+1]x[0,c+1]
};

inline constexpr std::size_t kMaxStoquasticQubits = 22;

/// Satisfying-subspace dimension of the canonical stoquastic [a,b,c]-nosegay
/// (GHZ-type central clause, singlets on hanging edges), computed as a count
/// of connected components.
std::uint64_t stoquastic_component_count(int a, int b, int c,
                                         StoquasticMode mode = StoquasticMode::Hypercube);

GadgetRank gadget_rank(const GadgetSpec& spec);

/// ln(rank) - t ln 2 in nats; -inf for a zero-rank gadget.
double gadget_log_weight(const GadgetSpec& spec);

/// Hypergraph realizing the gadget, center vertices first.
Hypergraph gadget_graph(const GadgetSpec& spec);

/// Family tag: "sunflower", "nosegay3", "nosegay-hang", "nosegay-k" or "k2".
std::string gadget_name(const GadgetSpec& spec);

/// Parameters for traces: "d" for sunflowers, "a;b;c" for nosegays.
std::string gadget_params(const GadgetSpec& spec);

}  // namespace qsat

#endif  // QSAT_GADGETS_HPP_
