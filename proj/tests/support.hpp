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

#ifndef QSAT_TESTS_SUPPORT_HPP_
#define QSAT_TESTS_SUPPORT_HPP_

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "qsat/hypergraph.hpp"
#include "qsat/rank_oracle.hpp"
#include "qsat/rng.hpp"

namespace qsat::testing {

// m edges of arity 2 or 3 (each with probability 1/2) on n >= 3 vertices.
inline Hypergraph random_mixed_hypergraph(std::size_t n, std::size_t m, Rng& rng) {
  Hypergraph g(n);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t k = 2 + rng.below(2);
    std::vector<Vertex> e;
    while (e.size() < k) {
      const auto v = static_cast<Vertex>(rng.below(n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    g.add_edge(e);
  }
  return g;
}

// Kernel dimension of H = sum_c |v_c><v_c| (x) 1, by dense diagonalization.
// Matrix elements are built straight from the bit convention: bit q of a
// basis index is qubit q, bit i of a clause index is the i-th smallest qubit.
inline std::uint64_t hamiltonian_kernel_dim(const Formula& f, double cutoff = 1e-8) {
  const std::size_t n = f.graph.vertex_count();
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::size_t c = 0; c < f.graph.edge_count(); ++c) {
    const auto qubits = f.graph.edge(c);
    std::uint64_t mask = 0;
    for (Vertex q : qubits) mask |= std::uint64_t{1} << q;
    auto local = [&](std::uint64_t x) {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < qubits.size(); ++i) out |= ((x >> qubits[i]) & 1u) << i;
      return out;
    };
    const auto& v = f.clauses[c].amplitudes;
    for (std::uint64_t x = 0; x < dim; ++x)
      for (std::uint64_t y = 0; y < dim; ++y)
        if ((x & ~mask) == (y & ~mask))
          h(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y)) +=
              v[local(x)] * std::conj(v[local(y)]);
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h, Eigen::EigenvaluesOnly);
  std::uint64_t zeros = 0;
  for (Eigen::Index i = 0; i < eig.eigenvalues().size(); ++i)
    if (eig.eigenvalues()(i) < cutoff) ++zeros;
  return zeros;
}

}  // namespace qsat::testing

#endif  // QSAT_TESTS_SUPPORT_HPP_
