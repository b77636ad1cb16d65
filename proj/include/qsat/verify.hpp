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

#ifndef QSAT_VERIFY_HPP_
#define QSAT_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsat/gadgets.hpp"
#include "qsat/hypergraph.hpp"

namespace qsat {

/// Closed-form gadget rank next to the finite-field oracle's answer.
struct VerifyCase {
  GadgetSpec gadget;
  std::size_t qubits = 0;
  BigInt formula;
  std::uint64_t oracle = 0;
  /// False for nosegay-k cases: the closed form there is only an upper bound.
  bool asserted = true;

  bool match() const { return formula == oracle; }
};

struct VerifyOptions {
  std::size_t max_qubits = 10;
  int trials = 2;
  std::uint64_t seed = 1;
};

/// Every connected multigraph on vertices 0..n-1 with exactly m edges, as a
/// multiset of vertex pairs (labelled; isomorphic copies are all listed).
std::vector<Hypergraph> connected_multigraphs(std::size_t n, std::size_t m);

/// Compares every gadget family's closed form with generic_rank_field on
/// gadgets of at most max_qubits qubits; k2 classes use all connected
/// multigraphs with n <= min(4, max_qubits) and m <= 5. `progress`, when set,
/// sees each case as it completes.
std::vector<VerifyCase> verify_gadgets(const VerifyOptions& options,
                                       const std::function<void(const VerifyCase&)>& progress = {});

}  // namespace qsat

#endif  // QSAT_VERIFY_HPP_
