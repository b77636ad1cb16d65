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

#ifndef QSAT_RANK_ORACLE_HPP_
#define QSAT_RANK_ORACLE_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsat/hypergraph.hpp"
#include "qsat/rng.hpp"

namespace qsat {

/// Forbidden vector of one clause: 2^arity amplitudes, unit norm.
///
/// Amplitude index x addresses the clause's qubits in ascending vertex
/// order, bit i of x being the i-th smallest vertex of the edge.
struct ClauseVector {
  std::vector<std::complex<double>> amplitudes;

  std::size_t arity() const;
  double norm() const;
};

/// Hypergraph with one clause vector per edge.
struct Formula {
  Hypergraph graph;
  std::vector<ClauseVector> clauses;

  /// Throws std::invalid_argument if the clause count or any arity mismatches.
  void validate() const;
};

enum class RankBackend { Float, Field };

const char* to_string(RankBackend backend) noexcept;

/// Dimension of the satisfying subspace.
///
/// confidence is the ratio between the smallest kept and the largest
/// discarded singular value for the float backend, and the number of trials
/// that reached the maximal constraint rank for the field backend.
struct RankResult {
  std::uint64_t rank = 0;
  RankBackend backend = RankBackend::Field;
  double confidence = 0.0;
};

struct RankLimits {
  std::size_t max_qubits = 13;
  bool force = false;  // lift max_qubits (memory grows as 4^n)
};

/// Thrown by the float backend when the singular value gap is too small to
/// decide the numerical rank.
class NumericalInstability : public std::runtime_error {
 public:
  NumericalInstability(const std::string& what, double confidence)
      : std::runtime_error(what), confidence_(confidence) {}
  double confidence() const noexcept { return confidence_; }

 private:
  double confidence_;
};

inline constexpr double kDefaultRankTolerance = 1e-9;
inline constexpr double kMinRankConfidence = 10.0;
/// 2^61 - 1, the largest prime below 2^61.
inline constexpr std::uint64_t kDefaultFieldPrime = (std::uint64_t{1} << 61) - 1;

/// Places the k bits of `local` at the positions of `qubits` (ascending) and
/// the n-k bits of `rest` at the remaining positions, lowest bits first.
/// Qubit q is bit q of the returned basis index.
std::uint64_t merge_index(std::uint64_t local, std::span<const Vertex> qubits,
                          std::uint64_t rest, std::size_t qubit_count);

/// Normalized vector of i.i.d. standard complex Gaussians: uniform on the
/// unit sphere of C^(2^k).
ClauseVector sample_clause_vector(std::size_t k, Rng& rng);
ClauseVector sample_clause_vector(std::size_t k, std::uint64_t seed);

/// Random clause vector on every edge; edge i uses child stream i.
Formula sample_formula(const Hypergraph& g, std::uint64_t seed);

/// 2^n minus the numerical rank of the constraint matrix. Singular values
/// below tolerance * (largest singular value) count as zero. Throws
/// NumericalInstability when confidence < kMinRankConfidence.
RankResult generic_rank_float(const Formula& f, double tolerance = kDefaultRankTolerance,
                              const RankLimits& limits = {});

/// Minimum of generic_rank_float over `samples` independently drawn formulas.
RankResult generic_rank_float_sampled(const Hypergraph& g, int samples, std::uint64_t seed,
                                      double tolerance = kDefaultRankTolerance,
                                      const RankLimits& limits = {});

/// 2^n minus the largest exact rank of the constraint matrix over GF(prime)
/// across `trials` random clause evaluations.
RankResult generic_rank_field(const Hypergraph& g, int trials, std::uint64_t seed,
                              std::uint64_t prime = kDefaultFieldPrime,
                              const RankLimits& limits = {});

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

}  // namespace qsat

#endif  // QSAT_RANK_ORACLE_HPP_
