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

#ifndef QSAT_RNG_HPP_
#define QSAT_RNG_HPP_

#include <cstdint>
#include <random>

namespace qsat {

/// Mixes a 64-bit word (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of the `stream`-th child of a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept;

/// Seedable, splittable generator with platform-independent output.
///
/// The engine is mt19937_64, whose output sequence is fixed by the standard.
/// The standard library distributions are implementation-defined, so the
/// bounded-integer, uniform and normal variates are derived here directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal variate (Box-Muller).
  double normal();

  /// Independent generator for stream `index` of this generator's seed.
  Rng child(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace qsat

#endif  // QSAT_RNG_HPP_
