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

#include "qsat/rank_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <Eigen/Dense>
#include <Eigen/SVD>

namespace qsat {

std::size_t ClauseVector::arity() const {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < amplitudes.size()) ++k;
  return k;
}

double ClauseVector::norm() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return std::sqrt(s);
}

void Formula::validate() const {
  if (clauses.size() != graph.edge_count())
    throw std::invalid_argument("formula: one clause vector per edge required");
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (clauses[i].amplitudes.size() != (std::size_t{1} << graph.arity(i)))
      throw std::invalid_argument("formula: clause " + std::to_string(i) +
                                  " does not match its edge arity");
  }
}

const char* to_string(RankBackend backend) noexcept {
  return backend == RankBackend::Float ? "float" : "field";
}

std::uint64_t merge_index(std::uint64_t local, std::span<const Vertex> qubits,
                          std::uint64_t rest, std::size_t qubit_count) {
  std::uint64_t out = 0;
  std::size_t next_local = 0;
  for (std::size_t q = 0; q < qubit_count; ++q) {
    std::uint64_t bit;
    if (next_local < qubits.size() && qubits[next_local] == q) {
      bit = (local >> next_local) & 1U;
      ++next_local;
    } else {
      bit = rest & 1U;
      rest >>= 1;
    }
    out |= bit << q;
  }
  return out;
}

namespace {

void check_size(std::size_t n, const RankLimits& limits) {
  if (n >= 63) throw std::invalid_argument("rank oracle: too many qubits");
  if (!limits.force && n > limits.max_qubits)
    throw std::invalid_argument("rank oracle: " + std::to_string(n) + " qubits exceeds the cap of " +
                                std::to_string(limits.max_qubits) + " (use force to override)");
}

/// Column indices of all 2^(n-k) constraint rows of one clause, row-major:
/// entry [y * 2^k + x] is merge(x, y).
std::vector<std::uint64_t> clause_columns(std::span<const Vertex> qubits, std::size_t n) {
  const std::size_t k = qubits.size();
  const std::uint64_t local = std::uint64_t{1} << k;
  const std::uint64_t others = std::uint64_t{1} << (n - k);
  std::vector<std::uint64_t> cols(local * others);
  for (std::uint64_t y = 0; y < others; ++y)
    for (std::uint64_t x = 0; x < local; ++x) cols[y * local + x] = merge_index(x, qubits, y, n);
  return cols;
}

}  // namespace

ClauseVector sample_clause_vector(std::size_t k, Rng& rng) {
  if (k < 1) throw std::invalid_argument("sample_clause_vector: k must be at least 1");
  if (k > 30) throw std::invalid_argument("sample_clause_vector: k too large");
  ClauseVector v;
  v.amplitudes.resize(std::size_t{1} << k);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (auto& a : v.amplitudes) {
      const double re = rng.normal();
      const double im = rng.normal();
      a = {re, im};
      norm2 += re * re + im * im;
    }
  } while (norm2 == 0.0);
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : v.amplitudes) a *= scale;
  return v;
}

ClauseVector sample_clause_vector(std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return sample_clause_vector(k, rng);
}

Formula sample_formula(const Hypergraph& g, std::uint64_t seed) {
  Formula f{g, {}};
  f.clauses.reserve(g.edge_count());
  const Rng master(seed);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Rng rng = master.child(i);
    f.clauses.push_back(sample_clause_vector(g.arity(i), rng));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Floating-point backend.

RankResult generic_rank_float(const Formula& f, double tolerance, const RankLimits& limits) {
  f.validate();
  if (!(tolerance > 0.0 && tolerance < 1e-3))
    throw std::invalid_argument("generic_rank_float: tolerance must lie in (0, 1e-3)");
  const std::size_t n = f.graph.vertex_count();
  check_size(n, limits);
  const auto dim = static_cast<Eigen::Index>(std::uint64_t{1} << n);

  // Rows are fed in blocks of at most `dim`; whenever the stack outgrows dim
  // rows it is compressed to its R factor, which has the same singular values.
  Eigen::MatrixXcd stacked(0, dim);
  Eigen::MatrixXcd block(0, dim);
  Eigen::Index block_rows = 0;

  auto flush = [&]() {
    if (block_rows == 0) return;
    Eigen::MatrixXcd merged(stacked.rows() + block_rows, dim);
    merged << stacked, block.topRows(block_rows);
    if (merged.rows() > dim) {
      Eigen::HouseholderQR<Eigen::MatrixXcd> qr(merged);
      stacked = qr.matrixQR().topRows(dim).triangularView<Eigen::Upper>();
    } else {
      stacked = std::move(merged);
    }
    block_rows = 0;
  };

  block.resize(dim, dim);
  for (std::size_t c = 0; c < f.graph.edge_count(); ++c) {
    const auto qubits = f.graph.edge(c);
    const auto& amps = f.clauses[c].amplitudes;
    const std::size_t local = amps.size();
    const auto cols = clause_columns(qubits, n);
    const std::size_t rows = cols.size() / local;
    for (std::size_t y = 0; y < rows; ++y) {
      if (block_rows == dim) flush();
      block.row(block_rows).setZero();
      for (std::size_t x = 0; x < local; ++x)
        block(block_rows, static_cast<Eigen::Index>(cols[y * local + x])) = std::conj(amps[x]);
      ++block_rows;
    }
  }
  flush();

  RankResult result;
  result.backend = RankBackend::Float;
  result.confidence = std::numeric_limits<double>::infinity();
  if (stacked.rows() == 0) {
    result.rank = static_cast<std::uint64_t>(dim);
    return result;
  }

  const Eigen::BDCSVD<Eigen::MatrixXcd> svd(stacked);
  const Eigen::VectorXd& sv = svd.singularValues();  // descending
  const double cutoff = tolerance * sv(0);
  Eigen::Index kept = 0;
  while (kept < sv.size() && sv(kept) > cutoff) ++kept;
  if (kept > 0 && kept < sv.size() && sv(kept) > 0.0)
    result.confidence = sv(kept - 1) / sv(kept);

  result.rank = static_cast<std::uint64_t>(dim - kept);
  if (result.confidence < kMinRankConfidence)
    throw NumericalInstability(
        "generic_rank_float: singular value gap ratio " + std::to_string(result.confidence) +
            " is below " + std::to_string(kMinRankConfidence) + "; unstable, use the field backend",
        result.confidence);
  return result;
}

RankResult generic_rank_float_sampled(const Hypergraph& g, int samples, std::uint64_t seed,
                                      double tolerance, const RankLimits& limits) {
  if (samples < 1) throw std::invalid_argument("generic_rank_float_sampled: samples must be >= 1");
  const Rng master(seed);
  RankResult best;
  for (int s = 0; s < samples; ++s) {
    const Formula f = sample_formula(g, master.child(static_cast<std::uint64_t>(s)).next());
    const RankResult r = generic_rank_float(f, tolerance, limits);
    if (s == 0 || r.rank < best.rank) best = r;
    else if (r.rank == best.rank) best.confidence = std::min(best.confidence, r.confidence);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Finite-field backend.

__extension__ using u128 = unsigned __int128;

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1U) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

struct GenericModulus {
  std::uint64_t p;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % p);
  }
};

struct Mersenne61 {
  static constexpr std::uint64_t p = kDefaultFieldPrime;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    const u128 z = static_cast<u128>(a) * b;
    std::uint64_t r = (static_cast<std::uint64_t>(z) & p) + static_cast<std::uint64_t>(z >> 61);
    r = (r & p) + (r >> 61);
    return r >= p ? r - p : r;
  }
};

/// Row space of a growing matrix over GF(p), kept in reduced row echelon form
/// so that a new sparse row is reduced by one pass over its own support.
template <class Modulus>
class RowSpace {
 public:
  RowSpace(Modulus mod, std::size_t cols) : mod_(mod), cols_(cols), pivot_row_(cols, -1), work_(cols) {}

  std::size_t rank() const noexcept { return pivot_col_.size(); }
  bool full() const noexcept { return rank() == cols_; }

  void add(std::span<const std::uint64_t> cols, std::span<const std::uint64_t> vals) {
    std::fill(work_.begin(), work_.end(), 0);
    for (std::size_t i = 0; i < cols.size(); ++i) work_[cols[i]] = add_mod(work_[cols[i]], vals[i]);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::int64_t r = pivot_row_[cols[i]];
      const std::uint64_t coeff = work_[cols[i]];
      if (r < 0 || coeff == 0) continue;
      axpy(neg(coeff), row(static_cast<std::size_t>(r)), work_.data());
    }

    std::size_t lead = 0;
    while (lead < cols_ && work_[lead] == 0) ++lead;
    if (lead == cols_) return;

    const std::uint64_t inv = inverse(work_[lead]);
    for (auto& x : work_)
      if (x) x = mod_.mul(x, inv);
    for (std::size_t r = 0; r < rank(); ++r) {
      std::uint64_t* target = row(r);
      if (target[lead] != 0) axpy(neg(target[lead]), work_.data(), target);
    }
    storage_.insert(storage_.end(), work_.begin(), work_.end());
    pivot_row_[lead] = static_cast<std::int64_t>(rank());
    pivot_col_.push_back(lead);
  }

 private:
  std::uint64_t* row(std::size_t r) { return storage_.data() + r * cols_; }
  std::uint64_t add_mod(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= mod_.p ? s - mod_.p : s;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : mod_.p - a; }

  // dst += a * src
  void axpy(std::uint64_t a, const std::uint64_t* src, std::uint64_t* dst) const {
    for (std::size_t j = 0; j < cols_; ++j)
      if (src[j] != 0) dst[j] = add_mod(dst[j], mod_.mul(a, src[j]));
  }

  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1, e = mod_.p - 2;
    while (e) {
      if (e & 1U) result = mod_.mul(result, a);
      a = mod_.mul(a, a);
      e >>= 1;
    }
    return result;
  }

  Modulus mod_;
  std::size_t cols_;
  std::vector<std::int64_t> pivot_row_;
  std::vector<std::size_t> pivot_col_;
  std::vector<std::uint64_t> storage_;
  std::vector<std::uint64_t> work_;
};

template <class Modulus>
std::size_t field_constraint_rank(const Hypergraph& g, Modulus mod, Rng& rng,
                                  const std::vector<std::vector<std::uint64_t>>& columns) {
  const std::size_t n = g.vertex_count();
  RowSpace<Modulus> space(mod, std::size_t{1} << n);
  std::vector<std::uint64_t> values;
  for (std::size_t c = 0; c < g.edge_count(); ++c) {
    // Conjugation is a bijection on generic vectors, so raw entries suffice.
    values.resize(std::size_t{1} << g.arity(c));
    for (auto& v : values) v = rng.below(mod.p);
    if (space.full()) continue;  // keep the RNG stream independent of early exit
    const auto& cols = columns[c];
    for (std::size_t off = 0; off < cols.size() && !space.full(); off += values.size())
      space.add(std::span(cols).subspan(off, values.size()), values);
  }
  return space.rank();
}

}  // namespace

RankResult generic_rank_field(const Hypergraph& g, int trials, std::uint64_t seed,
                              std::uint64_t prime, const RankLimits& limits) {
  if (trials < 1) throw std::invalid_argument("generic_rank_field: trials must be >= 1");
  if (prime <= (std::uint64_t{1} << 60))
    throw std::invalid_argument("generic_rank_field: prime must exceed 2^60");
  if (prime >= (std::uint64_t{1} << 63) || !is_prime_u64(prime))
    throw std::invalid_argument("generic_rank_field: modulus is not a prime below 2^63");
  const std::size_t n = g.vertex_count();
  check_size(n, limits);

  std::vector<std::vector<std::uint64_t>> columns;
  columns.reserve(g.edge_count());
  for (std::size_t c = 0; c < g.edge_count(); ++c) columns.push_back(clause_columns(g.edge(c), n));

  const Rng master(seed);
  std::size_t best = 0;
  int hits = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = master.child(static_cast<std::uint64_t>(t));
    const std::size_t r = prime == kDefaultFieldPrime
                              ? field_constraint_rank(g, Mersenne61{}, rng, columns)
                              : field_constraint_rank(g, GenericModulus{prime}, rng, columns);
    if (t == 0 || r > best) {
      best = r;
      hits = 1;
    } else if (r == best) {
      ++hits;
    }
  }
  RankResult result;
  result.backend = RankBackend::Field;
  result.rank = (std::uint64_t{1} << n) - best;
  result.confidence = hits;
  return result;
}

}  // namespace qsat
