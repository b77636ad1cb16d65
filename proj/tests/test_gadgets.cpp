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

#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>

#include "qsat/gadgets.hpp"
#include "qsat/rank_oracle.hpp"
#include "support.hpp"

using namespace qsat;
namespace mp = boost::multiprecision;

namespace {

BigInt choose(int n, int r) {
  BigInt out = 1;
  for (int i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// 2 (2^(k-1) - 1)^d (d / (2^k - 2) + 1), evaluated as a rational.
BigInt sunflower_reference(int d, int k) {
  const BigInt m = (BigInt(1) << (k - 1)) - 1;
  const mp::cpp_rational value =
      mp::cpp_rational(2 * mp::pow(m, static_cast<unsigned>(d))) *
      (mp::cpp_rational(d, (BigInt(1) << k) - 2) + 1);
  REQUIRE(mp::denominator(value) == 1);
  return mp::numerator(value);
}

// Canonical stoquastic [a,b,c]-nosegay: |000> - |111> on the center and a
// singlet on every hanging edge (center vertex is the lower index).
Formula canonical_hang_formula(int a, int b, int c) {
  Formula f{gadget_graph(NosegayHang{a, b, c}), {}};
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t i = 0; i < f.graph.edge_count(); ++i) {
    ClauseVector v;
    v.amplitudes.assign(std::size_t{1} << f.graph.arity(i), 0.0);
    if (f.graph.arity(i) == 3) {
      v.amplitudes[0] = r;
      v.amplitudes[7] = -r;
    } else {
      v.amplitudes[1] = r;
      v.amplitudes[2] = -r;
    }
    f.clauses.push_back(v);
  }
  return f;
}

}  // namespace

TEST_SUITE("gadgets") {

TEST_CASE("sunflower_rank") {
  CHECK(sunflower_rank(1, 3).rank == 7);
  CHECK(sunflower_rank(1, 3).vertex_count == 3);
  CHECK(sunflower_rank(0, 3).rank == 2);
  CHECK(sunflower_rank(0, 3).vertex_count == 1);
  CHECK(sunflower_rank(6, 3).rank == 2916);
  CHECK(sunflower_rank(2, 3).rank == 24);
  CHECK(sunflower_rank(2, 3).vertex_count == 5);
  CHECK(sunflower_rank(3, 2).rank == 5);
  CHECK_THROWS_AS(sunflower_rank(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(sunflower_rank(1, 1), std::invalid_argument);

  for (int k = 2; k <= 8; ++k)
    for (int d = 0; d <= 40; ++d) CHECK(sunflower_rank(d, k).rank == sunflower_reference(d, k));

  // Large d stays exact: S(100, 3) is far beyond 64 bits.
  const GadgetRank big = sunflower_rank(100, 3);
  CHECK(big.rank == sunflower_reference(100, 3));
  CHECK(big.log_weight == doctest::Approx(99 * std::log(3.0) + std::log(106.0) - 201 * std::log(2.0)));
}

TEST_CASE("sunflower recurrence over petal subsets") {
  for (int k = 2; k <= 6; ++k) {
    const BigInt base = (BigInt(1) << (k - 1)) - 2;
    for (int d = 0; d <= 20; ++d) {
      BigInt sum = 0;
      for (int a = 0; a <= d; ++a)
        sum += choose(d, a) * (a + 2) * mp::pow(base, static_cast<unsigned>(d - a));
      CHECK(sunflower_rank(d, k).rank == sum);
    }
  }
}

TEST_CASE("nosegay3_rank") {
  CHECK(nosegay3_rank(0, 0, 0).rank == 7);
  CHECK(nosegay3_rank(1, 2, 3).rank == 10368);
  CHECK(nosegay3_rank(1, 0, 0).rank == sunflower_rank(2, 3).rank);
  CHECK(nosegay3_rank(1, 1, 1).rank == 279);
  CHECK(nosegay3_rank(1, 2, 3).vertex_count == 15);
  CHECK_THROWS_AS(nosegay3_rank(0, -1, 0), std::invalid_argument);

  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      for (int c = 0; c <= 6; ++c) {
        std::array<int, 3> p{a, b, c};
        std::sort(p.begin(), p.end());
        const BigInt ref = nosegay3_rank(a, b, c).rank;
        do {
          CHECK(nosegay3_rank(p[0], p[1], p[2]).rank == ref);
        } while (std::next_permutation(p.begin(), p.end()));
      }
}

TEST_CASE("nosegay3 binomial expansion") {
  CHECK(nosegay3_via_binomial(0, 0, 0).rank == 7);
  CHECK(nosegay3_via_binomial(1, 2, 3).rank == 10368);
  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int c = 0; c <= 10; ++c) {
        const GadgetRank x = nosegay3_via_binomial(a, b, c);
        const GadgetRank y = nosegay3_rank(a, b, c);
        CHECK(x.rank == y.rank);
        CHECK(x.vertex_count == y.vertex_count);
      }
}

TEST_CASE("nosegay_hang_rank and its component-count oracles") {
  CHECK(nosegay_hang_rank(0, 0, 0).rank == 7);
  CHECK(nosegay_hang_rank(1, 1, 1).rank == 19);
  CHECK(nosegay_hang_rank(1, 2, 3).rank == 36);
  CHECK(nosegay_hang_rank(1, 2, 3).vertex_count == 9);
  CHECK(stoquastic_component_count(0, 0, 0) == 7);
  CHECK(stoquastic_component_count(1, 1, 1) == 19);
  CHECK(stoquastic_component_count(2, 3, 1) == 36);
  CHECK(stoquastic_component_count(2, 3, 1, StoquasticMode::CubeDiagonals) == 36);

  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b)
      for (int c = 0; a + b + c <= 8; ++c) {
        const auto rank = nosegay_hang_rank(a, b, c).rank;
        CHECK(stoquastic_component_count(a, b, c) == rank);
        CHECK(stoquastic_component_count(a, b, c, StoquasticMode::CubeDiagonals) == rank);
      }
  for (int a = 0; a <= 10; ++a)
    CHECK(stoquastic_component_count(a, 10 - a, 3, StoquasticMode::CubeDiagonals) ==
          nosegay_hang_rank(a, 10 - a, 3).rank);

  CHECK_THROWS_AS(stoquastic_component_count(10, 10, 0), std::invalid_argument);
}

TEST_CASE("component count equals the canonical ground-space dimension") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; a + b <= 2; ++b)
      for (int c = 0; a + b + c <= 3; ++c)
        CHECK(testing::hamiltonian_kernel_dim(canonical_hang_formula(a, b, c)) ==
              stoquastic_component_count(a, b, c));
}

TEST_CASE("nosegay_k_rank") {
  for (int k = 2; k <= 6; ++k) {
    const std::vector<int> zero(static_cast<std::size_t>(k), 0);
    CHECK(nosegay_k_rank(zero, k).rank == (BigInt(1) << k) - 1);
    for (int d = 0; d <= 10; ++d) {
      std::vector<int> dv(static_cast<std::size_t>(k), 0);
      dv[0] = d;
      CHECK(nosegay_k_rank(dv, k).rank == sunflower_rank(d + 1, k).rank);
      CHECK(nosegay_k_rank(dv, k).vertex_count == sunflower_rank(d + 1, k).vertex_count);
    }
  }
  const std::vector<int> ones{1, 1, 1};
  CHECK(nosegay_k_rank(ones, 3).rank == 279);
  const std::vector<int> one_hang{1, 0, 0, 0};
  CHECK(nosegay_k_rank(one_hang, 4).rank == 112);

  for (int a = 0; a <= 10; ++a)
    for (int b = 0; b <= 10; ++b)
      for (int c = 0; c <= 10; ++c) {
        const std::vector<int> dv{a, b, c};
        CHECK(nosegay_k_rank(dv, 3).rank == nosegay3_rank(a, b, c).rank);
      }

  const std::vector<int> wrong_length{1, 0};
  CHECK_THROWS_AS(nosegay_k_rank(wrong_length, 3), std::invalid_argument);
}

TEST_CASE("k2 classification") {
  CHECK(k2_rank(Hypergraph(3, {{0, 1}, {1, 2}})) == 4);
  CHECK(k2_rank(Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}})) == 2);
  CHECK(k2_rank(Hypergraph(4, {{0, 1}, {2, 3}})) == 9);
  CHECK(k2_rank(Hypergraph(2, {{0, 1}, {0, 1}, {0, 1}})) == 1);
  CHECK(k2_rank(Hypergraph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}})) == 0);
  CHECK(k2_rank(Hypergraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}})) == 0);
  CHECK(k2_rank(Hypergraph(5)) == 32);
  CHECK_THROWS_AS(k2_rank(Hypergraph(3, {{0, 1, 2}})), std::invalid_argument);

  CHECK(k2_component_rank(1, 0) == 2);
  CHECK(k2_component_rank(2, 2) == 2);
  CHECK(k2_component_rank(2, 7) == 0);
  CHECK(k2_component_rank(5, 4) == 6);
  CHECK(k2_component_rank(5, 5) == 2);
  CHECK(k2_component_rank(5, 6) == 0);
  CHECK_THROWS_AS(k2_component_rank(5, 3), std::invalid_argument);

  // Against the rank oracle on random small multigraphs (several components).
  Rng rng(12);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 2 + rng.below(7);
    const Hypergraph g = random_hypergraph(n, rng.below(n + 2), 2, rng.next());
    CHECK(k2_rank(g) == generic_rank_field(g, 2, rng.next()).rank);
  }
}

TEST_CASE("gadget graphs realize their closed forms") {
  const GadgetSpec specs[] = {Sunflower{2, 3}, Sunflower{3, 2}, Nosegay3{1, 1, 0},
                              NosegayHang{2, 1, 1}, NosegayK{{1, 0, 0, 0}, 4},
                              K2Component{3, 3, 1}, K2Component{2, 3, 3}};
  for (const auto& spec : specs) {
    const Hypergraph g = gadget_graph(spec);
    const GadgetRank r = gadget_rank(spec);
    CAPTURE(gadget_name(spec));
    CAPTURE(gadget_params(spec));
    CHECK(g.vertex_count() == r.vertex_count);
    CHECK(generic_rank_field(g, 2, 5).rank == r.rank);
  }

  const Hypergraph six = gadget_graph(Sunflower{6, 3});
  CHECK(six.vertex_count() == 13);
  CHECK(six.edge_count() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(six.edge(i)[0] == 0);
  CHECK(gadget_graph(Nosegay3{1, 2, 3}).edge_count() == 7);
  CHECK(gadget_graph(NosegayHang{1, 2, 3}).uniform_arity() == std::nullopt);
}

TEST_CASE("log weights and labels") {
  CHECK(gadget_log_weight(Sunflower{1, 3}) == doctest::Approx(std::log(7.0 / 8.0)).epsilon(1e-14));
  CHECK(gadget_log_weight(Sunflower{1, 3}) == doctest::Approx(-0.13353).epsilon(1e-4));
  for (int k = 2; k <= 8; ++k) CHECK(gadget_log_weight(Sunflower{0, k}) == 0.0);
  CHECK(gadget_log_weight(Nosegay3{0, 0, 0}) == gadget_log_weight(Sunflower{1, 3}));
  CHECK(std::isinf(gadget_log_weight(K2Component{4, 6, 1})));
  CHECK(gadget_rank(K2Component{4, 6, 1}).is_zero());
  CHECK(log_bigint(BigInt(1) << 5000) == doctest::Approx(5000 * std::log(2.0)));

  CHECK(gadget_name(Sunflower{3, 3}) == "sunflower");
  CHECK(gadget_params(Sunflower{3, 3}) == "3");
  CHECK(gadget_params(Nosegay3{1, 2, 3}) == "1;2;3");
  CHECK(gadget_name(NosegayHang{}) == "nosegay-hang");
  CHECK(gadget_params(NosegayK{{1, 0, 2}, 3}) == "1;0;2");
  CHECK(gadget_name(K2Component{}) == "k2");
}

}  // TEST_SUITE
