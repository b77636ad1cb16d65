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

#include <cmath>
#include <sstream>
#include <string>

#include "qsat/analysis.hpp"
#include "qsat/peeling.hpp"

using namespace qsat;

namespace {

std::size_t consumed_edges(const PeelStep& step) {
  if (const auto* s = std::get_if<Sunflower>(&step.gadget)) return static_cast<std::size_t>(s->d);
  const auto& g = std::get<Nosegay3>(step.gadget);
  return static_cast<std::size_t>(1 + g.a + g.b + g.c);
}

}  // namespace

TEST_SUITE("peeling") {

TEST_CASE("sunflower peel of a single edge") {
  const PeelTrace t = sunflower_peel(Hypergraph(3, {{0, 1, 2}}), 1);
  REQUIRE(t.steps.size() == 3);
  int degree_sum = 0, ones = 0;
  for (const auto& step : t.steps) {
    const auto& s = std::get<Sunflower>(step.gadget);
    CHECK(s.k == 3);
    degree_sum += s.d;
    ones += s.d == 1;
  }
  CHECK(degree_sum == 1);
  CHECK(ones == 1);
  CHECK(t.steps.back().vertices_remaining == 0);
  CHECK(t.steps.back().edges_remaining == 0);

  const EmpiricalBound b = empirical_log_rank(t);
  CHECK(b.value == doctest::Approx(std::log(7.0) / 3).epsilon(1e-14));
  CHECK(b.value == doctest::Approx(0.64864).epsilon(1e-5));
  CHECK(b.step_count == 3);
}

TEST_CASE("empty graphs") {
  const PeelTrace t = sunflower_peel(Hypergraph(6), 3);
  CHECK(t.steps.size() == 6);
  CHECK(t.k == 3);
  CHECK(empirical_log_rank(t).value == doctest::Approx(std::log(2.0)));
  const PeelTrace u = nosegay_peel(Hypergraph(6), 3);
  CHECK(u.steps.empty());
  CHECK(empirical_log_rank(u).value == doctest::Approx(std::log(2.0)));
  CHECK(empirical_log_rank(PeelTrace{}).value == doctest::Approx(std::log(2.0)));
}

TEST_CASE("nosegay peel examples") {
  const PeelTrace single = nosegay_peel(Hypergraph(3, {{0, 1, 2}}), 1);
  REQUIRE(single.steps.size() == 1);
  const auto& g = std::get<Nosegay3>(single.steps[0].gadget);
  CHECK((g.a == 0 && g.b == 0 && g.c == 0));

  // Every edge of the (6,3)-sunflower meets any other one at the center.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const PeelTrace t = nosegay_peel(gadget_graph(Sunflower{6, 3}), seed);
    REQUIRE(t.steps.size() == 1);
    const auto& n = std::get<Nosegay3>(t.steps[0].gadget);
    CHECK(n.a + n.b + n.c == 5);
    CHECK(t.anomalies == 0);
  }
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(sunflower_peel(Hypergraph(4, {{0, 1}, {1, 2, 3}}), 1), std::invalid_argument);
  CHECK_THROWS_AS(sunflower_peel(Hypergraph(4, {{0, 1}}), 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(nosegay_peel(Hypergraph(4, {{0, 1}}), 1), std::invalid_argument);
}

TEST_CASE("edge conservation and trace invariants") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Hypergraph g = random_hypergraph(300, 450 + 30 * seed, 3, seed);

    const PeelTrace s = sunflower_peel(g, seed);
    std::size_t total = 0, prev_edges = g.edge_count();
    for (std::size_t i = 0; i < s.steps.size(); ++i) {
      total += consumed_edges(s.steps[i]);
      CHECK(s.steps[i].vertices_remaining == g.vertex_count() - i - 1);
      CHECK(s.steps[i].edges_remaining + consumed_edges(s.steps[i]) == prev_edges);
      prev_edges = s.steps[i].edges_remaining;
    }
    CHECK(total == g.edge_count());

    const PeelTrace t = nosegay_peel(g, seed);
    total = 0;
    prev_edges = g.edge_count();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      total += consumed_edges(t.steps[i]);
      CHECK(t.steps[i].edges_remaining < prev_edges);
      CHECK(t.steps[i].vertices_remaining == g.vertex_count() - 3 * (i + 1));
      prev_edges = t.steps[i].edges_remaining;
    }
    CHECK(total == g.edge_count());
    CHECK(t.steps.back().edges_remaining == 0);
  }
}

TEST_CASE("anomalies are counted") {
  // Two edges sharing the pair {0,1}: whichever vertex of the pair goes first
  // takes both edges as stuck petals.
  const Hypergraph g(4, {{0, 1, 2}, {0, 1, 3}});
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const PeelTrace s = sunflower_peel(g, seed);
    std::size_t stuck = 0;
    for (const auto& step : s.steps) stuck += step.anomalies;
    CHECK(stuck == s.anomalies);
    CHECK(s.anomalies <= 1);

    const PeelTrace t = nosegay_peel(g, seed);
    REQUIRE(t.steps.size() == 1);
    CHECK(t.anomalies == 1);
  }
}

TEST_CASE("determinism") {
  const Hypergraph g = random_hypergraph(500, 1500, 3, 8);
  std::ostringstream a, b;
  write_trace_csv(a, nosegay_peel(g, 4));
  write_trace_csv(b, nosegay_peel(g, 4));
  CHECK(a.str() == b.str());
  CHECK(empirical_log_rank(sunflower_peel(g, 9)).value == empirical_log_rank(sunflower_peel(g, 9)).value);
}

TEST_CASE("trace CSV") {
  std::ostringstream out;
  write_trace_csv(out, nosegay_peel(Hypergraph(3, {{0, 1, 2}}), 1));
  const std::string text = out.str();
  const std::string head =
      "step,vertices_remaining,edges_remaining,gadget,params,log_weight,anomaly\n"
      "1,0,0,nosegay3,0;0;0,";
  REQUIRE(text.compare(0, head.size(), head) == 0);
  CHECK(text.substr(text.size() - 3) == ",0\n");
  CHECK(std::stod(text.substr(head.size())) == doctest::Approx(std::log(7.0 / 8.0)).epsilon(1e-15));
}

TEST_CASE("zero-rank gadgets give the sentinel") {
  PeelTrace t;
  t.n = 4;
  t.k = 2;
  t.steps.push_back(PeelStep{0, 0, K2Component{4, 6, 1}, 0});
  const EmpiricalBound b = empirical_log_rank(t);
  CHECK(b.zero_rank);
  CHECK(std::isinf(b.value));
  CHECK(b.value < 0);
}

TEST_CASE("bound stays below ln 2 and tracks the analytic value") {
  const Hypergraph g = random_hypergraph(20000, 20000 * 3, 3, 5);
  const double ln2 = std::log(2.0);
  const EmpiricalBound s = empirical_log_rank(sunflower_peel(g, 1));
  const EmpiricalBound t = empirical_log_rank(nosegay_peel(g, 1));
  CHECK(s.value <= ln2);
  CHECK(t.value <= ln2);
  CHECK(std::abs(s.value - sunflower_bound(3.0, 3).value) < 0.02);
  CHECK(std::abs(t.value - nosegay_bound(3.0).value) < 0.02);
}

}  // TEST_SUITE
