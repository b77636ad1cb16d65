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

#include "qsat/report.hpp"

#include <cmath>

namespace qsat {

namespace {

nlohmann::ordered_json finite_or_null(double x) {
  return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const RankResult& r) {
  nlohmann::ordered_json j;
  j["rank"] = r.rank;
  j["backend"] = to_string(r.backend);
  j["confidence"] = finite_or_null(r.confidence);
  return j;
}

nlohmann::ordered_json to_json(const GadgetSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = gadget_name(spec);
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Sunflower>) {
          j["d"] = s.d;
          j["k"] = s.k;
        } else if constexpr (std::is_same_v<T, Nosegay3> || std::is_same_v<T, NosegayHang>) {
          j["a"] = s.a;
          j["b"] = s.b;
          j["c"] = s.c;
        } else if constexpr (std::is_same_v<T, NosegayK>) {
          j["dvec"] = s.d;
          j["k"] = s.k;
        } else {
          j["vertex_count"] = s.vertex_count;
          j["edge_count"] = s.edge_count;
          j["max_edge_multiplicity"] = s.max_edge_multiplicity;
        }
      },
      spec);
  return j;
}

nlohmann::ordered_json to_json(const GadgetRank& r) {
  nlohmann::ordered_json j;
  j["rank"] = r.rank.str();
  j["vertex_count"] = r.vertex_count;
  j["log_weight"] = finite_or_null(r.log_weight);
  j["zero_rank"] = r.is_zero();
  return j;
}

nlohmann::ordered_json to_json(const BoundReport& r) {
  nlohmann::ordered_json j;
  j["method"] = to_string(r.method);
  j["alpha"] = r.alpha;
  j["k"] = r.k;
  j["params"] = {{"d_max", r.params.d_max},
                 {"poisson_truncation", r.params.poisson_truncation},
                 {"quadrature_points", r.params.quadrature_points}};
  j["value"] = r.value;
  j["quadrature_error"] = r.quadrature_error;
  j["tail_bound"] = r.tail_bound;
  j["verdict"] = r.verdict();
  return j;
}

nlohmann::ordered_json to_json(const EmpiricalBound& b) {
  nlohmann::ordered_json j;
  j["value"] = finite_or_null(b.value);
  j["zero_rank"] = b.zero_rank;
  j["step_count"] = b.step_count;
  j["anomalies"] = b.anomalies;
  return j;
}

}  // namespace qsat
