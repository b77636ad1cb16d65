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

#ifndef QSAT_REPORT_HPP_
#define QSAT_REPORT_HPP_

#include <json.hpp>

#include "qsat/analysis.hpp"
#include "qsat/gadgets.hpp"
#include "qsat/peeling.hpp"
#include "qsat/rank_oracle.hpp"

namespace qsat {

// JSON views of the result types. Big integers are emitted as decimal
// strings; infinities as null with an explicit flag.

nlohmann::ordered_json to_json(const RankResult& r);
nlohmann::ordered_json to_json(const GadgetSpec& spec);
nlohmann::ordered_json to_json(const GadgetRank& r);
nlohmann::ordered_json to_json(const BoundReport& r);
nlohmann::ordered_json to_json(const EmpiricalBound& b);

}  // namespace qsat

#endif  // QSAT_REPORT_HPP_
