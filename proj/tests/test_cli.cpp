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
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;

  json doc() const { return json::parse(out); }
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = qsat::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name, const std::string& contents = {}) {
  const fs::path dir = fs::temp_directory_path() / "qsat_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  if (!contents.empty()) std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("bound") {
  const Outcome r = invoke({"bound", "nosegay", "--alpha", "3.594"});
  REQUIRE(r.status == qsat::cli::kExitOk);
  const json j = r.doc();
  CHECK(std::abs(j["value"].get<double>() - (-1.601e-4)) < 2e-5);
  CHECK(j["verdict"] == "unsat-whp");
  CHECK(j["method"] == "nosegay");
  CHECK(j["params"]["poisson_truncation"] == 50);

  const json s = invoke({"bound", "sunflower", "--alpha", "3.894", "--dmax", "100"}).doc();
  CHECK(std::abs(s["value"].get<double>() - (-1.372e-4)) < 2e-5);
  CHECK(s["params"]["d_max"] == 100);

  CHECK(invoke({"bound", "general-k", "--alpha", "0.5", "--k", "4"}).doc()["verdict"] == "inconclusive");
  CHECK(invoke({"bound", "nosegay", "--alpha", "3.594", "--k", "4"}).status == qsat::cli::kExitUsage);
  CHECK(invoke({"bound", "sunflower", "--alpha", "-2"}).status == qsat::cli::kExitUsage);
}

TEST_CASE("gadget") {
  CHECK(invoke({"gadget", "sunflower", "--d", "0", "--k", "3"}).doc()["rank"] == "2");
  CHECK(invoke({"gadget", "nosegay3", "--a", "1", "--b", "2", "--c", "3"}).doc()["rank"] == "10368");
  CHECK(invoke({"gadget", "nosegay-hang", "--a", "1", "--b", "1", "--c", "1"}).doc()["rank"] == "19");
  const json k = invoke({"gadget", "nosegay-k", "--dvec", "1,0,0,0", "--k", "4"}).doc();
  CHECK(k["rank"] == "112");
  CHECK(k["gadget"]["dvec"] == json::array({1, 0, 0, 0}));

  const fs::path tri = scratch("triangle2.hg", "3 3\n0 1\n1 2\n0 2\n");
  const json t = invoke({"gadget", "k2", "--graph", tri.string()}).doc();
  CHECK(t["rank"] == "2");
  CHECK(t["components"].size() == 1);

  CHECK(invoke({"gadget", "sunflower"}).status == qsat::cli::kExitUsage);
  CHECK(invoke({"gadget", "sunflower", "--d", "-1"}).status == qsat::cli::kExitUsage);
}

TEST_CASE("rank") {
  const fs::path tri = scratch("single_triangle.hg", "3 1\n0 1 2\n");
  const json f = invoke({"rank", "--graph", tri.string(), "--mode", "field"}).doc();
  CHECK(f["rank"] == 7);
  CHECK(f["backend"] == "field");
  CHECK(f["params"]["seed"] == 1);
  const json g = invoke({"rank", "--graph", tri.string(), "--mode", "float", "--seed", "5"}).doc();
  CHECK(g["rank"] == 7);
  CHECK(g["backend"] == "float");

  CHECK(invoke({"rank", "--graph", "/nonexistent/graph.hg"}).status == qsat::cli::kExitUsage);
  CHECK(invoke({"rank", "--graph", scratch("bad.hg", "3 1\n0 0 1\n").string()}).status ==
        qsat::cli::kExitUsage);
  CHECK(invoke({"rank", "--graph", tri.string(), "--mode", "magic"}).status == qsat::cli::kExitUsage);
  CHECK(invoke({"rank", "--graph", tri.string(), "--max-qubits", "2"}).status == qsat::cli::kExitUsage);
}

TEST_CASE("peel") {
  const fs::path trace = scratch("trace.csv");
  const Outcome r = invoke({"peel", "--n", "3000", "--alpha", "3.594", "--k", "3", "--gadget", "nosegay",
                          "--seed", "11", "--trace", trace.string()});
  REQUIRE(r.status == qsat::cli::kExitOk);
  const json j = r.doc();
  CHECK(j["algorithm"] == "nosegay");
  CHECK(j["params"]["m"] == 10782);
  CHECK(j["params"]["seed"] == 11);
  CHECK(std::abs(j["value"].get<double>()) < 0.05);

  std::ifstream in(trace);
  std::string header;
  std::getline(in, header);
  CHECK(header == "step,vertices_remaining,edges_remaining,gadget,params,log_weight,anomaly");
  std::size_t rows = 0;
  for (std::string line; std::getline(in, line);) ++rows;
  CHECK(rows == j["step_count"].get<std::size_t>());

  // --seed is mandatory.
  CHECK(invoke({"peel", "--n", "30", "--alpha", "1", "--gadget", "sunflower"}).status ==
        qsat::cli::kExitUsage);
  CHECK(invoke({"peel", "--n", "30", "--alpha", "1", "--gadget", "tulip", "--seed", "1"}).status ==
        qsat::cli::kExitUsage);
  CHECK(invoke({"peel", "--n", "30", "--alpha", "1", "--k", "4", "--gadget", "nosegay", "--seed", "1"})
            .status == qsat::cli::kExitUsage);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"peel", "--n", "2000", "--alpha", "3.894", "--gadget",
                                      "sunflower", "--seed", "3"};
  CHECK(invoke(args).out == invoke(args).out);
  const std::vector<std::string> rank{"rank", "--graph", scratch("r.hg", "5 2\n0 1 2\n2 3 4\n").string(),
                                      "--mode", "float"};
  CHECK(invoke(rank).out == invoke(rank).out);
}

TEST_CASE("threshold and verify") {
  const json t = invoke({"threshold", "single-clause", "--k", "3"}).doc();
  CHECK(std::abs(t["alpha_root"].get<double>() - 5.1909) < 1e-4);
  const json g = invoke({"threshold", "general-k", "--k", "4"}).doc();
  CHECK(g["method"] == "general_k");
  CHECK(g["alpha_root"].get<double>() > 5.0);

  const Outcome v = invoke({"verify", "gadgets", "--max-size", "6"});
  CHECK(v.status == qsat::cli::kExitOk);
  const json j = v.doc();
  CHECK(j["all_match"] == true);
  CHECK(j["checked"].get<int>() > 50);
}

TEST_CASE("usage") {
  CHECK(invoke({}).status == qsat::cli::kExitUsage);
  CHECK(invoke({"frobnicate"}).status == qsat::cli::kExitUsage);
  const Outcome help = invoke({"--help"});
  CHECK(help.status == qsat::cli::kExitOk);
  CHECK(help.out.find("peel") != std::string::npos);
  const Outcome plain = invoke({"--format", "plain", "gadget", "sunflower", "--d", "2"});
  CHECK(plain.out.find("rank: 24") != std::string::npos);
}

}  // TEST_SUITE
