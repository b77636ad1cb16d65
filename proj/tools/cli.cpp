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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "qsat/analysis.hpp"
#include "qsat/gadgets.hpp"
#include "qsat/hypergraph.hpp"
#include "qsat/peeling.hpp"
#include "qsat/rank_oracle.hpp"
#include "qsat/report.hpp"
#include "qsat/verify.hpp"

namespace qsat::cli {

namespace {

using Json = nlohmann::ordered_json;

/// Raised for bad input that the parser itself cannot catch (files, ranges).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Hypergraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file '" + path + "'");
  try {
    return read_hypergraph(in);
  } catch (const std::runtime_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Json& j, const std::string& format) {
  if (format == "plain") {
    for (const auto& [key, value] : j.items())
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  } else {
    out << j.dump(2) << '\n';
  }
}

BoundMethod parse_method(const std::string& name) {
  if (name == "sunflower") return BoundMethod::Sunflower;
  if (name == "nosegay") return BoundMethod::Nosegay;
  if (name == "general-k") return BoundMethod::GeneralK;
  return BoundMethod::SingleClause;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generic ranks, peeling simulations and threshold bounds for random quantum k-SAT",
               "qsat"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "plain"}))
      ->capture_default_str();

  // rank ------------------------------------------------------------------
  auto* rank_cmd = app.add_subcommand("rank", "Generic rank of a hypergraph file");
  std::string graph_path;
  std::string mode = "field";
  int trials = 3;
  int samples = 3;
  double tolerance = kDefaultRankTolerance;
  std::uint64_t rank_seed = 1;
  std::size_t max_qubits = 13;
  bool force = false;
  rank_cmd->add_option("--graph", graph_path, "Hypergraph file")->required();
  rank_cmd->add_option("--mode", mode, "Backend")
      ->check(CLI::IsMember({"field", "float"}))
      ->capture_default_str();
  rank_cmd->add_option("--trials", trials, "Field backend trials")->check(CLI::PositiveNumber)
      ->capture_default_str();
  rank_cmd->add_option("--samples", samples, "Float backend clause samples (minimum is kept)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  rank_cmd->add_option("--tolerance", tolerance, "Relative singular value cutoff")
      ->capture_default_str();
  rank_cmd->add_option("--seed", rank_seed, "Random seed")->capture_default_str();
  rank_cmd->add_option("--max-qubits", max_qubits, "Qubit cap")->capture_default_str();
  rank_cmd->add_flag("--force", force, "Ignore the qubit cap");

  // gadget ----------------------------------------------------------------
  auto* gadget_cmd = app.add_subcommand("gadget", "Closed-form generic rank of a gadget");
  gadget_cmd->require_subcommand(1);
  int g_d = 0, g_k = 3, g_a = 0, g_b = 0, g_c = 0;
  std::vector<int> g_dvec;
  std::string k2_path;
  auto* g_sun = gadget_cmd->add_subcommand("sunflower", "(d,k)-sunflower");
  g_sun->add_option("--d", g_d, "Petal count")->required();
  g_sun->add_option("--k", g_k, "Arity")->capture_default_str();
  auto* g_n3 = gadget_cmd->add_subcommand("nosegay3", "3-uniform (a,b,c)-nosegay");
  auto* g_nh = gadget_cmd->add_subcommand("nosegay-hang", "[a,b,c]-nosegay with hanging 2-edges");
  for (auto* sub : {g_n3, g_nh}) {
    sub->add_option("--a", g_a)->required();
    sub->add_option("--b", g_b)->required();
    sub->add_option("--c", g_c)->required();
  }
  auto* g_nk = gadget_cmd->add_subcommand("nosegay-k", "k-uniform d-nosegay (upper bound)");
  g_nk->add_option("--dvec", g_dvec, "Comma-separated hanging counts")->required()->delimiter(',');
  g_nk->add_option("--k", g_k, "Arity")->capture_default_str();
  auto* g_k2 = gadget_cmd->add_subcommand("k2", "Multigraph (2-SAT) generic rank");
  g_k2->add_option("--graph", k2_path, "Multigraph file")->required();

  // verify ----------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against the rank oracle");
  verify_cmd->require_subcommand(1);
  auto* verify_gadgets_cmd = verify_cmd->add_subcommand("gadgets", "All gadget families");
  VerifyOptions verify_options;
  verify_gadgets_cmd->add_option("--max-size", verify_options.max_qubits, "Largest gadget, in qubits")
      ->capture_default_str();
  verify_gadgets_cmd->add_option("--trials", verify_options.trials, "Field oracle trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify_gadgets_cmd->add_option("--seed", verify_options.seed, "Random seed")->capture_default_str();

  // peel ------------------------------------------------------------------
  auto* peel_cmd = app.add_subcommand("peel", "Peel a random hypergraph into gadgets");
  std::size_t peel_n = 0;
  double peel_alpha = 0.0;
  int peel_k = 3;
  std::string peel_gadget;
  std::uint64_t peel_seed = 0;
  std::string trace_path;
  peel_cmd->add_option("--n", peel_n, "Vertex count")->required();
  peel_cmd->add_option("--alpha", peel_alpha, "Clause density m/n")->required();
  peel_cmd->add_option("--k", peel_k, "Arity")->capture_default_str();
  peel_cmd->add_option("--gadget", peel_gadget, "Peeling algorithm")
      ->required()
      ->check(CLI::IsMember({"sunflower", "nosegay"}));
  peel_cmd->add_option("--seed", peel_seed, "Random seed")->required();
  peel_cmd->add_option("--trace", trace_path, "Write the step trace as CSV");

  // bound / threshold -----------------------------------------------------
  auto* bound_cmd = app.add_subcommand("bound", "Analytic per-qubit log-rank bound");
  bound_cmd->require_subcommand(1);
  double b_alpha = 0.0;
  int b_k = 3, b_dmax = 100, b_trunc = 50, b_points = 0;
  for (const char* name : {"sunflower", "nosegay", "general-k", "single-clause"}) {
    auto* sub = bound_cmd->add_subcommand(name);
    sub->add_option("--alpha", b_alpha, "Clause density")->required();
    sub->add_option("--k", b_k, "Arity")->capture_default_str();
    sub->add_option("--dmax", b_dmax, "Sunflower degree cutoff")->capture_default_str();
    sub->add_option("--trunc", b_trunc, "Poisson truncation")->capture_default_str();
    sub->add_option("--points", b_points, "Simpson panels (0: default)")->capture_default_str();
  }

  auto* threshold_cmd = app.add_subcommand("threshold", "Density where a bound changes sign");
  threshold_cmd->require_subcommand(1);
  int t_k = 3, t_trunc = 50, t_points = 0;
  std::optional<int> t_dmax;
  for (const char* name : {"sunflower", "nosegay", "general-k", "single-clause"}) {
    auto* sub = threshold_cmd->add_subcommand(name);
    sub->add_option("--k", t_k, "Arity")->capture_default_str();
    sub->add_option("--dmax", t_dmax, "Sunflower degree cutoff (default grows with k alpha)");
    sub->add_option("--trunc", t_trunc, "Poisson truncation")->capture_default_str();
    sub->add_option("--points", t_points, "Simpson panels (0: default)")->capture_default_str();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qsat: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (rank_cmd->parsed()) {
      const Hypergraph g = load_graph(graph_path);
      const RankLimits limits{max_qubits, force};
      Json j;
      RankResult r;
      Json params{{"graph", graph_path}, {"n", g.vertex_count()}, {"m", g.edge_count()},
                  {"mode", mode}, {"seed", rank_seed}};
      if (mode == "field") {
        r = generic_rank_field(g, trials, rank_seed, kDefaultFieldPrime, limits);
        params["trials"] = trials;
        params["prime"] = kDefaultFieldPrime;
      } else {
        r = generic_rank_float_sampled(g, samples, rank_seed, tolerance, limits);
        params["samples"] = samples;
        params["tolerance"] = tolerance;
      }
      j = to_json(r);
      j["params"] = params;
      emit(out, j, format);
      return kExitOk;
    }

    if (gadget_cmd->parsed()) {
      Json j;
      if (g_k2->parsed()) {
        const Hypergraph g = load_graph(k2_path);
        const BigInt rank = k2_rank(g);
        j["gadget"] = {{"family", "k2"}, {"graph", k2_path}};
        j["rank"] = rank.str();
        j["vertex_count"] = g.vertex_count();
        const double lw = log_bigint(rank) - static_cast<double>(g.vertex_count()) * std::log(2.0);
        j["log_weight"] = std::isfinite(lw) ? Json(lw) : Json(nullptr);
        j["zero_rank"] = rank == 0;
        Json comps = Json::array();
        for (const auto& c : components(g))
          comps.push_back({{"vertex_count", c.vertex_count},
                           {"edge_count", c.edge_count},
                           {"max_edge_multiplicity", c.max_edge_multiplicity},
                           {"rank", k2_component_rank(c.vertex_count, c.edge_count).str()}});
        j["components"] = comps;
      } else {
        GadgetSpec spec;
        if (g_sun->parsed()) spec = Sunflower{g_d, g_k};
        else if (g_n3->parsed()) spec = Nosegay3{g_a, g_b, g_c};
        else if (g_nh->parsed()) spec = NosegayHang{g_a, g_b, g_c};
        else spec = NosegayK{g_dvec, g_k};
        j["gadget"] = to_json(spec);
        j.update(to_json(gadget_rank(spec)));
        if (g_nk->parsed()) j["upper_bound_only"] = true;
      }
      emit(out, j, format);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto cases = verify_gadgets(verify_options);
      Json list = Json::array();
      std::size_t mismatches = 0, reported = 0;
      for (const auto& c : cases) {
        if (!c.match()) (c.asserted ? mismatches : reported) += 1;
        list.push_back({{"family", gadget_name(c.gadget)},
                        {"params", gadget_params(c.gadget)},
                        {"qubits", c.qubits},
                        {"formula", c.formula.str()},
                        {"oracle", c.oracle},
                        {"asserted", c.asserted},
                        {"match", c.match()}});
      }
      Json j;
      j["params"] = {{"max_size", verify_options.max_qubits},
                     {"trials", verify_options.trials},
                     {"seed", verify_options.seed}};
      j["checked"] = cases.size();
      j["mismatches"] = mismatches;
      j["unasserted_mismatches"] = reported;
      j["all_match"] = mismatches == 0;
      j["cases"] = list;
      emit(out, j, format);
      return mismatches == 0 ? kExitOk : kExitNumerical;
    }

    if (peel_cmd->parsed()) {
      if (!(peel_alpha >= 0.0)) throw UsageError("--alpha must be nonnegative");
      const auto m = static_cast<std::size_t>(std::llround(peel_alpha * static_cast<double>(peel_n)));
      const Hypergraph g = random_hypergraph(peel_n, m, static_cast<std::size_t>(peel_k),
                                             derive_seed(peel_seed, 0));
      const PeelTrace trace = peel_gadget == "sunflower"
                                  ? sunflower_peel(g, derive_seed(peel_seed, 1))
                                  : nosegay_peel(g, derive_seed(peel_seed, 1));
      if (!trace_path.empty()) {
        std::ofstream csv(trace_path);
        if (!csv) throw UsageError("cannot write trace file '" + trace_path + "'");
        write_trace_csv(csv, trace);
      }
      Json j;
      j["algorithm"] = to_string(trace.algorithm);
      j.update(to_json(empirical_log_rank(trace)));
      j["params"] = {{"n", peel_n}, {"m", m}, {"alpha", peel_alpha}, {"k", peel_k},
                     {"seed", peel_seed}};
      j["trace"] = trace_path.empty() ? Json(nullptr) : Json(trace_path);
      emit(out, j, format);
      return kExitOk;
    }

    if (bound_cmd->parsed()) {
      const auto* sub = bound_cmd->get_subcommands().front();
      const BoundMethod method = parse_method(sub->get_name());
      BoundReport r;
      switch (method) {
        case BoundMethod::Sunflower:
          r = sunflower_bound(b_alpha, b_k, b_dmax, b_points > 0 ? b_points : kDefaultDensityPanels);
          break;
        case BoundMethod::Nosegay:
          if (b_k != 3) throw UsageError("the nosegay bound is defined for k = 3 only");
          r = nosegay_bound(b_alpha, b_trunc, b_points > 0 ? b_points : kDefaultNosegayPanels);
          break;
        case BoundMethod::GeneralK: r = general_k_bound(b_alpha, b_k); break;
        case BoundMethod::SingleClause: r = single_clause_bound(b_alpha, b_k); break;
      }
      emit(out, to_json(r), format);
      return kExitOk;
    }

    if (threshold_cmd->parsed()) {
      const auto* sub = threshold_cmd->get_subcommands().front();
      const BoundMethod method = parse_method(sub->get_name());
      ThresholdOptions options;
      options.d_max = t_dmax;
      options.poisson_truncation = t_trunc;
      options.quadrature_points = t_points;
      Json j;
      j["method"] = to_string(method);
      j["k"] = t_k;
      j["alpha_root"] = threshold_root(method, t_k, options);
      j["params"] = {{"d_max", t_dmax ? Json(*t_dmax) : Json("adaptive")},
                     {"poisson_truncation", t_trunc},
                     {"quadrature_points", t_points},
                     {"precision", 1e-4}};
      emit(out, j, format);
      return kExitOk;
    }
  } catch (const NumericalInstability& e) {
    err << "qsat: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const UsageError& e) {
    err << "qsat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "qsat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "qsat: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "qsat: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace qsat::cli
