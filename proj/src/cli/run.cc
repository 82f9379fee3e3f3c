// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matroidkit/cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "matroidkit/greedoid.h"
#include "matroidkit/greedy.h"
#include "matroidkit/intersect.h"

namespace matroidkit::cli {
namespace {

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

template <typename Parser>
auto Load(const std::string& path, Parser parse) {
  const std::string text = ReadFile(path);
  try {
    return parse(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

const char* YesNo(bool value) { return value ? "yes" : "no"; }

std::vector<std::string> SplitCommas(const std::string& list) {
  std::vector<std::string> names;
  std::istringstream in(list);
  for (std::string name; std::getline(in, name, ',');) names.push_back(name);
  return names;
}

Order OrderOrCanonical(const Carrier& carrier, const std::string& order) {
  if (order.empty()) return CanonicalOrder(carrier.size());
  return OrderFromNames(carrier, SplitCommas(order));
}

void Analyze(const std::string& path, std::ostream& out) {
  const ExplicitSetSystem sys = Load(path, ParseSetSystem);
  const AxiomReport axioms = CheckAxioms(sys);
  const GreedoidReport greedoid = ClassifyGreedoid(sys);
  out << "independence_system: " << YesNo(axioms.is_independence_system) << '\n';
  out << "matroid: " << YesNo(axioms.is_matroid) << '\n';
  out << "greedoid: " << YesNo(greedoid.is_greedoid) << '\n';
  out << "accessible: " << YesNo(greedoid.is_accessible) << '\n';
  out << "antimatroid: " << YesNo(greedoid.is_antimatroid) << '\n';
  out << "sep: " << (greedoid.has_sep ? YesNo(*greedoid.has_sep) : "n-a") << '\n';
  if (sys.family_size() == 0) {
    out << "rank: n-a\nlower_rank: n-a\n";
  } else {
    const RankPair ranks = RankPairOf(sys, sys.carrier().FullSet());
    out << "rank: " << ranks.upper << '\n';
    out << "lower_rank: " << ranks.lower << '\n';
  }
  out << "rank_quotient: "
      << (axioms.is_independence_system ? FormatRational(RankQuotient(sys)) : "n-a") << '\n';
}

void PrintDual(const std::string& path, std::ostream& out) {
  out << FormatSetSystem(Dual(Load(path, ParseSetSystem)));
}

void Greedy(const std::string& path, const std::string& costs_path, const std::string& order,
            std::ostream& out) {
  const ExplicitSetSystem sys = Load(path, ParseSetSystem);
  const WeightFn cost = WeightFn::FromNamed(sys.carrier(), Load(costs_path, ParseCosts));
  const Order o = OrderOrCanonical(sys.carrier(), order);
  if (!IsIndependenceSystem(sys)) {
    throw ContractError("greedy requires an independence system");
  }
  const GreedyRun run = BestInGreedy(sys.ToOracle(), cost, o);
  out << "result: " << FormatElements(sys.carrier(), run.result) << '\n';
  out << "weight: " << FormatRational(cost.Cost(run.result)) << '\n';
}

void Intersect(const std::string& first_path, const std::string& second_path,
               std::ostream& out) {
  const ExplicitSetSystem first = Load(first_path, ParseSetSystem);
  const ExplicitSetSystem second = Load(second_path, ParseSetSystem);
  if (!CheckAxioms(first).is_matroid) throw ContractError(first_path + " is not a matroid");
  if (!CheckAxioms(second).is_matroid) throw ContractError(second_path + " is not a matroid");
  const DoubleMatroid dm(first.ToOracle(), second.ToOracle());
  const IntersectionState state =
      MatroidIntersection(dm, {GraphConstruction::kAuto, ContractChecks::kOn});
  const ElementSet q = OptimalityCertificate(dm, state.sol);
  out << "result: " << FormatElements(dm.carrier(), state.sol) << '\n';
  out << "size: " << state.sol.size() << '\n';
  out << "certificate: " << FormatElements(dm.carrier(), q) << '\n';
  out << "certificate_value: " << CertificateValue(dm, q) << '\n';
}

void PrintTree(const UndirectedGraph& g, const ElementSet& edges, std::ostream& out) {
  out << "result: " << FormatElements(g.edge_carrier(), edges) << '\n';
  out << "weight: " << FormatRational(g.Weight(edges)) << '\n';
}

void RunKruskal(const std::string& path, bool min, const std::string& order,
                std::ostream& out) {
  const UndirectedGraph g = Load(path, ParseGraph);
  const Order o = OrderOrCanonical(g.edge_carrier(), order);
  PrintTree(g, Kruskal(g, min ? Direction::kMin : Direction::kMax, o), out);
}

void RunPrim(const std::string& path, const std::string& root, bool min,
             const std::string& order, std::ostream& out) {
  const UndirectedGraph g = Load(path, ParseGraph);
  const Order o = OrderOrCanonical(g.edge_carrier(), order);
  PrintTree(g, Prim(g, root, min ? Direction::kMin : Direction::kMax, o), out);
}

void Bimatch(const std::string& path, std::ostream& out) {
  const BipartiteGraph b = Load(path, ParseBipartite);
  const ElementSet m = MaxBipartiteMatching(b);
  out << "result: " << FormatElements(b.edge_carrier(), m) << '\n';
  out << "size: " << m.size() << '\n';
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matroid, greedoid and matroid-intersection toolkit", "matroidkit"};
  app.require_subcommand(1);

  std::string input;
  std::string second_input;
  std::string costs;
  std::string order;
  std::string root;
  bool min = false;

  CLI::App* analyze = app.add_subcommand("analyze", "Classify a set system and report ranks");
  analyze->add_option("setsys", input, "Set-system file")->required();

  CLI::App* dual = app.add_subcommand("dual", "Print the dual set system");
  dual->add_option("setsys", input, "Set-system file")->required();

  CLI::App* greedy = app.add_subcommand("greedy", "Best-In-Greedy on a set system");
  greedy->add_option("setsys", input, "Set-system file")->required();
  greedy->add_option("--costs", costs, "Cost file")->required();
  greedy->add_option("--order", order, "Comma-separated element order");

  CLI::App* intersect = app.add_subcommand("intersect", "Maximum common independent set");
  intersect->add_option("setsys1", input, "First matroid")->required();
  intersect->add_option("setsys2", second_input, "Second matroid")->required();

  CLI::App* kruskal = app.add_subcommand("kruskal", "Optimal spanning forest");
  kruskal->add_option("graph", input, "Graph file")->required();
  kruskal->add_flag("--min", min, "Minimise instead of maximise");
  kruskal->add_option("--order", order, "Comma-separated edge order");

  CLI::App* prim = app.add_subcommand("prim", "Optimal spanning tree of the root's component");
  prim->add_option("graph", input, "Graph file")->required();
  prim->add_option("--root", root, "Root vertex")->required();
  prim->add_flag("--min", min, "Minimise instead of maximise");
  prim->add_option("--order", order, "Comma-separated edge order");

  CLI::App* bimatch = app.add_subcommand("bimatch", "Maximum bipartite matching");
  bimatch->add_option("bipartite", input, "Bipartite graph file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    if (analyze->parsed()) {
      Analyze(input, out);
    } else if (dual->parsed()) {
      PrintDual(input, out);
    } else if (greedy->parsed()) {
      Greedy(input, costs, order, out);
    } else if (intersect->parsed()) {
      Intersect(input, second_input, out);
    } else if (kruskal->parsed()) {
      RunKruskal(input, min, order, out);
    } else if (prim->parsed()) {
      RunPrim(input, root, min, order, out);
    } else if (bimatch->parsed()) {
      Bimatch(input, out);
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace matroidkit::cli
