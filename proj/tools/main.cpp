#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dijoins/chordal.hpp"
#include "dijoins/dicut.hpp"
#include "dijoins/errors.hpp"
#include "dijoins/generators.hpp"
#include "dijoins/graph.hpp"
#include "dijoins/io.hpp"
#include "dijoins/oracle.hpp"
#include "dijoins/packing.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw dijoins::invalid_input("cannot open \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dijoins::invalid_input("cannot write \"" + path + "\"");
  out << text;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

std::vector<std::string> names_of(const dijoins::Instance& instance,
                                  const std::vector<dijoins::NodeId>& nodes) {
  std::vector<std::string> names;
  for (dijoins::NodeId v : nodes) names.push_back(instance.name_of(v));
  return names;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " ";
    out += parts[i];
  }
  return out;
}

std::string join_ids(const std::vector<dijoins::ArcId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(ids[i]);
  }
  return out;
}

struct CheckChordalCmd {
  std::string file;
  bool as_json = false;

  int run() const {
    dijoins::Instance instance = dijoins::parse_graph_json(read_file(file));
    dijoins::UndirectedGraph skeleton =
        dijoins::underlying_adjacency(instance.graph);
    dijoins::EliminationOrder order =
        dijoins::maximum_cardinality_search(skeleton);
    bool chordal = dijoins::is_perfect_elimination_order(skeleton, order.order);
    if (as_json) {
      json doc;
      doc["chordal"] = chordal;
      if (chordal)
        doc["elimination_order"] = names_of(instance, order.order);
      else
        doc["chordless_cycle"] =
            names_of(instance, dijoins::find_chordless_cycle(skeleton));
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    if (chordal) {
      std::cout << "chordal: yes\n";
      std::cout << "elimination order: " << join(names_of(instance, order.order))
                << "\n";
    } else {
      std::cout << "chordal: no\n";
      std::cout << "chordless cycle: "
                << join(names_of(instance, dijoins::find_chordless_cycle(skeleton)))
                << "\n";
    }
    return 0;
  }
};

struct MinDicutCmd {
  std::string file;
  int enum_bound = 24;
  bool as_json = false;

  int run() const {
    dijoins::Instance instance = dijoins::parse_graph_json(read_file(file));
    std::optional<dijoins::MinDicutResult> result =
        dijoins::min_dicut_weight(instance.graph, enum_bound);
    if (as_json) {
      json doc;
      if (result) {
        doc["tau"] = result->weight;
        doc["shore"] = names_of(instance, result->shore);
        doc["arcs"] = result->arcs;
      } else {
        doc["tau"] = nullptr;
      }
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    if (!result) {
      std::cout << "no dicut: every arc set (including the empty set) is a "
                   "dijoin\n";
      return 0;
    }
    std::cout << "tau: " << result->weight << "\n";
    std::cout << "shore: " << join(names_of(instance, result->shore)) << "\n";
    std::cout << "arcs: " << join_ids(result->arcs) << "\n";
    return 0;
  }
};

struct PackCmd {
  std::string file;
  std::string out_path;
  bool verify_steps = false;
  int enum_bound = 24;
  bool as_json = false;

  int run() const {
    dijoins::Instance instance = dijoins::parse_graph_json(read_file(file));
    dijoins::PackOptions options;
    options.verify_steps = verify_steps;
    options.enumeration_bound = enum_bound;
    dijoins::PackStats stats;
    dijoins::Packing packing;
    try {
      packing = dijoins::pack_dijoins(instance.graph, options, &stats);
    } catch (const dijoins::not_chordal& e) {
      std::cerr << "error: " << e.what() << "\n";
      std::cerr << "cycle: " << join(names_of(instance, e.chordless_cycle()))
                << "\n";
      return 2;
    }
    std::string packing_json = dijoins::write_packing_json(packing);
    if (!out_path.empty()) write_file(out_path, packing_json);
    if (as_json) {
      std::cout << packing_json;
      return 0;
    }
    if (packing.tau)
      std::cout << "tau: " << *packing.tau << "\n";
    else
      std::cout << "no dicut: every arc set (including the empty set) is a "
                   "dijoin\n";
    std::cout << "condensed nodes: " << stats.condensed_nodes << "\n";
    std::cout << "condensed arcs: " << stats.condensed_arcs << "\n";
    std::cout << "elimination steps: " << stats.elimination_steps << "\n";
    std::cout << "reversals: " << stats.reversals << "\n";
    std::cout << "support: " << packing.entries.size() << "\n";
    std::cout << "packing:\n";
    for (const dijoins::PackingEntry& entry : packing.entries)
      std::cout << "  " << entry.multiplicity << "x: " << join_ids(entry.arcs)
                << "\n";
    return 0;
  }
};

struct VerifyCmd {
  std::string instance_file;
  std::string packing_file;
  int enum_bound = 24;
  bool as_json = false;

  int run() const {
    dijoins::Instance instance =
        dijoins::parse_graph_json(read_file(instance_file));
    dijoins::Packing packing =
        dijoins::parse_packing_json(read_file(packing_file));
    dijoins::PackingInvariantReport report =
        dijoins::validate_packing(instance.graph, packing, enum_bound);
    if (as_json) {
      json doc;
      doc["tau_matches_min_dicut"] = report.tau_matches_min_dicut;
      doc["multiplicities_sum_to_tau"] = report.multiplicities_sum_to_tau;
      doc["entries_distinct"] = report.entries_distinct;
      doc["all_entries_are_dijoins"] = report.all_entries_are_dijoins;
      doc["capacities_respected"] = report.capacities_respected;
      doc["support_within_bound"] = report.support_within_bound;
      doc["ok"] = report.ok();
      if (!report.detail.empty()) doc["detail"] = report.detail;
      std::cout << doc.dump(2) << "\n";
      return report.ok() ? 0 : 1;
    }
    auto line = [](const char* label, bool pass) {
      std::cout << label << ": " << (pass ? "pass" : "FAIL") << "\n";
    };
    line("tau matches minimum dicut", report.tau_matches_min_dicut);
    line("multiplicities sum to tau", report.multiplicities_sum_to_tau);
    line("entries distinct", report.entries_distinct);
    line("all entries are dijoins", report.all_entries_are_dijoins);
    line("capacities respected", report.capacities_respected);
    line("support within bound", report.support_within_bound);
    if (!report.detail.empty()) std::cout << "detail: " << report.detail << "\n";
    return report.ok() ? 0 : 1;
  }
};

struct GenCmd {
  int n = 1;
  double density = 0.5;
  dijoins::Weight max_weight = 1;
  std::uint64_t seed = 0;
  bool unweighted = false;
  std::string out_path;

  int run() const {
    dijoins::ChordalParams params;
    params.n = n;
    params.density = density;
    params.max_weight = max_weight;
    params.seed = seed;
    params.unweighted = unweighted;
    dijoins::WeightedDigraph g = dijoins::random_chordal_digraph(params);
    emit(dijoins::write_graph_json(dijoins::name_by_id(g)), out_path);
    return 0;
  }
};

struct FixtureCmd {
  std::string name;
  std::string out_path;

  int run() const {
    dijoins::Fixture fixture = dijoins::load_fixture(name);
    emit(dijoins::write_graph_json(dijoins::name_by_id(fixture.graph)),
         out_path);
    return 0;
  }
};

struct OracleCmd {
  std::string file;
  std::optional<dijoins::Weight> k;
  bool find_max = false;
  long long budget = 100'000'000;
  int enum_bound = 24;
  bool as_json = false;

  int run() const {
    dijoins::Instance instance = dijoins::parse_graph_json(read_file(file));
    dijoins::OracleOptions options;
    options.budget = budget;
    options.enumeration_bound = enum_bound;
    if (find_max) {
      std::optional<dijoins::Weight> best =
          dijoins::max_packing_size(instance.graph, options);
      if (as_json) {
        json doc;
        doc["max_packing_size"] = best ? json(*best) : json(nullptr);
        std::cout << doc.dump(2) << "\n";
      } else if (best) {
        std::cout << "max packing size: " << *best << "\n";
      } else {
        std::cout << "no dicut: packing size is unbounded\n";
      }
      return 0;
    }
    dijoins::OracleResult result =
        dijoins::can_pack(instance.graph, *k, options);
    if (as_json) {
      json doc;
      doc["k"] = *k;
      doc["feasible"] = result.feasible;
      if (result.feasible) doc["witness"] = result.dijoins;
      std::cout << doc.dump(2) << "\n";
      return 0;
    }
    std::cout << "k: " << *k << "\n";
    std::cout << "feasible: " << (result.feasible ? "yes" : "no") << "\n";
    if (result.feasible)
      for (const std::vector<dijoins::ArcId>& dijoin : result.dijoins)
        std::cout << "  dijoin: " << join_ids(dijoin) << "\n";
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"packing dijoins in weighted digraphs with chordal structure"};
  app.require_subcommand(1);

  CheckChordalCmd check_chordal;
  auto* check_app =
      app.add_subcommand("check-chordal",
                         "report whether the underlying graph is chordal");
  check_app->add_option("file", check_chordal.file, "graph JSON file")
      ->required();
  check_app->add_flag("--json", check_chordal.as_json, "machine output");

  MinDicutCmd min_dicut;
  auto* min_app = app.add_subcommand(
      "min-dicut", "minimum dicut weight and a minimizing shore");
  min_app->add_option("file", min_dicut.file, "graph JSON file")->required();
  min_app->add_option("--enum-bound", min_dicut.enum_bound,
                      "node ceiling for exhaustive enumeration");
  min_app->add_flag("--json", min_dicut.as_json, "machine output");

  PackCmd pack;
  auto* pack_app =
      app.add_subcommand("pack", "pack tau dijoins within the arc weights");
  pack_app->add_option("file", pack.file, "graph JSON file")->required();
  pack_app->add_option("--out", pack.out_path, "write the packing JSON here");
  pack_app->add_flag("--verify-steps", pack.verify_steps,
                     "exhaustively re-check every elimination step");
  pack_app->add_option("--enum-bound", pack.enum_bound,
                       "node ceiling for exhaustive enumeration");
  pack_app->add_flag("--json", pack.as_json, "print the packing JSON");

  VerifyCmd verify;
  auto* verify_app =
      app.add_subcommand("verify", "check a packing against its instance");
  verify_app->add_option("instance", verify.instance_file, "graph JSON file")
      ->required();
  verify_app->add_option("packing", verify.packing_file, "packing JSON file")
      ->required();
  verify_app->add_option("--enum-bound", verify.enum_bound,
                         "node ceiling for exhaustive enumeration");
  verify_app->add_flag("--json", verify.as_json, "machine output");

  GenCmd gen;
  auto* gen_app =
      app.add_subcommand("gen", "generate a random chordal instance");
  gen_app->add_option("--n", gen.n, "node count")->required();
  gen_app->add_option("--density", gen.density, "clique growth rate in [0,1]");
  gen_app->add_option("--max-weight", gen.max_weight,
                      "weights drawn uniformly from [0, max-weight]");
  gen_app->add_option("--seed", gen.seed, "RNG seed");
  gen_app->add_flag("--unweighted", gen.unweighted, "force all weights to 1");
  gen_app->add_option("--out", gen.out_path, "write the graph JSON here");

  FixtureCmd fixture;
  auto* fixture_app =
      app.add_subcommand("fixture", "emit a shipped counterexample instance");
  fixture_app->add_option("name", fixture.name, "fixture name")->required();
  fixture_app->add_option("--out", fixture.out_path,
                          "write the graph JSON here");

  OracleCmd oracle;
  auto* oracle_app = app.add_subcommand(
      "oracle", "brute-force packing feasibility on tiny instances");
  oracle_app->add_option("file", oracle.file, "graph JSON file")->required();
  auto* k_opt = oracle_app->add_option("--k", oracle.k, "target packing size");
  auto* max_opt = oracle_app->add_flag("--max", oracle.find_max,
                                       "find the maximum packing size");
  k_opt->excludes(max_opt);
  max_opt->excludes(k_opt);
  oracle_app->add_option("--budget", oracle.budget,
                         "backtracking candidate budget");
  oracle_app->add_option("--enum-bound", oracle.enum_bound,
                         "node ceiling for exhaustive enumeration");
  oracle_app->add_flag("--json", oracle.as_json, "machine output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*check_app) return check_chordal.run();
    if (*min_app) return min_dicut.run();
    if (*pack_app) return pack.run();
    if (*verify_app) return verify.run();
    if (*gen_app) return gen.run();
    if (*fixture_app) {
      return fixture.run();
    }
    if (*oracle_app) {
      if (!oracle.find_max && !oracle.k)
        throw dijoins::invalid_input("oracle needs --k or --max");
      return oracle.run();
    }
  } catch (const dijoins::not_chordal& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "cycle:";
    for (dijoins::NodeId v : e.chordless_cycle()) std::cerr << " " << v;
    std::cerr << "\n";
    return 2;
  } catch (const dijoins::invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dijoins::resource_limit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const dijoins::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
