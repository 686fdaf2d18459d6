#include "dijoins/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <utility>

#include "dijoins/errors.hpp"

namespace dijoins {

namespace {

// mt19937_64 output is fully specified by the standard; routing it through
// plain modulo (instead of std::uniform_int_distribution, whose mapping is
// implementation-defined) keeps generated instances identical everywhere.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

}  // namespace

WeightedDigraph random_chordal_digraph(const ChordalParams& params) {
  if (params.n < 1) throw invalid_input("need at least one node");
  if (params.density < 0.0 || params.density > 1.0)
    throw invalid_input("density must lie in [0, 1]");
  if (params.max_weight < 0)
    throw invalid_input("max_weight must be nonnegative");

  std::mt19937_64 rng(params.seed);
  const std::uint64_t accept =
      static_cast<std::uint64_t>(params.density * 1'000'000.0 + 0.5);

  // Undirected skeleton, built one simplicial node at a time.
  std::vector<std::vector<NodeId>> adjacency(params.n);
  auto adjacent = [&](NodeId x, NodeId y) {
    return std::find(adjacency[x].begin(), adjacency[x].end(), y) !=
           adjacency[x].end();
  };
  std::vector<std::pair<NodeId, NodeId>> edges;  // in creation order
  for (NodeId i = 1; i < params.n; ++i) {
    NodeId anchor = static_cast<NodeId>(rand_below(rng, i));
    std::vector<NodeId> clique{anchor};
    std::vector<NodeId> candidates = adjacency[anchor];
    std::sort(candidates.begin(), candidates.end());
    for (NodeId q : candidates) {
      bool joins_all = true;
      for (NodeId c : clique)
        if (c != q && !adjacent(q, c)) {
          joins_all = false;
          break;
        }
      if (joins_all && rand_below(rng, 1'000'000) < accept)
        clique.push_back(q);
    }
    std::sort(clique.begin(), clique.end());
    for (NodeId c : clique) {
      adjacency[i].push_back(c);
      adjacency[c].push_back(i);
      edges.emplace_back(i, c);
    }
  }

  // One global random order settles every edge's direction, so the digraph
  // is acyclic outright.
  std::vector<int> position(params.n);
  for (int i = 0; i < params.n; ++i) position[i] = i;
  for (int i = params.n - 1; i > 0; --i)
    std::swap(position[i],
              position[static_cast<int>(rand_below(rng, i + 1))]);

  WeightedDigraph g;
  for (NodeId v = 0; v < params.n; ++v) g.add_node(v);
  for (const auto& [x, y] : edges) {
    NodeId tail = position[x] < position[y] ? x : y;
    NodeId head = tail == x ? y : x;
    Weight w = params.unweighted
                   ? 1
                   : static_cast<Weight>(rand_below(
                         rng, static_cast<std::uint64_t>(params.max_weight) + 1));
    g.add_arc(tail, head, w);
  }
  return g;
}

namespace {

struct FixtureData {
  const char* name;
  Weight min_dicut;
  Weight max_packing;
  int nodes;
  // tail, head, weight triples
  std::vector<std::array<int, 3>> arcs;
};

const std::vector<FixtureData>& fixture_table() {
  static const std::vector<FixtureData> table = {
      {"schrijver", 2, 1, 0, {}},  // placeholder, filled in below
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const FixtureData& f : fixture_table()) out.emplace_back(f.name);
    return out;
  }();
  return names;
}

Fixture load_fixture(const std::string& name) {
  for (const FixtureData& data : fixture_table()) {
    if (name != data.name) continue;
    Fixture fixture;
    fixture.name = data.name;
    fixture.min_dicut = data.min_dicut;
    fixture.max_packing = data.max_packing;
    for (NodeId v = 0; v < data.nodes; ++v) fixture.graph.add_node(v);
    for (const auto& [tail, head, weight] : data.arcs)
      fixture.graph.add_arc(tail, head, weight);
    return fixture;
  }
  throw invalid_input("unknown fixture \"" + name + "\"");
}

}  // namespace dijoins
