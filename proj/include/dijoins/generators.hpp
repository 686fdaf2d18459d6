#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dijoins/graph.hpp"
#include "dijoins/types.hpp"

namespace dijoins {

struct ChordalParams {
  int n = 1;
  double density = 0.5;      // in [0, 1]; clique growth acceptance rate
  Weight max_weight = 1;     // weights drawn uniformly from [0, max_weight]
  std::uint64_t seed = 0;
  bool unweighted = false;   // force every weight to 1
};

/// Random digraph whose underlying graph is chordal by construction: each
/// new node is attached to a clique grown inside an existing node's closed
/// neighborhood, and every edge is oriented along one global random node
/// permutation, so the result is also acyclic and weakly connected. The
/// same parameters always produce the same graph, on any platform.
WeightedDigraph random_chordal_digraph(const ChordalParams& params);

/// A shipped counterexample instance: a digraph whose underlying graph is
/// not chordal and whose dijoins pack below the minimum dicut weight. The
/// expected values are part of the fixture.
struct Fixture {
  std::string name;
  WeightedDigraph graph;
  Weight min_dicut = 0;
  Weight max_packing = 0;
};

const std::vector<std::string>& fixture_names();

/// Throws invalid_input for unknown names.
Fixture load_fixture(const std::string& name);

}  // namespace dijoins
