#pragma once

#include <span>
#include <vector>

#include "dijoins/graph.hpp"
#include "dijoins/types.hpp"

namespace dijoins {

/// A tentative elimination order produced by maximum-cardinality search.
/// For chordal graphs it is a perfect elimination order; for non-chordal
/// graphs it is still a permutation of the nodes, just not a perfect one.
struct EliminationOrder {
  std::vector<NodeId> order;
};

/// Runs maximum-cardinality search and returns the visit order reversed,
/// which is the candidate elimination order. Ties are broken toward the
/// smallest node id so results are reproducible.
EliminationOrder maximum_cardinality_search(const UndirectedGraph& g);

/// True iff for each node its neighbors that appear later in the order form
/// a clique.
bool is_perfect_elimination_order(const UndirectedGraph& g,
                                  std::span<const NodeId> order);

bool is_chordal(const UndirectedGraph& g);

/// Returns a node whose neighborhood is a clique. Throws not_chordal (with a
/// witness cycle attached) if the graph has none, which for MCS orders can
/// only happen on non-chordal graphs.
NodeId find_simplicial_vertex(const UndirectedGraph& g);

/// Returns a chordless cycle of length >= 4 in vertex order, or an empty
/// vector when the graph is chordal.
std::vector<NodeId> find_chordless_cycle(const UndirectedGraph& g);

}  // namespace dijoins
