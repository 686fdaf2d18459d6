#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dijoins/graph.hpp"
#include "dijoins/types.hpp"

namespace dijoins {

/// The neighborhood of a simplicial vertex, laid out for elimination. In an
/// acyclic orientation a clique has a unique topological order; the arcs
/// between `vertex` and the clique split into in-arcs from a prefix of that
/// order and out-arcs to the suffix.
struct TournamentOrder {
  NodeId vertex = 0;
  std::vector<NodeId> order;    // topological order of the neighbors
  int split = 0;                // order[0..split) point at vertex, the rest away
  std::vector<Weight> weights;  // weight of the arc joining vertex and order[i]
  std::vector<ArcId> arcs;      // id of that arc, aligned with order
};

/// Computes the tournament order around a simplicial vertex of an acyclic
/// digraph. Throws invalid_input when the neighborhood is not a clique, is
/// not oriented as a tournament with the in-neighbors first, or when some
/// neighbor is joined to `vertex` by more than one arc.
TournamentOrder tournament_order(const WeightedDigraph& g, NodeId vertex);

/// Weight vector rebalanced around a pivot so the in-side and out-side sums
/// match. values[i] = weights[i] outside the window [split, pivot); the
/// window is zeroed except for the pivot entry, which absorbs the difference.
struct BalancedWeights {
  int pivot = 0;  // == size when every weight is zero and split == size
  std::vector<Weight> values;
};

/// Requires sum(weights[0..split)) <= sum(weights[split..)); callers reverse
/// the digraph first when it fails. The pivot is the smallest index >= split
/// whose suffix sum drops to at most the in-side sum.
BalancedWeights balance_weights(std::span<const Weight> weights, int split);

/// One cell of a bipartite multiplicity assignment between in-side rows and
/// out-side columns.
struct MatchingEntry {
  int row = 0;     // < split
  int col = 0;     // >= split
  Weight amount = 0;
};

/// Northwest-corner greedy assignment: rows and columns are saturated in
/// index order, so the support is staircase-shaped and acyclic with at most
/// rows + columns - 1 cells. Requires equal row and column totals.
std::vector<MatchingEntry> greedy_matching(std::span<const Weight> values,
                                           int split);

/// Weight increase scheduled on one clique arc when its shared simplicial
/// neighbor is removed.
struct CliqueAdjustment {
  int row = 0;        // index of the arc's tail in the tournament order
  int col = 0;        // index of the head
  ArcId arc = 0;
  Weight base = 0;    // weight before the step
  Weight delta = 0;   // increase carried by the reduced instance, > 0
};

/// Arc from the first out-side clique node to a later clique node, recorded
/// when the removed vertex's star is itself a dicut; mapping back needs them
/// to normalize dijoins that use several of these interchangeable arcs.
struct FirstRowArc {
  int col = 0;
  ArcId arc = 0;
  Weight base = 0;
};

/// Everything mapping_back needs to know about one elimination: the
/// tournament, the rebalanced star weights, the bipartite assignment, and
/// the resulting clique-arc increases.
struct EliminationStep {
  TournamentOrder tournament;
  bool reversed = false;  // whole digraph reversed just before this step
  int pivot = 0;
  std::vector<Weight> balanced;
  std::vector<MatchingEntry> matching;
  std::vector<CliqueAdjustment> adjustments;  // lexicographic (row, col)
  std::vector<FirstRowArc> first_row;         // filled iff star is a dicut
  bool vertex_star_is_dicut = false;
};

/// Builds the elimination step for `vertex` on the current digraph. Requires
/// the in-side weight sum to be at most the out-side sum (reverse the whole
/// digraph first otherwise); `reversed` records whether that happened.
EliminationStep make_elimination_step(const WeightedDigraph& g, NodeId vertex,
                                      bool reversed);

/// Applies the step's clique-arc increases to the digraph that no longer
/// contains the eliminated vertex. Throws invalid_input when an arc's weight
/// does not match the recorded base.
void transfer_weights(WeightedDigraph& g, const EliminationStep& step);

struct PackingEntry {
  std::vector<ArcId> arcs;  // sorted ascending, duplicates impossible
  Weight multiplicity = 0;  // positive
};

/// A collection of distinct dijoins with multiplicities. tau is nullopt when
/// the digraph has no dicut at all (strongly connected condensation), in
/// which case every arc set is vacuously a dijoin and packing is meaningless.
struct Packing {
  std::optional<Weight> tau;
  std::vector<PackingEntry> entries;  // sorted by arc set, lexicographic

  Weight total_multiplicity() const;
};

/// Rewrites a packing of the reduced digraph (vertex deleted, weights
/// transferred) into a packing of the digraph before the step, moving
/// multiplicity off over-loaded clique arcs onto the deleted vertex's star
/// and, when that star is a dicut, threading a star arc through every dijoin
/// that misses it. Throws verification_failure if a capacity cannot be met,
/// which would mean the step data is inconsistent.
Packing mapping_back(const Packing& reduced, const EliminationStep& step);

struct PackOptions {
  // Re-derive the two per-step guarantees (reduced instances keep minimum
  // dicut weight >= tau; every reduced dicut extends to an original dicut)
  // by exhaustive enumeration. Exponential; intended for small instances.
  bool verify_steps = false;
  // Node-count ceiling for exhaustive dicut enumeration wherever it is used.
  int enumeration_bound = 24;
};

struct PackStats {
  std::size_t condensed_nodes = 0;
  std::size_t condensed_arcs = 0;
  std::size_t elimination_steps = 0;
  std::size_t reversals = 0;
  std::size_t support_condensed = 0;  // distinct dijoins before lifting
  std::size_t steps_verified = 0;
};

/// Packs tau dijoins in a weighted digraph whose condensation has a chordal
/// underlying graph: condense, peel simplicial vertices while transferring
/// star weight onto the clique, then map the trivial packing back out step
/// by step and lift it through the condensation. The result always passes
/// validate_packing; a failure there throws verification_failure.
/// Throws not_chordal (with a witness cycle) when the condensation's
/// underlying graph is not chordal and the answer is not degenerate.
Packing pack_dijoins(const WeightedDigraph& g, const PackOptions& options = {},
                     PackStats* stats = nullptr);

/// Per-invariant outcome of checking a packing against its instance.
struct PackingInvariantReport {
  bool tau_matches_min_dicut = false;
  bool multiplicities_sum_to_tau = false;
  bool entries_distinct = false;
  bool all_entries_are_dijoins = false;
  bool capacities_respected = false;
  bool support_within_bound = false;  // distinct dijoins <= arcs - nodes + 2
  std::string detail;                 // first failure, empty when all pass

  bool ok() const {
    return tau_matches_min_dicut && multiplicities_sum_to_tau &&
           entries_distinct && all_entries_are_dijoins &&
           capacities_respected && support_within_bound;
  }
};

/// Checks every packing invariant against g. Unknown arc ids or nonpositive
/// multiplicities are invalid_input (the packing does not parse against the
/// instance); genuine invariant violations are reported, not thrown.
PackingInvariantReport validate_packing(const WeightedDigraph& g,
                                        const Packing& packing,
                                        int enumeration_bound = 24);

}  // namespace dijoins
