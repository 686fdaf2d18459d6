#pragma once

#include <optional>
#include <span>
#include <vector>

#include "dijoins/graph.hpp"
#include "dijoins/types.hpp"

namespace dijoins {

/// A directed cut: the arcs leaving a shore U that no arc enters.
struct Dicut {
  std::vector<NodeId> shore;  // sorted ascending, nonempty, proper
  std::vector<ArcId> arcs;    // delta^+(shore), sorted ascending
  Weight weight = 0;
};

/// Outcome of checking a candidate shore. Exactly one reason applies; on
/// `ok` the dicut is filled in, otherwise `entering` names a witness arc
/// when the reason is an arc entering the shore.
struct DicutCheck {
  enum class Reason { ok, empty_shore, full_shore, entering_arc };

  std::optional<Dicut> dicut;
  Reason reason = Reason::ok;
  std::optional<ArcId> entering;
};

/// Checks whether delta^+(shore) is a dicut. Unknown nodes in the shore are
/// an invalid_input error; duplicates are tolerated.
DicutCheck is_dicut(const WeightedDigraph& g, std::span<const NodeId> shore);

/// All dicuts of an acyclic digraph, one per predecessor-closed nonempty
/// proper node subset, in a fixed deterministic order. Throws invalid_input
/// on cyclic graphs and resource_limit when the node count exceeds `bound`.
std::vector<Dicut> enumerate_dicuts(const WeightedDigraph& g, int bound = 24);

struct MinDicutResult {
  Weight weight = 0;
  std::vector<NodeId> shore;  // in the original graph's nodes
  std::vector<ArcId> arcs;
};

/// Minimum-weight dicut, or nullopt when none exists (strongly connected
/// condensation, including the single-node and empty cases). Condenses
/// internally; at most `bound` condensed nodes are enumerated exhaustively,
/// larger inputs switch to a max-flow formulation whose infinite-capacity
/// reverse arcs force shores to be predecessor-closed.
std::optional<MinDicutResult> min_dicut_weight(const WeightedDigraph& g,
                                               int bound = 24);

/// True iff `arcs` meets every dicut, tested as strong connectivity of g
/// augmented with a reversed copy of each listed arc. Unknown ids are an
/// invalid_input error; duplicates are tolerated.
bool is_dijoin(const WeightedDigraph& g, std::span<const ArcId> arcs);

}  // namespace dijoins
