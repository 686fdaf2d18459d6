#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dijoins/types.hpp"

namespace dijoins {

struct Arc {
  ArcId id;
  NodeId tail;
  NodeId head;
  Weight weight;
};

// Directed multigraph with nonnegative integer arc weights. Parallel and
// antiparallel arcs are allowed, self-loops are not. Node iteration order is
// ascending id, arc iteration order is insertion order; both are stable, so
// every algorithm built on top is deterministic.
class WeightedDigraph {
 public:
  WeightedDigraph() = default;

  // Adding an existing node is a no-op.
  void add_node(NodeId v);

  // Mints the next unused arc id. Endpoints must exist, tail != head,
  // weight >= 0.
  ArcId add_arc(NodeId tail, NodeId head, Weight weight);

  // Same checks as add_arc, plus the id must be unused.
  void add_arc_with_id(ArcId id, NodeId tail, NodeId head, Weight weight);

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  bool has_node(NodeId v) const;
  bool has_arc(ArcId id) const;
  const Arc& arc(ArcId id) const;
  Weight weight(ArcId id) const { return arc(id).weight; }
  void set_weight(ArcId id, Weight w);
  Weight total_weight() const;

  std::vector<ArcId> out_arcs(NodeId v) const;
  std::vector<ArcId> in_arcs(NodeId v) const;

 private:
  std::vector<NodeId> nodes_;                     // sorted ascending
  std::vector<Arc> arcs_;                         // insertion order
  std::unordered_map<ArcId, std::size_t> index_;  // arc id -> position
  ArcId next_id_ = 0;
};

// Simple undirected graph used for chordality work. Neighbor lists are kept
// sorted; iteration over nodes and neighbors is ascending id.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::vector<NodeId> nodes);

  void add_node(NodeId v);
  // Parallel edges collapse; self-loops are rejected.
  void add_edge(NodeId x, NodeId y);

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const;
  bool has_node(NodeId v) const;
  bool adjacent(NodeId x, NodeId y) const;
  const std::vector<NodeId>& neighbors(NodeId v) const;

 private:
  int index(NodeId v) const;  // -1 if absent

  std::vector<NodeId> nodes_;             // sorted ascending
  std::vector<std::vector<NodeId>> adj_;  // aligned with nodes_, each sorted
};

// Reverses every arc; node set, arc ids and weights are unchanged. Dicuts
// keep their arc sets under reversal (shores complement), so dijoins and
// packings transfer verbatim.
WeightedDigraph reverse(const WeightedDigraph& g);

// Removes v and every arc incident to it. Remaining ids are unchanged.
WeightedDigraph delete_vertex(const WeightedDigraph& g, NodeId v);

struct CondensationResult {
  // Acyclic, loop-free and simple: parallel arcs between two components are
  // merged into one arc carrying the summed weight.
  WeightedDigraph condensed;
  // Original node -> representative of its strongly connected component.
  // The representative is the smallest node id in the component.
  std::map<NodeId, NodeId> node_map;
  // Condensed arc -> the original arcs it merged, ascending id, with their
  // individual weights. Arcs inside a component appear in no entry.
  std::map<ArcId, std::vector<std::pair<ArcId, Weight>>> arc_map;
};

CondensationResult condense(const WeightedDigraph& g);

// Forgets orientation, weights and multiplicities.
UndirectedGraph underlying_adjacency(const WeightedDigraph& g);

}  // namespace dijoins
