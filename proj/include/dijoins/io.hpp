#pragma once

#include <string>
#include <vector>

#include "dijoins/graph.hpp"
#include "dijoins/packing.hpp"
#include "dijoins/types.hpp"

namespace dijoins {

/// A digraph together with the user-facing node names from its file. Node
/// ids are the positions in the name list, so names[id] is the name of id.
struct Instance {
  WeightedDigraph graph;
  std::vector<std::string> node_names;

  NodeId node_by_name(const std::string& name) const;
  const std::string& name_of(NodeId v) const;
};

/// Instance with nodes named "0", "1", ... matching their ids; used when a
/// graph is produced in memory rather than parsed.
Instance name_by_id(const WeightedDigraph& g);

/// Parses the versioned JSON graph document: format "dijoins-graph/1",
/// nodes as a list of unique strings, arcs as records of tail and head
/// names, a nonnegative integer weight, and an optional explicit id
/// (defaulting to the record's position). Malformed documents, unknown
/// names, duplicate ids, self-loops and negative weights all raise
/// invalid_input.
Instance parse_graph_json(const std::string& text);

/// Canonical serialization: sorted object keys, two-space indent, trailing
/// newline, arcs in insertion order with explicit ids. Parsing the output
/// reproduces the instance; writing it again reproduces the bytes.
std::string write_graph_json(const Instance& instance);

/// Parses the JSON packing document: format "dijoins-packing/1", tau as a
/// nonnegative integer or null (no dicut), dijoins as records of an arc-id
/// list and a positive multiplicity.
Packing parse_packing_json(const std::string& text);

std::string write_packing_json(const Packing& packing);

}  // namespace dijoins
