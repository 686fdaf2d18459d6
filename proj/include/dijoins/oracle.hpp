#pragma once

#include <optional>
#include <vector>

#include "dijoins/graph.hpp"
#include "dijoins/types.hpp"

namespace dijoins {

struct OracleOptions {
  long long budget = 100'000'000;  // backtracking candidates before giving up
  int enumeration_bound = 24;      // node ceiling for the dicut list
};

struct OracleResult {
  bool feasible = false;
  // When feasible: exactly k arc sets (possibly repeated), each a dijoin,
  // jointly respecting every arc's weight as a usage cap.
  std::vector<std::vector<ArcId>> dijoins;
};

/// Exhaustively decides whether k dijoins can be packed within the arc
/// weights, by assigning each arc of the condensation the subset of dijoins
/// it joins and demanding that every dicut's subsets cover all k of them.
/// Exact but exponential: intended for tiny instances and fixtures. Throws
/// resource_limit when the candidate budget or the enumeration bound is
/// exceeded, invalid_input when k < 1.
OracleResult can_pack(const WeightedDigraph& g, Weight k,
                      const OracleOptions& options = {});

/// Largest k for which can_pack succeeds: tries k = tau, tau-1, ... and
/// returns the first feasible size (0 when tau = 0). nullopt when the graph
/// has no dicut at all, in which case packing size is unbounded.
std::optional<Weight> max_packing_size(const WeightedDigraph& g,
                                       const OracleOptions& options = {});

}  // namespace dijoins
