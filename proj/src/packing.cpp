#include "dijoins/packing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>

#include "dijoins/chordal.hpp"
#include "dijoins/dicut.hpp"
#include "dijoins/errors.hpp"

namespace dijoins {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

Weight sum_range(std::span<const Weight> values, int from, int to) {
  Weight sum = 0;
  for (int i = from; i < to; ++i) sum += values[i];
  return sum;
}

}  // namespace

TournamentOrder tournament_order(const WeightedDigraph& g, NodeId vertex) {
  if (!g.has_node(vertex))
    throw invalid_input("unknown node " + node_str(vertex));

  // Arcs joining `vertex` to each neighbor; exactly one per neighbor.
  std::map<NodeId, ArcId> star;
  std::set<NodeId> in_side;
  for (const Arc& a : g.arcs()) {
    if (a.tail != vertex && a.head != vertex) continue;
    NodeId other = a.tail == vertex ? a.head : a.tail;
    if (!star.emplace(other, a.id).second)
      throw invalid_input("nodes " + node_str(vertex) + " and " +
                          node_str(other) +
                          " are joined by more than one arc");
    if (a.head == vertex) in_side.insert(other);
  }

  // One arc per neighbor pair, all pointing the same way as the order.
  std::vector<NodeId> neighbors;
  for (const auto& [other, id] : star) neighbors.push_back(other);
  std::map<std::pair<NodeId, NodeId>, int> between;  // directed pair -> count
  for (const Arc& a : g.arcs()) {
    if (a.tail == vertex || a.head == vertex) continue;
    if (star.count(a.tail) && star.count(a.head)) ++between[{a.tail, a.head}];
  }
  std::map<NodeId, int> out_degree;
  for (NodeId x : neighbors) out_degree[x] = 0;
  for (std::size_t i = 0; i < neighbors.size(); ++i)
    for (std::size_t j = i + 1; j < neighbors.size(); ++j) {
      NodeId x = neighbors[i];
      NodeId y = neighbors[j];
      int forward = between.count({x, y}) ? between[{x, y}] : 0;
      int backward = between.count({y, x}) ? between[{y, x}] : 0;
      if (forward + backward == 0)
        throw invalid_input("node " + node_str(vertex) +
                            " is not simplicial: neighbors " + node_str(x) +
                            " and " + node_str(y) + " are not adjacent");
      if (forward + backward > 1)
        throw invalid_input("neighbors " + node_str(x) + " and " +
                            node_str(y) + " are joined by more than one arc");
      ++out_degree[forward ? x : y];
    }

  // An acyclically oriented clique is a transitive tournament, so the
  // out-degrees within the clique are pairwise distinct and sorting by them
  // descending is the unique topological order.
  TournamentOrder result;
  result.vertex = vertex;
  result.order = neighbors;
  std::sort(result.order.begin(), result.order.end(),
            [&](NodeId x, NodeId y) {
              return out_degree[x] != out_degree[y]
                         ? out_degree[x] > out_degree[y]
                         : x < y;
            });
  for (std::size_t i = 0; i + 1 < result.order.size(); ++i)
    if (out_degree[result.order[i]] == out_degree[result.order[i + 1]])
      throw invalid_input(
          "neighborhood of node " + node_str(vertex) +
          " contains a directed cycle; the digraph is not acyclic");
  for (std::size_t i = 0; i < result.order.size(); ++i)
    for (std::size_t j = i + 1; j < result.order.size(); ++j)
      if (!between.count({result.order[i], result.order[j]}))
        throw invalid_input(
            "neighborhood of node " + node_str(vertex) +
            " contains a directed cycle; the digraph is not acyclic");

  // In-neighbors must form a prefix: an in-neighbor after an out-neighbor
  // would close a directed cycle through `vertex`.
  int split = 0;
  for (std::size_t i = 0; i < result.order.size(); ++i)
    if (in_side.count(result.order[i])) {
      if (static_cast<int>(i) != split)
        throw invalid_input("in-neighbors of node " + node_str(vertex) +
                            " do not precede its out-neighbors; the digraph "
                            "is not acyclic");
      ++split;
    }
  result.split = split;
  for (NodeId u : result.order) {
    result.arcs.push_back(star[u]);
    result.weights.push_back(g.weight(star[u]));
  }
  return result;
}

BalancedWeights balance_weights(std::span<const Weight> weights, int split) {
  const int k = static_cast<int>(weights.size());
  if (split < 0 || split > k)
    throw invalid_input("split index out of range");
  for (Weight w : weights)
    if (w < 0) throw invalid_input("weights must be nonnegative");
  const Weight in_sum = sum_range(weights, 0, split);
  const Weight out_sum = sum_range(weights, split, k);
  if (in_sum > out_sum)
    throw invalid_input(
        "in-side weight exceeds out-side weight; reverse the digraph before "
        "balancing");
  BalancedWeights result;
  result.values.assign(weights.begin(), weights.end());
  if (split == k) {  // both sides empty of weight; nothing to balance
    result.pivot = k;
    return result;
  }
  int pivot = split;
  Weight suffix_after = out_sum - weights[split];
  while (suffix_after > in_sum) {
    ++pivot;
    suffix_after -= weights[pivot];
  }
  for (int i = split; i < pivot; ++i) result.values[i] = 0;
  result.values[pivot] = in_sum - suffix_after;
  result.pivot = pivot;
  return result;
}

std::vector<MatchingEntry> greedy_matching(std::span<const Weight> values,
                                           int split) {
  const int k = static_cast<int>(values.size());
  if (split < 0 || split > k)
    throw invalid_input("split index out of range");
  if (sum_range(values, 0, split) != sum_range(values, split, k))
    throw invalid_input("row and column totals differ; nothing to match");
  std::vector<MatchingEntry> cells;
  int row = 0;
  int col = split;
  Weight row_left = row < split ? values[row] : 0;
  Weight col_left = col < k ? values[col] : 0;
  while (row < split && col < k) {
    Weight amount = std::min(row_left, col_left);
    if (amount > 0) cells.push_back({row, col, amount});
    row_left -= amount;
    col_left -= amount;
    if (row_left == 0 && ++row < split) row_left = values[row];
    if (col_left == 0 && ++col < k) col_left = values[col];
  }
  return cells;
}

EliminationStep make_elimination_step(const WeightedDigraph& g, NodeId vertex,
                                      bool reversed) {
  EliminationStep step;
  step.tournament = tournament_order(g, vertex);
  step.reversed = reversed;
  const TournamentOrder& t = step.tournament;
  const int k = static_cast<int>(t.order.size());

  BalancedWeights bw = balance_weights(t.weights, t.split);
  step.pivot = bw.pivot;
  step.balanced = bw.values;
  step.matching = greedy_matching(bw.values, t.split);

  // Clique arcs keyed by position pair in the order; every (i, j) with i < j
  // exists, tournament_order validated that.
  std::map<std::pair<NodeId, NodeId>, ArcId> clique_arc;
  std::set<NodeId> members(t.order.begin(), t.order.end());
  for (const Arc& a : g.arcs())
    if (members.count(a.tail) && members.count(a.head))
      clique_arc[{a.tail, a.head}] = a.id;

  std::map<std::pair<int, int>, Weight> delta;
  for (const MatchingEntry& cell : step.matching)
    delta[{cell.row, cell.col}] += cell.amount;
  for (int col = t.split + 1; col < k; ++col) {
    Weight d = t.weights[col] - bw.values[col];
    if (d > 0) delta[{t.split, col}] += d;
  }
  for (const auto& [cell, amount] : delta) {
    ArcId arc = clique_arc.at({t.order[cell.first], t.order[cell.second]});
    step.adjustments.push_back(
        {cell.first, cell.second, arc, g.weight(arc), amount});
  }

  step.vertex_star_is_dicut = t.split == 0 && g.node_count() >= 2;
  if (step.vertex_star_is_dicut)
    for (int col = 1; col < k; ++col) {
      ArcId arc = clique_arc.at({t.order[0], t.order[col]});
      step.first_row.push_back({col, arc, g.weight(arc)});
    }
  return step;
}

void transfer_weights(WeightedDigraph& g, const EliminationStep& step) {
  for (const CliqueAdjustment& adj : step.adjustments) {
    if (!g.has_arc(adj.arc) || g.weight(adj.arc) != adj.base)
      throw invalid_input(
          "digraph does not match the step: arc " + std::to_string(adj.arc) +
          " is missing or its weight differs from the recorded base");
    g.set_weight(adj.arc, adj.base + adj.delta);
  }
}

Weight Packing::total_multiplicity() const {
  Weight sum = 0;
  for (const PackingEntry& entry : entries) sum += entry.multiplicity;
  return sum;
}

namespace {

using Pool = std::map<std::vector<ArcId>, Weight>;

bool set_contains(const std::vector<ArcId>& arcs, ArcId id) {
  return std::binary_search(arcs.begin(), arcs.end(), id);
}

std::vector<ArcId> set_without(const std::vector<ArcId>& arcs, ArcId id) {
  std::vector<ArcId> out;
  out.reserve(arcs.size());
  for (ArcId a : arcs)
    if (a != id) out.push_back(a);
  return out;
}

std::vector<ArcId> set_with(const std::vector<ArcId>& arcs, ArcId id) {
  std::vector<ArcId> out = arcs;
  auto it = std::lower_bound(out.begin(), out.end(), id);
  if (it == out.end() || *it != id) out.insert(it, id);
  return out;
}

void pool_add(Pool& pool, const std::vector<ArcId>& arcs, Weight amount) {
  if (amount == 0) return;
  auto [it, inserted] = pool.emplace(arcs, amount);
  if (!inserted) it->second += amount;
  if (it->second == 0) pool.erase(it);
}

Weight pool_load(const Pool& pool, ArcId arc) {
  Weight load = 0;
  for (const auto& [arcs, lambda] : pool)
    if (set_contains(arcs, arc)) load += lambda;
  return load;
}

// Entry with the largest multiplicity among those matching `keep`; ties go
// to the lexicographically smallest arc set. Returns pool.end() if none.
template <typename Keep>
Pool::iterator pick_heaviest(Pool& pool, Keep&& keep) {
  auto best = pool.end();
  for (auto it = pool.begin(); it != pool.end(); ++it)
    if (keep(it->first) && (best == pool.end() || it->second > best->second))
      best = it;
  return best;
}

}  // namespace

Packing mapping_back(const Packing& reduced, const EliminationStep& step) {
  Pool pool;
  for (const PackingEntry& entry : reduced.entries) {
    if (entry.multiplicity <= 0)
      throw invalid_input("packing multiplicities must be positive");
    std::vector<ArcId> arcs = entry.arcs;
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    pool_add(pool, arcs, entry.multiplicity);
  }
  const Weight total = reduced.total_multiplicity();
  const TournamentOrder& t = step.tournament;
  const int k = static_cast<int>(t.order.size());

  // When the deleted vertex's star is a dicut, every dicut through one of
  // the first-row clique arcs contains all later ones too, so a dijoin needs
  // at most one of them: drop all but the highest. Doing this before any
  // multiplicity moves keeps each dijoin on at most one star arc later,
  // which is what the capacity argument for the star needs.
  if (step.vertex_star_is_dicut && !step.first_row.empty()) {
    std::map<ArcId, int> first_row_col;
    for (const FirstRowArc& fr : step.first_row) first_row_col[fr.arc] = fr.col;
    Pool normalized;
    for (const auto& [arcs, lambda] : pool) {
      int best_col = -1;
      int hits = 0;
      for (ArcId a : arcs)
        if (auto it = first_row_col.find(a); it != first_row_col.end()) {
          ++hits;
          best_col = std::max(best_col, it->second);
        }
      if (hits <= 1) {
        pool_add(normalized, arcs, lambda);
        continue;
      }
      std::vector<ArcId> trimmed;
      for (ArcId a : arcs) {
        auto it = first_row_col.find(a);
        if (it == first_row_col.end() || it->second == best_col)
          trimmed.push_back(a);
      }
      pool_add(normalized, trimmed, lambda);
    }
    pool = std::move(normalized);
  }

  // Move the multiplicity that exceeds an adjusted arc's base weight onto
  // the deleted vertex's star: in-side rows reroute through both star arcs,
  // the first out-side row through the head's star arc alone.
  for (const CliqueAdjustment& adj : step.adjustments) {
    Weight residual = adj.delta;
    Weight load = pool_load(pool, adj.arc);
    while (load > adj.base) {
      if (residual <= 0)
        throw verification_failure(
            "transfer budget exhausted while unloading arc " +
            std::to_string(adj.arc));
      auto it = pick_heaviest(
          pool, [&](const std::vector<ArcId>& arcs) {
            return set_contains(arcs, adj.arc);
          });
      if (it == pool.end())
        throw verification_failure("arc load with no entry to move it from");
      Weight amount = std::min(it->second, residual);
      std::vector<ArcId> source = it->first;
      std::vector<ArcId> moved = set_without(source, adj.arc);
      moved = set_with(moved, t.arcs[adj.col]);
      if (adj.row < t.split) moved = set_with(moved, t.arcs[adj.row]);
      pool_add(pool, source, -amount);
      pool_add(pool, moved, amount);
      residual -= amount;
      load -= amount;
    }
  }

  // When the star is a dicut, every dijoin must cross it. Spread the
  // stragglers over leftover star capacity, then put the whole remainder on
  // the arc to the first clique node, whose capacity the dicut weight bound
  // guarantees.
  if (step.vertex_star_is_dicut) {
    auto star_disjoint = [&](const std::vector<ArcId>& arcs) {
      for (ArcId a : t.arcs)
        if (set_contains(arcs, a)) return false;
      return true;
    };
    for (int j = 1; j < k; ++j) {
      Weight residual = t.weights[j] - pool_load(pool, t.arcs[j]);
      while (residual > 0) {
        auto it = pick_heaviest(pool, star_disjoint);
        if (it == pool.end()) break;
        Weight amount = std::min(it->second, residual);
        std::vector<ArcId> source = it->first;
        pool_add(pool, source, -amount);
        pool_add(pool, set_with(source, t.arcs[j]), amount);
        residual -= amount;
      }
    }
    Weight leftover = 0;
    for (const auto& [arcs, lambda] : pool)
      if (star_disjoint(arcs)) leftover += lambda;
    if (leftover > 0) {
      if (k == 0)
        throw verification_failure(
            "dijoins to reroute but the deleted vertex has no arcs");
      if (pool_load(pool, t.arcs[0]) + leftover > t.weights[0])
        throw verification_failure(
            "star capacity shortfall on arc " + std::to_string(t.arcs[0]));
      while (true) {
        auto it = pick_heaviest(pool, star_disjoint);
        if (it == pool.end()) break;
        Weight amount = it->second;
        std::vector<ArcId> source = it->first;
        pool_add(pool, source, -amount);
        pool_add(pool, set_with(source, t.arcs[0]), amount);
      }
    }
  }

  // The moves above must never overload the arcs they touch.
  for (int j = 0; j < k; ++j)
    if (pool_load(pool, t.arcs[j]) > t.weights[j])
      throw verification_failure("star arc " + std::to_string(t.arcs[j]) +
                                 " ended up over its weight");
  for (const CliqueAdjustment& adj : step.adjustments)
    if (pool_load(pool, adj.arc) > adj.base)
      throw verification_failure("clique arc " + std::to_string(adj.arc) +
                                 " ended up over its weight");
  for (const FirstRowArc& fr : step.first_row)
    if (pool_load(pool, fr.arc) > fr.base)
      throw verification_failure("clique arc " + std::to_string(fr.arc) +
                                 " ended up over its weight");

  Packing result;
  result.tau = reduced.tau;
  for (const auto& [arcs, lambda] : pool) result.entries.push_back({arcs, lambda});
  if (result.total_multiplicity() != total)
    throw verification_failure("total multiplicity changed while mapping back");
  return result;
}

namespace {

// Exhaustive per-step checks used in verification mode: the reduced digraph
// keeps minimum dicut weight >= tau, and each of its dicut shores, either as
// is or with the deleted vertex added, cuts the previous digraph with the
// same arcs (beyond the deleted vertex's star).
void verify_step(const WeightedDigraph& before, const WeightedDigraph& after,
                 NodeId vertex, Weight tau, int bound) {
  if (after.node_count() >= 2) {
    std::optional<MinDicutResult> min_cut = min_dicut_weight(after, bound);
    if (min_cut && min_cut->weight < tau)
      throw verification_failure(
          "eliminating node " + node_str(vertex) +
          " dropped the minimum dicut weight below the packing target");
  }
  for (const Dicut& cut : enumerate_dicuts(after, bound)) {
    auto matches = [&](const std::vector<NodeId>& shore) {
      DicutCheck check = is_dicut(before, shore);
      if (!check.dicut) return false;
      std::vector<ArcId> restricted;
      for (ArcId a : check.dicut->arcs)
        if (after.has_arc(a)) restricted.push_back(a);
      return restricted == cut.arcs;
    };
    std::vector<NodeId> extended = cut.shore;
    extended.insert(
        std::lower_bound(extended.begin(), extended.end(), vertex), vertex);
    if (!matches(cut.shore) && !matches(extended))
      throw verification_failure(
          "a dicut of the reduced digraph does not extend past node " +
          node_str(vertex));
  }
}

void verify_folded(const WeightedDigraph& before, const Packing& packing,
                   Weight tau) {
  if (packing.total_multiplicity() != tau)
    throw verification_failure("mapped-back packing changed its size");
  std::map<ArcId, Weight> load;
  for (const PackingEntry& entry : packing.entries) {
    if (!is_dijoin(before, entry.arcs))
      throw verification_failure(
          "mapped-back packing contains a non-dijoin arc set");
    for (ArcId a : entry.arcs) load[a] += entry.multiplicity;
  }
  for (const auto& [arc, used] : load)
    if (used > before.weight(arc))
      throw verification_failure("mapped-back packing overloads arc " +
                                 std::to_string(arc));
}

}  // namespace

Packing pack_dijoins(const WeightedDigraph& g, const PackOptions& options,
                     PackStats* stats) {
  PackStats local;
  PackStats& out = stats ? *stats : local;
  out = PackStats{};

  CondensationResult condensation = condense(g);
  const WeightedDigraph& dag = condensation.condensed;
  out.condensed_nodes = dag.node_count();
  out.condensed_arcs = dag.arc_count();

  if (dag.node_count() <= 1) return Packing{std::nullopt, {}};
  std::optional<MinDicutResult> min_cut =
      min_dicut_weight(dag, options.enumeration_bound);
  const Weight tau = min_cut->weight;
  if (tau == 0) return Packing{0, {}};

  UndirectedGraph skeleton = underlying_adjacency(dag);
  EliminationOrder peo = maximum_cardinality_search(skeleton);
  if (!is_perfect_elimination_order(skeleton, peo.order)) {
    std::vector<NodeId> cycle = find_chordless_cycle(skeleton);
    const std::size_t length = cycle.size();
    throw not_chordal("underlying graph of the condensation has a chordless "
                      "cycle of length " +
                          std::to_string(length),
                      std::move(cycle));
  }

  WeightedDigraph current = dag;
  std::vector<EliminationStep> steps;
  std::vector<WeightedDigraph> snapshots;  // verification mode only
  for (std::size_t i = 0; i + 1 < peo.order.size(); ++i) {
    NodeId v = peo.order[i];
    Weight in_sum = 0;
    Weight out_sum = 0;
    for (const Arc& a : current.arcs()) {
      if (a.head == v) in_sum += a.weight;
      if (a.tail == v) out_sum += a.weight;
    }
    bool reversed = in_sum > out_sum;
    if (reversed) {
      current = reverse(current);
      ++out.reversals;
    }
    EliminationStep step = make_elimination_step(current, v, reversed);
    if (options.verify_steps) snapshots.push_back(current);
    WeightedDigraph next = delete_vertex(current, v);
    transfer_weights(next, step);
    if (options.verify_steps) {
      verify_step(current, next, v, tau, options.enumeration_bound);
      ++out.steps_verified;
    }
    current = std::move(next);
    steps.push_back(std::move(step));
    ++out.elimination_steps;
  }

  Packing packing;
  packing.tau = tau;
  packing.entries.push_back({{}, tau});
  for (std::size_t i = steps.size(); i-- > 0;) {
    packing = mapping_back(packing, steps[i]);
    if (options.verify_steps) verify_folded(snapshots[i], packing, tau);
  }
  out.support_condensed = packing.entries.size();

  // Lift through the condensation: each merged arc spreads an entry's
  // multiplicity over its parallel originals, splitting the entry at copy
  // boundaries, never exceeding any original arc's own weight.
  std::map<ArcId, Weight> remaining;
  for (const auto& [merged, originals] : condensation.arc_map)
    for (const auto& [orig, weight] : originals) remaining[orig] = weight;
  Pool lifted;
  for (const PackingEntry& entry : packing.entries) {
    Weight left = entry.multiplicity;
    while (left > 0) {
      std::vector<ArcId> piece;
      Weight amount = left;
      for (ArcId merged : entry.arcs) {
        ArcId copy = -1;
        for (const auto& [orig, weight] : condensation.arc_map.at(merged))
          if (remaining[orig] > 0) {
            copy = orig;
            amount = std::min(amount, remaining[orig]);
            break;
          }
        if (copy < 0)
          throw verification_failure(
              "ran out of parallel-arc capacity while lifting the packing");
        piece.push_back(copy);
      }
      std::sort(piece.begin(), piece.end());
      for (ArcId a : piece) remaining[a] -= amount;
      pool_add(lifted, piece, amount);
      left -= amount;
    }
  }
  Packing result;
  result.tau = tau;
  for (const auto& [arcs, lambda] : lifted) result.entries.push_back({arcs, lambda});

  PackingInvariantReport report =
      validate_packing(g, result, options.enumeration_bound);
  if (!report.ok())
    throw verification_failure("packing failed final validation: " +
                               report.detail);
  return result;
}

PackingInvariantReport validate_packing(const WeightedDigraph& g,
                                        const Packing& packing,
                                        int enumeration_bound) {
  PackingInvariantReport report;
  auto fail = [&](bool& flag, const std::string& why) {
    flag = false;
    if (report.detail.empty()) report.detail = why;
  };
  report.tau_matches_min_dicut = true;
  report.multiplicities_sum_to_tau = true;
  report.entries_distinct = true;
  report.all_entries_are_dijoins = true;
  report.capacities_respected = true;
  report.support_within_bound = true;

  std::set<std::vector<ArcId>> seen;
  std::map<ArcId, Weight> load;
  for (const PackingEntry& entry : packing.entries) {
    if (entry.multiplicity <= 0)
      throw invalid_input("packing multiplicities must be positive");
    std::vector<ArcId> arcs = entry.arcs;
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    for (ArcId a : arcs)
      if (!g.has_arc(a))
        throw invalid_input("packing references unknown arc " +
                            std::to_string(a));
    if (!seen.insert(arcs).second)
      fail(report.entries_distinct, "two entries list the same arc set");
    if (!is_dijoin(g, arcs))
      fail(report.all_entries_are_dijoins,
           "an entry's arc set is not a dijoin");
    for (ArcId a : arcs) load[a] += entry.multiplicity;
  }
  for (const auto& [arc, used] : load)
    if (used > g.weight(arc))
      fail(report.capacities_respected,
           "arc " + std::to_string(arc) + " lies in more dijoins than its "
           "weight allows");

  std::optional<MinDicutResult> min_cut =
      min_dicut_weight(g, enumeration_bound);
  std::optional<Weight> tau;
  if (min_cut) tau = min_cut->weight;
  if (packing.tau != tau)
    fail(report.tau_matches_min_dicut,
         "recorded tau does not equal the minimum dicut weight");
  if (tau && packing.total_multiplicity() != *tau)
    fail(report.multiplicities_sum_to_tau,
         "multiplicities do not sum to tau");
  if (!tau && !packing.entries.empty())
    fail(report.multiplicities_sum_to_tau,
         "a digraph without dicuts admits only the empty packing");

  std::ptrdiff_t bound = static_cast<std::ptrdiff_t>(g.arc_count()) -
                         static_cast<std::ptrdiff_t>(g.node_count()) + 2;
  if (static_cast<std::ptrdiff_t>(packing.entries.size()) > std::max<std::ptrdiff_t>(bound, 0))
    fail(report.support_within_bound,
         "more distinct dijoins than arcs - nodes + 2");
  return report;
}

}  // namespace dijoins
