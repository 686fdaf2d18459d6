#include "dijoins/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>

#include "dijoins/dicut.hpp"
#include "dijoins/errors.hpp"

namespace dijoins {

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) {
  int c = 0;
  while (m) {
    m &= m - 1;
    ++c;
  }
  return c;
}

// One undecided arc of the condensation: it will join exactly `size` of the
// k dijoins, since joining fewer can only lose dicut coverage.
struct Slot {
  ArcId arc = 0;
  int size = 0;
  std::vector<int> dicuts;  // indices of dicuts this arc belongs to
};

// Backtracking over per-arc dijoin subsets. A family of k dijoins within the
// weights exists iff the arcs of every dicut can jointly cover all k indices
// while no arc carries more indices than its weight.
struct SearchState {
  int k = 0;
  Mask full = 0;
  std::vector<Slot> slots;
  std::vector<Mask> covered;     // per dicut, indices reached so far
  std::vector<long long> slack;  // per dicut, indices undecided arcs may add
  int uncovered = 0;
  std::vector<Mask> chosen;  // per slot
  long long budget = 0;

  bool search(std::size_t idx, int used);
};

bool SearchState::search(std::size_t idx, int used) {
  if (uncovered == 0) {
    // Coverage is complete; the remaining arcs take the lowest indices.
    for (std::size_t s = idx; s < slots.size(); ++s)
      chosen[s] = (Mask{1} << slots[s].size) - 1;
    return true;
  }
  if (idx == slots.size()) return false;
  const Slot& slot = slots[idx];

  std::vector<Mask> saved(slot.dicuts.size());
  auto try_mask = [&](Mask mask, int fresh) {
    if (--budget < 0)
      throw resource_limit("packing oracle exceeded its search budget");
    int saved_uncovered = uncovered;
    for (std::size_t i = 0; i < slot.dicuts.size(); ++i)
      saved[i] = covered[slot.dicuts[i]];
    bool viable = true;
    for (int d : slot.dicuts) {
      slack[d] -= slot.size;
      if (covered[d] != full && (covered[d] | mask) == full) --uncovered;
      covered[d] |= mask;
      if (covered[d] != full && popcount(covered[d]) + slack[d] < k)
        viable = false;
    }
    if (viable) {
      chosen[idx] = mask;
      if (search(idx + 1, used + fresh)) return true;
      chosen[idx] = 0;
    }
    for (std::size_t i = 0; i < slot.dicuts.size(); ++i)
      covered[slot.dicuts[i]] = saved[i];
    for (int d : slot.dicuts) slack[d] += slot.size;
    uncovered = saved_uncovered;
    return false;
  };

  // Candidates are canonical under relabeling of the dijoins: indices >=
  // `used` are interchangeable, so fresh ones always form a block starting
  // at `used`. Fresh-heavy candidates first, then combinations of old ones.
  for (int fresh = std::min(slot.size, k - used); fresh >= 0; --fresh) {
    int from_old = slot.size - fresh;
    if (from_old > used) continue;
    Mask fresh_mask = fresh == 0 ? 0 : ((Mask{1} << fresh) - 1) << used;
    if (from_old == 0) {
      if (try_mask(fresh_mask, fresh)) return true;
      continue;
    }
    std::vector<int> pick(from_old);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      Mask mask = fresh_mask;
      for (int i : pick) mask |= Mask{1} << i;
      if (try_mask(mask, fresh)) return true;
      int move = from_old - 1;
      while (move >= 0 && pick[move] == used - from_old + move) --move;
      if (move < 0) break;
      ++pick[move];
      for (int i = move + 1; i < from_old; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return false;
}

}  // namespace

OracleResult can_pack(const WeightedDigraph& g, Weight k,
                      const OracleOptions& options) {
  if (k < 1) throw invalid_input("packing size must be at least 1");
  if (k > 62)
    throw resource_limit("packing oracle handles at most 62 dijoins");

  CondensationResult condensation = condense(g);
  const WeightedDigraph& dag = condensation.condensed;
  OracleResult result;
  if (dag.node_count() <= 1) {
    // No dicut: the empty set is vacuously a dijoin, and k copies of it
    // use no capacity at all.
    result.feasible = true;
    result.dijoins.assign(static_cast<std::size_t>(k), {});
    return result;
  }
  std::vector<Dicut> dicuts = enumerate_dicuts(dag, options.enumeration_bound);

  SearchState state;
  state.k = static_cast<int>(k);
  state.full = (Mask{1} << k) - 1;
  state.budget = options.budget;

  // Arcs at least as heavy as k join every dijoin outright; zero-weight
  // arcs join none; the rest are search variables.
  std::map<ArcId, std::size_t> slot_of;
  std::map<ArcId, bool> heavy;
  for (const Arc& a : dag.arcs()) {
    if (a.weight >= k) {
      heavy[a.id] = true;
    } else if (a.weight > 0) {
      slot_of[a.id] = state.slots.size();
      state.slots.push_back({a.id, static_cast<int>(a.weight), {}});
    }
  }
  // Heaviest arcs first: they cover the most and fail fastest. Slot order
  // must be fixed before dicut membership is recorded.
  std::sort(state.slots.begin(), state.slots.end(),
            [](const Slot& x, const Slot& y) {
              return x.size != y.size ? x.size > y.size : x.arc < y.arc;
            });
  for (std::size_t s = 0; s < state.slots.size(); ++s)
    slot_of[state.slots[s].arc] = s;

  state.covered.assign(dicuts.size(), 0);
  state.slack.assign(dicuts.size(), 0);
  for (std::size_t d = 0; d < dicuts.size(); ++d) {
    for (ArcId a : dicuts[d].arcs) {
      if (heavy.count(a)) {
        state.covered[d] = state.full;
      } else if (auto it = slot_of.find(a); it != slot_of.end()) {
        state.slots[it->second].dicuts.push_back(static_cast<int>(d));
        state.slack[d] += state.slots[it->second].size;
      }
    }
    if (state.covered[d] != state.full) ++state.uncovered;
  }
  state.chosen.assign(state.slots.size(), 0);

  bool feasible = true;
  // A dicut that cannot reach k indices even with every undecided arc maxed
  // out refutes the query outright (weak duality: any k > tau dies here).
  for (std::size_t d = 0; d < dicuts.size(); ++d)
    if (state.covered[d] != state.full &&
        popcount(state.covered[d]) + state.slack[d] < state.k)
      feasible = false;
  if (feasible) {
    if (state.uncovered == 0) {
      for (std::size_t s = 0; s < state.slots.size(); ++s)
        state.chosen[s] = (Mask{1} << state.slots[s].size) - 1;
    } else {
      feasible = state.search(0, 0);
    }
  }
  if (!feasible) return result;

  result.feasible = true;
  // Spread each merged arc's dijoin indices over its parallel originals,
  // each original carrying at most its own weight many of them.
  std::vector<std::vector<ArcId>> dijoins(static_cast<std::size_t>(k));
  auto distribute = [&](ArcId merged, Mask mask) {
    std::vector<int> indices;
    for (int i = 0; i < state.k; ++i)
      if (mask & (Mask{1} << i)) indices.push_back(i);
    std::size_t next = 0;
    for (const auto& [orig, weight] : condensation.arc_map.at(merged))
      for (Weight c = 0; c < weight && next < indices.size(); ++c)
        dijoins[indices[next++]].push_back(orig);
  };
  for (const Arc& a : dag.arcs())
    if (a.weight >= k) distribute(a.id, state.full);
  for (std::size_t s = 0; s < state.slots.size(); ++s)
    distribute(state.slots[s].arc, state.chosen[s]);
  for (auto& d : dijoins) std::sort(d.begin(), d.end());
  result.dijoins = std::move(dijoins);
  return result;
}

std::optional<Weight> max_packing_size(const WeightedDigraph& g,
                                       const OracleOptions& options) {
  std::optional<MinDicutResult> min_cut =
      min_dicut_weight(g, options.enumeration_bound);
  if (!min_cut) return std::nullopt;
  for (Weight k = min_cut->weight; k >= 1; --k)
    if (can_pack(g, k, options).feasible) return k;
  return 0;
}

}  // namespace dijoins
