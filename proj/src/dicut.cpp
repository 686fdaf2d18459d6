#include "dijoins/dicut.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <set>
#include <string>

#include "dijoins/errors.hpp"

namespace dijoins {

DicutCheck is_dicut(const WeightedDigraph& g, std::span<const NodeId> shore) {
  std::set<NodeId> inside;
  for (NodeId v : shore) {
    if (!g.has_node(v))
      throw invalid_input("shore contains unknown node " + std::to_string(v));
    inside.insert(v);
  }
  DicutCheck check;
  if (inside.empty()) {
    check.reason = DicutCheck::Reason::empty_shore;
    return check;
  }
  if (inside.size() == g.node_count()) {
    check.reason = DicutCheck::Reason::full_shore;
    return check;
  }
  Dicut cut;
  cut.shore.assign(inside.begin(), inside.end());
  for (const Arc& a : g.arcs()) {
    bool tail_in = inside.count(a.tail) > 0;
    bool head_in = inside.count(a.head) > 0;
    if (!tail_in && head_in) {
      check.reason = DicutCheck::Reason::entering_arc;
      check.entering = a.id;
      return check;
    }
    if (tail_in && !head_in) {
      cut.arcs.push_back(a.id);
      cut.weight += a.weight;
    }
  }
  std::sort(cut.arcs.begin(), cut.arcs.end());
  check.dicut = std::move(cut);
  return check;
}

namespace {

// Dense closure data for shore enumeration over an acyclic digraph: node i
// may join the shore only when pred_mask[i] is already inside, and the shore
// weight is the sum of potential[i] = wout(i) - win(i) over members (arcs
// inside the shore cancel, entering arcs are excluded by closure).
struct ClosureData {
  std::vector<NodeId> nodes;  // sorted
  std::vector<std::uint64_t> pred_mask;
  std::vector<Weight> potential;
  std::vector<int> topo;  // indices in a topological order

  int index(NodeId v) const {
    return static_cast<int>(
        std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  }
};

// Returns nullopt when the digraph has a directed cycle.
std::optional<ClosureData> make_closure_data(const WeightedDigraph& g) {
  ClosureData data;
  data.nodes = g.nodes();
  const int n = static_cast<int>(data.nodes.size());
  data.pred_mask.assign(n, 0);
  data.potential.assign(n, 0);
  std::vector<int> indegree(n, 0);
  std::vector<std::vector<int>> out(n);
  for (const Arc& a : g.arcs()) {
    int t = data.index(a.tail);
    int h = data.index(a.head);
    data.pred_mask[h] |= std::uint64_t{1} << t;
    data.potential[t] += a.weight;
    data.potential[h] -= a.weight;
    out[t].push_back(h);
    ++indegree[h];
  }
  std::deque<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    data.topo.push_back(v);
    for (int w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (static_cast<int>(data.topo.size()) != n) return std::nullopt;
  return data;
}

// Walks every predecessor-closed subset in depth-first order over topological
// positions; shore masks and weights are reported to `emit`, which may return
// false to abort the walk.
template <typename Emit>
void walk_closed_sets(const ClosureData& data, Emit&& emit) {
  const int n = static_cast<int>(data.topo.size());
  // Iterative DFS: frame = (position, mask, weight, include-branch pending).
  struct Frame {
    int pos;
    std::uint64_t mask;
    Weight weight;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0, 0});
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.pos == n) {
      if (!emit(f.mask, f.weight)) return;
      continue;
    }
    int v = data.topo[f.pos];
    // Exclude branch explored after the include branch (stack order).
    stack.push_back({f.pos + 1, f.mask, f.weight});
    if ((data.pred_mask[v] & ~f.mask) == 0)
      stack.push_back({f.pos + 1, f.mask | (std::uint64_t{1} << v),
                       f.weight + data.potential[v]});
  }
}

std::vector<NodeId> mask_to_nodes(const ClosureData& data,
                                  std::uint64_t mask) {
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < data.nodes.size(); ++i)
    if (mask & (std::uint64_t{1} << i)) nodes.push_back(data.nodes[i]);
  return nodes;
}

constexpr std::uint64_t full_mask(int n) {
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

std::vector<Dicut> enumerate_dicuts(const WeightedDigraph& g, int bound) {
  const int n = static_cast<int>(g.node_count());
  if (n > bound || n > 62)
    throw resource_limit("dicut enumeration over " + std::to_string(n) +
                         " nodes exceeds the bound of " +
                         std::to_string(std::min(bound, 62)));
  std::optional<ClosureData> data = make_closure_data(g);
  if (!data)
    throw invalid_input(
        "dicut enumeration requires an acyclic digraph; condense first");
  std::vector<Dicut> dicuts;
  const std::uint64_t full = full_mask(n);
  walk_closed_sets(*data, [&](std::uint64_t mask, Weight) {
    if (mask == 0 || mask == full) return true;
    DicutCheck check = is_dicut(g, mask_to_nodes(*data, mask));
    dicuts.push_back(std::move(*check.dicut));
    return true;
  });
  return dicuts;
}

namespace {

// Max-flow (Dinic) over a network with explicit residual arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : head_(nodes, -1) {}

  void add_edge(int from, int to, Weight capacity) {
    edges_.push_back({to, head_[from], capacity});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  Weight max_flow(int source, int sink) {
    Weight total = 0;
    while (build_levels(source, sink)) {
      iter_ = head_;
      while (Weight pushed = augment(source, sink,
                                     std::numeric_limits<Weight>::max()))
        total += pushed;
    }
    return total;
  }

  // After max_flow: nodes reachable from `source` in the residual network.
  std::vector<char> source_side(int source) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e = head_[v]; e >= 0; e = edges_[e].next)
        if (edges_[e].capacity > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          queue.push_back(edges_[e].to);
        }
    }
    return seen;
  }

 private:
  struct Edge {
    int to;
    int next;
    Weight capacity;
  };

  bool build_levels(int source, int sink) {
    level_.assign(head_.size(), -1);
    std::deque<int> queue{source};
    level_[source] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int e = head_[v]; e >= 0; e = edges_[e].next)
        if (edges_[e].capacity > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[v] + 1;
          queue.push_back(edges_[e].to);
        }
    }
    return level_[sink] >= 0;
  }

  Weight augment(int v, int sink, Weight limit) {
    if (v == sink) return limit;
    for (int& e = iter_[v]; e >= 0; e = edges_[e].next) {
      const Edge& edge = edges_[e];
      if (edge.capacity <= 0 || level_[edge.to] != level_[v] + 1) continue;
      Weight pushed =
          augment(edge.to, sink, std::min(limit, edge.capacity));
      if (pushed > 0) {
        edges_[e].capacity -= pushed;
        edges_[e ^ 1].capacity += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

struct ShoreCandidate {
  Weight weight;
  std::vector<char> members;  // by dense condensed index
};

// Minimum-weight closed shore of an acyclic digraph with >= 2 nodes, by
// running one max-flow per anchored node pair. The anchor r lies inside the
// shore for pairs (r, b) and outside for pairs (a, r); any minimizing shore
// either contains r or not, so one family attains the optimum.
ShoreCandidate min_shore_by_flow(const WeightedDigraph& g) {
  const std::vector<NodeId>& nodes = g.nodes();
  const int n = static_cast<int>(nodes.size());
  auto dense = [&](NodeId v) {
    return static_cast<int>(
        std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  // Any capacity above the total weight acts as infinite: a cut through such
  // an arc can never beat a genuine shore.
  const Weight infinite = g.total_weight() + 1;

  ShoreCandidate best{std::numeric_limits<Weight>::max(), {}};
  auto try_pair = [&](int source, int sink) {
    FlowNetwork net(n);
    for (const Arc& a : g.arcs()) {
      net.add_edge(dense(a.tail), dense(a.head), a.weight);
      net.add_edge(dense(a.head), dense(a.tail), infinite);
    }
    Weight flow = net.max_flow(source, sink);
    if (flow >= infinite || flow >= best.weight) return;
    best.weight = flow;
    best.members = net.source_side(source);
  };
  for (int other = 1; other < n; ++other) {
    try_pair(0, other);
    try_pair(other, 0);
  }
  return best;
}

}  // namespace

std::optional<MinDicutResult> min_dicut_weight(const WeightedDigraph& g,
                                               int bound) {
  CondensationResult condensation = condense(g);
  const WeightedDigraph& dag = condensation.condensed;
  const int n = static_cast<int>(dag.node_count());
  if (n <= 1) return std::nullopt;

  std::vector<NodeId> condensed_shore;
  if (n <= bound && n <= 62) {
    std::optional<ClosureData> data = make_closure_data(dag);
    const std::uint64_t full = full_mask(n);
    Weight best = std::numeric_limits<Weight>::max();
    std::uint64_t best_mask = 0;
    walk_closed_sets(*data, [&](std::uint64_t mask, Weight weight) {
      if (mask != 0 && mask != full && weight < best) {
        best = weight;
        best_mask = mask;
      }
      return true;
    });
    condensed_shore = mask_to_nodes(*data, best_mask);
  } else {
    ShoreCandidate candidate = min_shore_by_flow(dag);
    for (int i = 0; i < n; ++i)
      if (candidate.members[i]) condensed_shore.push_back(dag.nodes()[i]);
  }

  // Expand the condensed shore to the original node set and recompute the
  // crossing arcs there.
  std::set<NodeId> reps(condensed_shore.begin(), condensed_shore.end());
  MinDicutResult result;
  for (NodeId v : g.nodes())
    if (reps.count(condensation.node_map.at(v))) result.shore.push_back(v);
  std::set<NodeId> inside(result.shore.begin(), result.shore.end());
  for (const Arc& a : g.arcs())
    if (inside.count(a.tail) && !inside.count(a.head)) {
      result.arcs.push_back(a.id);
      result.weight += a.weight;
    }
  std::sort(result.arcs.begin(), result.arcs.end());
  return result;
}

bool is_dijoin(const WeightedDigraph& g, std::span<const ArcId> arcs) {
  const std::vector<NodeId>& nodes = g.nodes();
  const int n = static_cast<int>(nodes.size());
  if (n <= 1) return true;
  auto dense = [&](NodeId v) {
    return static_cast<int>(
        std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  };
  std::vector<std::vector<int>> out(n), in(n);
  auto link = [&](int t, int h) {
    out[t].push_back(h);
    in[h].push_back(t);
  };
  for (const Arc& a : g.arcs()) link(dense(a.tail), dense(a.head));
  for (ArcId id : arcs) {
    const Arc& a = g.arc(id);  // validates the id
    link(dense(a.head), dense(a.tail));
  }
  // Strong connectivity: every node reachable from node 0 both ways.
  auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n;
  };
  return reaches_all(out) && reaches_all(in);
}

}  // namespace dijoins
