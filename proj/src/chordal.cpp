#include "dijoins/chordal.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "dijoins/errors.hpp"

namespace dijoins {

EliminationOrder maximum_cardinality_search(const UndirectedGraph& g) {
  const std::vector<NodeId>& nodes = g.nodes();
  std::map<NodeId, int> weight;
  std::map<NodeId, bool> visited;
  for (NodeId v : nodes) {
    weight[v] = 0;
    visited[v] = false;
  }
  std::vector<NodeId> visit_order;
  visit_order.reserve(nodes.size());
  for (std::size_t step = 0; step < nodes.size(); ++step) {
    NodeId best = -1;
    int best_weight = -1;
    for (NodeId v : nodes)
      if (!visited[v] && weight[v] > best_weight) {
        best = v;
        best_weight = weight[v];
      }
    visited[best] = true;
    visit_order.push_back(best);
    for (NodeId u : g.neighbors(best))
      if (!visited[u]) ++weight[u];
  }
  std::reverse(visit_order.begin(), visit_order.end());
  return EliminationOrder{std::move(visit_order)};
}

namespace {

std::vector<NodeId> later_neighbors(const UndirectedGraph& g,
                                    std::span<const NodeId> order,
                                    std::size_t pos,
                                    const std::map<NodeId, std::size_t>& at) {
  std::vector<NodeId> later;
  for (NodeId u : g.neighbors(order[pos]))
    if (at.at(u) > pos) later.push_back(u);
  return later;
}

}  // namespace

bool is_perfect_elimination_order(const UndirectedGraph& g,
                                  std::span<const NodeId> order) {
  if (order.size() != g.nodes().size()) return false;
  std::map<NodeId, std::size_t> at;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.has_node(order[i])) return false;
    if (!at.emplace(order[i], i).second) return false;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::vector<NodeId> later = later_neighbors(g, order, i, at);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

bool is_chordal(const UndirectedGraph& g) {
  EliminationOrder peo = maximum_cardinality_search(g);
  return is_perfect_elimination_order(g, peo.order);
}

std::vector<NodeId> find_chordless_cycle(const UndirectedGraph& g) {
  // Any chordless cycle C and any v on it give two cycle-neighbors x, y of v
  // that are nonadjacent and joined by a path avoiding N[v] \ {x, y}; the
  // shortest such path closes an induced cycle through v. So scanning every
  // (v, x, y) triple is exhaustive.
  for (NodeId v : g.nodes()) {
    const std::vector<NodeId>& nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        NodeId x = nb[i];
        NodeId y = nb[j];
        if (g.adjacent(x, y)) continue;
        // BFS from x to y through nodes outside N[v] (x, y excepted).
        std::map<NodeId, NodeId> parent;
        std::deque<NodeId> queue;
        parent[x] = x;
        queue.push_back(x);
        bool reached = false;
        while (!queue.empty() && !reached) {
          NodeId cur = queue.front();
          queue.pop_front();
          for (NodeId w : g.neighbors(cur)) {
            if (parent.count(w)) continue;
            if (w == v) continue;
            if (w != y && g.adjacent(w, v)) continue;
            parent[w] = cur;
            if (w == y) {
              reached = true;
              break;
            }
            queue.push_back(w);
          }
        }
        if (!reached) continue;
        std::vector<NodeId> path;  // y back to x
        for (NodeId cur = y;; cur = parent[cur]) {
          path.push_back(cur);
          if (cur == x) break;
        }
        std::vector<NodeId> cycle;
        cycle.push_back(v);
        cycle.insert(cycle.end(), path.rbegin(), path.rend());
        return cycle;
      }
    }
  }
  return {};
}

NodeId find_simplicial_vertex(const UndirectedGraph& g) {
  if (g.nodes().empty())
    throw invalid_input("graph has no nodes to eliminate");
  EliminationOrder peo = maximum_cardinality_search(g);
  for (NodeId v : peo.order) {
    const std::vector<NodeId>& nb = g.neighbors(v);
    bool clique = true;
    for (std::size_t a = 0; a < nb.size() && clique; ++a)
      for (std::size_t b = a + 1; b < nb.size() && clique; ++b)
        if (!g.adjacent(nb[a], nb[b])) clique = false;
    if (clique) return v;
  }
  // Every graph with no simplicial node has a chordless cycle.
  std::vector<NodeId> cycle = find_chordless_cycle(g);
  const std::size_t length = cycle.size();
  throw not_chordal("graph has a chordless cycle of length " +
                        std::to_string(length),
                    std::move(cycle));
}

}  // namespace dijoins
