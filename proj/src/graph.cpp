#include "dijoins/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dijoins/errors.hpp"

namespace dijoins {

namespace {

std::string node_str(NodeId v) { return std::to_string(v); }

}  // namespace

void WeightedDigraph::add_node(NodeId v) {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it != nodes_.end() && *it == v) return;
  nodes_.insert(it, v);
}

ArcId WeightedDigraph::add_arc(NodeId tail, NodeId head, Weight weight) {
  ArcId id = next_id_;
  add_arc_with_id(id, tail, head, weight);
  return id;
}

void WeightedDigraph::add_arc_with_id(ArcId id, NodeId tail, NodeId head,
                                      Weight weight) {
  if (!has_node(tail) || !has_node(head))
    throw invalid_input("arc endpoint is not a node of the graph: " +
                        node_str(tail) + "->" + node_str(head));
  if (tail == head)
    throw invalid_input("self-loops are not allowed: node " + node_str(tail));
  if (weight < 0)
    throw invalid_input("arc weights must be nonnegative, got " +
                        std::to_string(weight));
  if (index_.count(id))
    throw invalid_input("duplicate arc id " + std::to_string(id));
  index_.emplace(id, arcs_.size());
  arcs_.push_back(Arc{id, tail, head, weight});
  if (id >= next_id_) next_id_ = id + 1;
}

bool WeightedDigraph::has_node(NodeId v) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), v);
}

bool WeightedDigraph::has_arc(ArcId id) const { return index_.count(id) > 0; }

const Arc& WeightedDigraph::arc(ArcId id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw invalid_input("unknown arc id " + std::to_string(id));
  return arcs_[it->second];
}

void WeightedDigraph::set_weight(ArcId id, Weight w) {
  if (w < 0)
    throw invalid_input("arc weights must be nonnegative, got " +
                        std::to_string(w));
  auto it = index_.find(id);
  if (it == index_.end())
    throw invalid_input("unknown arc id " + std::to_string(id));
  arcs_[it->second].weight = w;
}

Weight WeightedDigraph::total_weight() const {
  Weight sum = 0;
  for (const Arc& a : arcs_) sum += a.weight;
  return sum;
}

std::vector<ArcId> WeightedDigraph::out_arcs(NodeId v) const {
  std::vector<ArcId> out;
  for (const Arc& a : arcs_)
    if (a.tail == v) out.push_back(a.id);
  return out;
}

std::vector<ArcId> WeightedDigraph::in_arcs(NodeId v) const {
  std::vector<ArcId> in;
  for (const Arc& a : arcs_)
    if (a.head == v) in.push_back(a.id);
  return in;
}

UndirectedGraph::UndirectedGraph(std::vector<NodeId> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  nodes_ = std::move(nodes);
  adj_.resize(nodes_.size());
}

int UndirectedGraph::index(NodeId v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) return -1;
  return static_cast<int>(it - nodes_.begin());
}

void UndirectedGraph::add_node(NodeId v) {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it != nodes_.end() && *it == v) return;
  auto pos = it - nodes_.begin();
  nodes_.insert(it, v);
  adj_.emplace(adj_.begin() + pos);
}

void UndirectedGraph::add_edge(NodeId x, NodeId y) {
  if (x == y)
    throw invalid_input("self-loops are not allowed: node " + node_str(x));
  int ix = index(x);
  int iy = index(y);
  if (ix < 0 || iy < 0)
    throw invalid_input("edge endpoint is not a node of the graph: " +
                        node_str(x) + "-" + node_str(y));
  auto insert_sorted = [](std::vector<NodeId>& list, NodeId v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it == list.end() || *it != v) list.insert(it, v);
  };
  insert_sorted(adj_[ix], y);
  insert_sorted(adj_[iy], x);
}

std::size_t UndirectedGraph::edge_count() const {
  std::size_t deg = 0;
  for (const auto& list : adj_) deg += list.size();
  return deg / 2;
}

bool UndirectedGraph::has_node(NodeId v) const { return index(v) >= 0; }

bool UndirectedGraph::adjacent(NodeId x, NodeId y) const {
  int ix = index(x);
  if (ix < 0)
    throw invalid_input("unknown node " + node_str(x));
  const auto& list = adj_[ix];
  return std::binary_search(list.begin(), list.end(), y);
}

const std::vector<NodeId>& UndirectedGraph::neighbors(NodeId v) const {
  int iv = index(v);
  if (iv < 0)
    throw invalid_input("unknown node " + node_str(v));
  return adj_[iv];
}

WeightedDigraph reverse(const WeightedDigraph& g) {
  WeightedDigraph r;
  for (NodeId v : g.nodes()) r.add_node(v);
  for (const Arc& a : g.arcs()) r.add_arc_with_id(a.id, a.head, a.tail, a.weight);
  return r;
}

WeightedDigraph delete_vertex(const WeightedDigraph& g, NodeId v) {
  if (!g.has_node(v))
    throw invalid_input("cannot delete unknown node " + node_str(v));
  WeightedDigraph d;
  for (NodeId u : g.nodes())
    if (u != v) d.add_node(u);
  for (const Arc& a : g.arcs())
    if (a.tail != v && a.head != v)
      d.add_arc_with_id(a.id, a.tail, a.head, a.weight);
  return d;
}

namespace {

// Dense-index view used by the component search.
struct DenseView {
  std::vector<NodeId> nodes;                 // sorted
  std::vector<std::vector<int>> out, in;     // dense adjacency

  explicit DenseView(const WeightedDigraph& g) : nodes(g.nodes()) {
    out.resize(nodes.size());
    in.resize(nodes.size());
    for (const Arc& a : g.arcs()) {
      int t = index(a.tail);
      int h = index(a.head);
      out[t].push_back(h);
      in[h].push_back(t);
    }
  }

  int index(NodeId v) const {
    return static_cast<int>(
        std::lower_bound(nodes.begin(), nodes.end(), v) - nodes.begin());
  }
};

}  // namespace

CondensationResult condense(const WeightedDigraph& g) {
  CondensationResult result;
  const DenseView view(g);
  const int n = static_cast<int>(view.nodes.size());

  // Kosaraju: iterative finish-order pass, then a reverse-graph pass that
  // peels components in reverse finish order.
  std::vector<char> seen(n, 0);
  std::vector<int> finish;
  finish.reserve(n);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = 1;
    stack.emplace_back(start, 0);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < view.out[v].size()) {
        int w = view.out[v][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        finish.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<int> comp(n, -1);
  std::vector<int> dfs;
  int comp_count = 0;
  for (auto it = finish.rbegin(); it != finish.rend(); ++it) {
    if (comp[*it] >= 0) continue;
    int c = comp_count++;
    comp[*it] = c;
    dfs.push_back(*it);
    while (!dfs.empty()) {
      int v = dfs.back();
      dfs.pop_back();
      for (int w : view.in[v])
        if (comp[w] < 0) {
          comp[w] = c;
          dfs.push_back(w);
        }
    }
  }

  // Representative of a component: its smallest node id.
  std::vector<NodeId> rep_of_comp(comp_count,
                                  std::numeric_limits<NodeId>::max());
  for (int i = 0; i < n; ++i)
    rep_of_comp[comp[i]] = std::min(rep_of_comp[comp[i]], view.nodes[i]);
  for (int i = 0; i < n; ++i)
    result.node_map.emplace(view.nodes[i], rep_of_comp[comp[i]]);

  for (NodeId rep : rep_of_comp) result.condensed.add_node(rep);

  // Merge parallel arcs between components; condensed arc ids are minted in
  // ascending (tail, head) order so the result is reproducible.
  std::map<std::pair<NodeId, NodeId>, std::vector<std::pair<ArcId, Weight>>>
      groups;
  for (const Arc& a : g.arcs()) {
    NodeId rt = result.node_map.at(a.tail);
    NodeId rh = result.node_map.at(a.head);
    if (rt != rh) groups[{rt, rh}].emplace_back(a.id, a.weight);
  }
  for (auto& [ends, originals] : groups) {
    std::sort(originals.begin(), originals.end());
    Weight sum = 0;
    for (const auto& [id, w] : originals) sum += w;
    ArcId cid = result.condensed.add_arc(ends.first, ends.second, sum);
    result.arc_map.emplace(cid, std::move(originals));
  }
  return result;
}

UndirectedGraph underlying_adjacency(const WeightedDigraph& g) {
  UndirectedGraph u(g.nodes());
  for (const Arc& a : g.arcs()) u.add_edge(a.tail, a.head);
  return u;
}

}  // namespace dijoins
