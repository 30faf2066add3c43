#include "lvl2/network.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "lvl2/error.hpp"

namespace lvl2 {

PhyloNetwork PhyloNetwork::single_leaf() {
  PhyloNetwork net;
  net.add_vertex(VertexKind::Leaf, 1);
  return net;
}

int PhyloNetwork::add_vertex(VertexKind kind, int label) {
  kinds_.push_back(kind);
  labels_.push_back(label);
  children_.emplace_back();
  parents_.emplace_back();
  return static_cast<int>(kinds_.size()) - 1;
}

void PhyloNetwork::add_arc(int tail, int head) {
  const int n = static_cast<int>(kinds_.size());
  if (tail < 0 || head < 0 || tail >= n || head >= n) {
    throw InvalidArgument("arc endpoint out of range");
  }
  arcs_.emplace_back(tail, head);
  children_[static_cast<std::size_t>(tail)].push_back(head);
  parents_[static_cast<std::size_t>(head)].push_back(tail);
}

std::size_t PhyloNetwork::leaf_count() const {
  return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), VertexKind::Leaf));
}

std::size_t PhyloNetwork::reticulation_count() const {
  return static_cast<std::size_t>(
      std::count(kinds_.begin(), kinds_.end(), VertexKind::Reticulation));
}

std::size_t PhyloNetwork::tree_node_count() const {
  return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), VertexKind::Tree));
}

std::vector<int> PhyloNetwork::leaves() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < kinds_.size(); ++v) {
    if (kinds_[v] == VertexKind::Leaf) out.push_back(static_cast<int>(v));
  }
  return out;
}

PhyloNetwork PhyloNetwork::with_leaf_labels(const std::vector<int>& labels) const {
  PhyloNetwork copy = *this;
  auto leaf_ids = leaves();
  if (labels.size() != leaf_ids.size()) throw InvalidArgument("wrong number of leaf labels");
  for (std::size_t i = 0; i < leaf_ids.size(); ++i) {
    copy.labels_[static_cast<std::size_t>(leaf_ids[i])] = labels[i];
  }
  return copy;
}

PhyloNetwork PhyloNetwork::reordered(const std::vector<int>& order) const {
  if (order.size() != kinds_.size() || (!order.empty() && order[0] != 0)) {
    throw InvalidArgument("reordered: order must be a permutation starting at the root");
  }
  std::vector<int> position(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) position[static_cast<std::size_t>(order[k])] = static_cast<int>(k);
  PhyloNetwork out;
  for (int v : order) out.add_vertex(kind(v), label(v));
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(arcs_.size());
  for (auto [u, v] : arcs_) {
    arcs.emplace_back(position[static_cast<std::size_t>(u)], position[static_cast<std::size_t>(v)]);
  }
  std::sort(arcs.begin(), arcs.end());
  for (auto [u, v] : arcs) out.add_arc(u, v);
  return out;
}

UndirectedMultigraph underlying_graph(const PhyloNetwork& net) {
  return {net.vertex_count(), net.arcs()};
}

namespace {

// Is there a path from a to b avoiding edge `skip`?
bool connected_without(const UndirectedMultigraph& g,
                       const std::vector<std::vector<std::pair<int, std::size_t>>>& adj, int a,
                       int b, std::size_t skip) {
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> stack{a};
  seen[static_cast<std::size_t>(a)] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == b) return true;
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (e == skip || seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      stack.push_back(w);
    }
  }
  return false;
}

int find_root(std::vector<int>& parent, int v) {
  while (parent[static_cast<std::size_t>(v)] != v) {
    parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    v = parent[static_cast<std::size_t>(v)];
  }
  return v;
}

}  // namespace

// In a graph of maximum degree 3, the 2-edge-connected and 2-vertex-connected
// components coincide, so blobs are the components left after deleting
// bridges.
std::vector<Blob> blobs(const PhyloNetwork& net) {
  const UndirectedMultigraph g = underlying_graph(net);
  std::vector<std::vector<std::pair<int, std::size_t>>> adj(g.vertex_count);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    adj[static_cast<std::size_t>(u)].emplace_back(v, e);
    adj[static_cast<std::size_t>(v)].emplace_back(u, e);
  }
  std::vector<char> bridge(g.edges.size(), 0);
  std::vector<int> uf(g.vertex_count);
  std::iota(uf.begin(), uf.end(), 0);
  std::vector<char> on_cycle(g.vertex_count, 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    bridge[e] = !connected_without(g, adj, u, v, e);
    if (!bridge[e]) {
      uf[static_cast<std::size_t>(find_root(uf, u))] = find_root(uf, v);
      on_cycle[static_cast<std::size_t>(u)] = on_cycle[static_cast<std::size_t>(v)] = 1;
    }
  }
  std::vector<int> blob_of(g.vertex_count, -1);
  std::vector<Blob> out;
  std::vector<int> index_of_root(g.vertex_count, -1);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    if (!on_cycle[v]) continue;
    int r = find_root(uf, static_cast<int>(v));
    if (index_of_root[static_cast<std::size_t>(r)] < 0) {
      index_of_root[static_cast<std::size_t>(r)] = static_cast<int>(out.size());
      out.emplace_back();
    }
    int b = index_of_root[static_cast<std::size_t>(r)];
    blob_of[v] = b;
    out[static_cast<std::size_t>(b)].vertices.push_back(static_cast<int>(v));
    if (net.kind(static_cast<int>(v)) == VertexKind::Reticulation) {
      ++out[static_cast<std::size_t>(b)].reticulations;
    }
  }
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (!bridge[e]) continue;
    auto [u, v] = g.edges[e];
    int b = blob_of[static_cast<std::size_t>(u)];
    if (b >= 0 && blob_of[static_cast<std::size_t>(v)] != b) {
      ++out[static_cast<std::size_t>(b)].outgoing_cut_arcs;
    }
  }
  return out;
}

std::optional<std::string> validation_error(const PhyloNetwork& net, bool check_labels) {
  const std::size_t nv = net.vertex_count();
  if (nv == 0) return "empty network";
  const std::size_t n = net.leaf_count();
  if (n == 0) return "no leaves";
  if (n == 1) {
    if (nv != 1 || !net.arcs().empty()) return "a one-leaf network is the single root-leaf vertex";
    if (check_labels && net.label(0) != 1) return "leaf label must be 1";
    return std::nullopt;
  }
  if (net.kind(0) != VertexKind::Root) return "vertex 0 must be the root";
  std::vector<char> label_seen(n + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) {
    const int v = static_cast<int>(i);
    const std::size_t in = net.parents(v).size();
    const std::size_t out = net.children(v).size();
    switch (net.kind(v)) {
      case VertexKind::Root:
        if (v != 0) return "more than one root";
        if (in != 0 || out != 1) return "the root must have no parent and exactly one child";
        break;
      case VertexKind::Tree:
        if (in != 1 || out != 2) return "tree node " + std::to_string(v) + " must have in 1, out 2";
        break;
      case VertexKind::Reticulation:
        if (in != 2 || out != 1) return "reticulation " + std::to_string(v) + " must have in 2, out 1";
        break;
      case VertexKind::Leaf:
        if (in != 1 || out != 0) return "leaf " + std::to_string(v) + " must have in 1, out 0";
        if (check_labels) {
          int label = net.label(v);
          if (label < 1 || static_cast<std::size_t>(label) > n || label_seen[static_cast<std::size_t>(label)]) {
            return "leaf labels must be a bijection onto 1..n";
          }
          label_seen[static_cast<std::size_t>(label)] = 1;
        }
        break;
    }
  }
  // Kahn's algorithm; every vertex must be reached.
  std::vector<std::size_t> indeg(nv);
  for (std::size_t v = 0; v < nv; ++v) indeg[v] = net.parents(static_cast<int>(v)).size();
  std::queue<int> ready;
  ready.push(0);
  std::size_t visited = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++visited;
    for (int w : net.children(v)) {
      if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push(w);
    }
  }
  if (visited != nv) return "network has a directed cycle";
  if (net.tree_node_count() + 1 != n + net.reticulation_count()) {
    return "tree-node count differs from n + r - 1";
  }
  for (const auto& blob : blobs(net)) {
    if (blob.vertices.size() >= 3 && blob.outgoing_cut_arcs < 2) {
      return "a blob has fewer than two outgoing cut arcs";
    }
  }
  return std::nullopt;
}

}  // namespace lvl2
