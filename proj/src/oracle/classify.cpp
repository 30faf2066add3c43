#include "lvl2/classify.hpp"

#include <algorithm>

#include "lvl2/outerplanar.hpp"

namespace lvl2 {

bool is_tree_child(const PhyloNetwork& net) {
  for (std::size_t i = 0; i < net.vertex_count(); ++i) {
    const int v = static_cast<int>(i);
    if (net.kind(v) != VertexKind::Tree && net.kind(v) != VertexKind::Reticulation) continue;
    const auto& ch = net.children(v);
    bool ok = std::any_of(ch.begin(), ch.end(),
                          [&](int w) { return net.kind(w) != VertexKind::Reticulation; });
    if (!ok) return false;
  }
  return true;
}

namespace {

// p, parent(p), ... while the vertices are tree nodes.
std::vector<int> tree_node_ancestry(const PhyloNetwork& net, int p) {
  std::vector<int> chain;
  while (net.kind(p) == VertexKind::Tree) {
    chain.push_back(p);
    p = net.parents(p).front();
  }
  return chain;
}

}  // namespace

bool is_galled(const PhyloNetwork& net) {
  for (std::size_t i = 0; i < net.vertex_count(); ++i) {
    const int v = static_cast<int>(i);
    if (net.kind(v) != VertexKind::Reticulation) continue;
    const auto& ps = net.parents(v);
    auto a = tree_node_ancestry(net, ps[0]);
    auto b = tree_node_ancestry(net, ps[1]);
    bool closed = std::any_of(a.begin(), a.end(), [&](int w) {
      return std::find(b.begin(), b.end(), w) != b.end();
    });
    if (!closed) return false;
  }
  return true;
}

ClassFlags classify(const PhyloNetwork& net) {
  ClassFlags flags;
  flags.blob_condition = true;
  for (const auto& blob : blobs(net)) {
    flags.level = std::max(flags.level, static_cast<int>(blob.reticulations));
    if (blob.vertices.size() >= 3 && blob.outgoing_cut_arcs < 2) flags.blob_condition = false;
  }
  flags.tree_child = is_tree_child(net);
  flags.galled = is_galled(net);
  const auto g = underlying_graph(net);
  flags.outer_planar = is_outerplanar(g);
  flags.has_parallel_arcs = has_parallel_edges(g);
  return flags;
}

bool matches(const ClassFlags& flags, const NetworkClassSpec& spec) {
  if (flags.level > spec.level) return false;
  if (spec.tree_child && !flags.tree_child) return false;
  if (spec.galled && !flags.galled) return false;
  if (spec.outer_planar && !flags.outer_planar) return false;
  return true;
}

}  // namespace lvl2
