#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lvl2 {

enum class VertexKind : std::uint8_t { Root, Tree, Reticulation, Leaf };

// Rooted acyclic digraph whose sinks are leaves. Leaf labels are 1..n once
// assigned; 0 marks an unlabeled leaf (used for label-free shapes during
// enumeration). The one-leaf network is a single vertex that is both root
// and leaf.
class PhyloNetwork {
 public:
  PhyloNetwork() = default;

  static PhyloNetwork single_leaf();

  int add_vertex(VertexKind kind, int label = 0);
  void add_arc(int tail, int head);

  std::size_t vertex_count() const { return kinds_.size(); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  VertexKind kind(int v) const { return kinds_[static_cast<std::size_t>(v)]; }
  int label(int v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& children(int v) const { return children_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& parents(int v) const { return parents_[static_cast<std::size_t>(v)]; }
  int root() const { return 0; }

  std::size_t leaf_count() const;
  std::size_t reticulation_count() const;
  std::size_t tree_node_count() const;
  std::vector<int> leaves() const;  // in vertex order

  // Copy with leaf i (in vertex order) labelled labels[i].
  PhyloNetwork with_leaf_labels(const std::vector<int>& labels) const;
  // Copy whose vertex order[k] becomes vertex k. order[0] must be the root.
  PhyloNetwork reordered(const std::vector<int>& order) const;

 private:
  std::vector<VertexKind> kinds_;
  std::vector<int> labels_;
  std::vector<std::vector<int>> children_;
  std::vector<std::vector<int>> parents_;
  std::vector<std::pair<int, int>> arcs_;
};

// Undirected multigraph on vertices 0..vertex_count-1.
struct UndirectedMultigraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

UndirectedMultigraph underlying_graph(const PhyloNetwork& net);

// A cyclic 2-connected component of the underlying graph. A pair of
// parallel arcs forms a two-vertex blob.
struct Blob {
  std::vector<int> vertices;
  std::size_t reticulations = 0;
  std::size_t outgoing_cut_arcs = 0;
};

std::vector<Blob> blobs(const PhyloNetwork& net);

// Describes the first violated structural invariant (degrees, single root,
// acyclicity, leaf labels, blob out-degree, tree-node count), or nullopt.
// Leaf labels are only checked when check_labels is set.
std::optional<std::string> validation_error(const PhyloNetwork& net, bool check_labels = true);

}  // namespace lvl2
