#include "lvl2/outerplanar.hpp"

#include <algorithm>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace lvl2 {

namespace {

std::set<std::pair<int, int>> simple_edges(const UndirectedMultigraph& g) {
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    edges.emplace(std::min(u, v), std::max(u, v));
  }
  return edges;
}

}  // namespace

bool is_outerplanar(const UndirectedMultigraph& g) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                      boost::property<boost::vertex_index_t, int>,
                                      boost::property<boost::edge_index_t, int>>;
  const auto n = static_cast<int>(g.vertex_count);
  Graph graph(static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : simple_edges(g)) boost::add_edge(u, v, graph);
  for (int v = 0; v < n; ++v) boost::add_edge(v, n, graph);
  return boost::boyer_myrvold_planarity_test(graph);
}

bool has_parallel_edges(const UndirectedMultigraph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) return true;
  }
  return false;
}

}  // namespace lvl2
