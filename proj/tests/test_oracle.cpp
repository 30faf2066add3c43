#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "lvl2/certificate.hpp"
#include "lvl2/classify.hpp"
#include "lvl2/generate.hpp"
#include "lvl2/network_io.hpp"
#include "lvl2/outerplanar.hpp"

using namespace lvl2;

namespace {

// root -> v; v -> s, h; s -> h, leaf a; h -> leaf b.
PhyloNetwork triangle(int a, int b) {
  PhyloNetwork net;
  int root = net.add_vertex(VertexKind::Root);
  int v = net.add_vertex(VertexKind::Tree);
  int s = net.add_vertex(VertexKind::Tree);
  int h = net.add_vertex(VertexKind::Reticulation);
  int la = net.add_vertex(VertexKind::Leaf, a);
  int lb = net.add_vertex(VertexKind::Leaf, b);
  net.add_arc(root, v);
  net.add_arc(v, s);
  net.add_arc(v, h);
  net.add_arc(s, h);
  net.add_arc(s, la);
  net.add_arc(h, lb);
  return net;
}

PhyloNetwork cherry(bool swap_order) {
  PhyloNetwork net;
  int root = net.add_vertex(VertexKind::Root);
  int v = net.add_vertex(VertexKind::Tree);
  int first = net.add_vertex(VertexKind::Leaf, swap_order ? 2 : 1);
  int second = net.add_vertex(VertexKind::Leaf, swap_order ? 1 : 2);
  net.add_arc(root, v);
  net.add_arc(v, second);
  net.add_arc(v, first);
  return net;
}

UndirectedMultigraph graph(std::size_t n, std::vector<std::pair<int, int>> edges) {
  return {n, std::move(edges)};
}

// --- brute-force outerplanarity: every block with >= 3 vertices has a
// Hamiltonian cycle whose remaining edges (chords) pairwise do not cross.

struct Blocks {
  std::vector<std::vector<std::pair<int, int>>> edge_sets;
};

Blocks simple_blocks(const UndirectedMultigraph& g) {
  std::set<std::pair<int, int>> simple;
  for (auto [u, v] : g.edges)
    if (u != v) simple.insert({std::min(u, v), std::max(u, v)});
  const int n = static_cast<int>(g.vertex_count);
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : simple) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  Blocks out;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> stack;
  int time = 0;
  auto dfs = [&](auto&& self, int u, int parent) -> void {
    disc[u] = low[u] = time++;
    for (int w : adj[u]) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.push_back({u, w});
        self(self, w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::vector<std::pair<int, int>> block;
          std::pair<int, int> e;
          do {
            e = stack.back();
            stack.pop_back();
            block.push_back(e);
          } while (e != std::make_pair(u, w));
          out.edge_sets.push_back(block);
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(dfs, v, -1);
  return out;
}

bool block_outerplanar(const std::vector<std::pair<int, int>>& edges) {
  std::set<int> vs;
  for (auto [u, v] : edges) vs.insert(u), vs.insert(v);
  if (vs.size() < 3) return true;
  std::vector<int> verts(vs.begin(), vs.end());
  const std::size_t k = verts.size();
  std::map<int, int> idx;
  for (std::size_t i = 0; i < k; ++i) idx[verts[i]] = static_cast<int>(i);
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (auto [u, v] : edges) adj[idx[u]][idx[v]] = adj[idx[v]][idx[u]] = true;

  std::vector<int> cycle = {0};
  std::vector<bool> used(k, false);
  used[0] = true;
  auto chords_ok = [&] {
    std::vector<int> pos(k);
    for (std::size_t i = 0; i < k; ++i) pos[cycle[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> chords;
    for (auto [u, v] : edges) {
      int a = pos[idx[u]], b = pos[idx[v]];
      if (a > b) std::swap(a, b);
      int gap = b - a;
      if (gap == 1 || gap == static_cast<int>(k) - 1) continue;
      chords.push_back({a, b});
    }
    for (auto [a, b] : chords)
      for (auto [c, d] : chords)
        if (a < c && c < b && b < d) return false;
    return true;
  };
  auto extend = [&](auto&& self) -> bool {
    if (cycle.size() == k) return adj[cycle.back()][0] && chords_ok();
    for (std::size_t v = 1; v < k; ++v) {
      if (used[v] || !adj[cycle.back()][v]) continue;
      used[v] = true;
      cycle.push_back(static_cast<int>(v));
      if (self(self)) return true;
      cycle.pop_back();
      used[v] = false;
    }
    return false;
  };
  return extend(extend);
}

bool brute_outerplanar(const UndirectedMultigraph& g) {
  for (const auto& block : simple_blocks(g).edge_sets)
    if (!block_outerplanar(block)) return false;
  return true;
}

// --- brute-force labelled isomorphism: leaves are pinned by label, so only
// tree nodes and reticulations are permuted.

bool brute_isomorphic(const PhyloNetwork& a, const PhyloNetwork& b) {
  if (a.vertex_count() != b.vertex_count() || a.arcs().size() != b.arcs().size()) return false;
  auto ids = [](const PhyloNetwork& n, VertexKind k) {
    std::vector<int> out;
    for (std::size_t v = 0; v < n.vertex_count(); ++v)
      if (n.kind(static_cast<int>(v)) == k) out.push_back(static_cast<int>(v));
    return out;
  };
  auto ta = ids(a, VertexKind::Tree), tb = ids(b, VertexKind::Tree);
  auto ra = ids(a, VertexKind::Reticulation), rb = ids(b, VertexKind::Reticulation);
  auto la = ids(a, VertexKind::Leaf), lb = ids(b, VertexKind::Leaf);
  if (ta.size() != tb.size() || ra.size() != rb.size() || la.size() != lb.size()) return false;
  std::vector<int> map(a.vertex_count(), -1);
  map[0] = 0;
  for (int u : la)
    for (int w : lb)
      if (a.label(u) == b.label(w)) map[u] = w;
  std::multiset<std::pair<int, int>> target(b.arcs().begin(), b.arcs().end());
  std::sort(tb.begin(), tb.end());
  do {
    for (std::size_t i = 0; i < ta.size(); ++i) map[ta[i]] = tb[i];
    std::vector<int> perm = rb;
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t i = 0; i < ra.size(); ++i) map[ra[i]] = perm[i];
      std::multiset<std::pair<int, int>> image;
      for (auto [u, v] : a.arcs()) image.insert({map[u], map[v]});
      if (image == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(tb.begin(), tb.end()));
  return false;
}

std::uint64_t double_factorial(int k) {
  std::uint64_t r = 1;
  for (int i = k; i > 1; i -= 2) r *= static_cast<std::uint64_t>(i);
  return r;
}

const std::vector<PhyloNetwork>& all_n3_r2() {
  static const std::vector<PhyloNetwork> nets = generate_networks(3, 2);
  return nets;
}

}  // namespace

TEST_SUITE_BEGIN("network");

TEST_CASE("triangle network") {
  PhyloNetwork net = triangle(1, 2);
  CHECK_FALSE(validation_error(net).has_value());
  ClassFlags f = classify(net);
  CHECK(f.level == 1);
  CHECK(f.tree_child);
  CHECK(f.galled);
  CHECK(f.outer_planar);
  CHECK_FALSE(f.has_parallel_arcs);
}

TEST_CASE("cherry satisfies every predicate") {
  ClassFlags f = classify(cherry(false));
  CHECK(f.level == 0);
  CHECK(f.tree_child);
  CHECK(f.galled);
  CHECK(f.outer_planar);
}

TEST_CASE("validation catches malformed networks") {
  PhyloNetwork bad = cherry(false);
  bad.add_vertex(VertexKind::Leaf, 3);  // unattached leaf
  CHECK(validation_error(bad).has_value());
  PhyloNetwork dup = cherry(false).with_leaf_labels({1, 1});
  CHECK(validation_error(dup).has_value());
}

TEST_CASE("single leaf") {
  auto nets = generate_networks(1, 3);
  REQUIRE(nets.size() == 1);
  CHECK(nets[0].vertex_count() == 1);
}

TEST_CASE("arc-list round trip") {
  for (const auto& net : all_n3_r2()) {
    std::string text = network_to_string(net);
    CHECK(canonical_certificate(parse_network(text)) == canonical_certificate(net));
  }
  std::istringstream stream(network_to_string(triangle(1, 2)) + "\n" + network_to_string(cherry(true)));
  int records = 0;
  while (read_network(stream)) ++records;
  CHECK(records == 2);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("certificate");

TEST_CASE("presentation independence") {
  CHECK(canonical_certificate(cherry(false)) == canonical_certificate(cherry(true).with_leaf_labels({1, 2})));
  CHECK(canonical_certificate(triangle(1, 2)) != canonical_certificate(triangle(2, 1)));
  CHECK(shape_certificate(triangle(1, 2)) == shape_certificate(triangle(2, 1)));
}

TEST_CASE("soundness under random relabelings") {
  std::mt19937_64 rng(23);
  const auto& nets = all_n3_r2();
  for (std::size_t i = 0; i < nets.size(); i += 7) {
    const PhyloNetwork& net = nets[i];
    std::string cert = canonical_certificate(net);
    std::vector<int> order(net.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin() + 1, order.end(), rng);
    CHECK(canonical_certificate(net.reordered(order)) == cert);

    std::vector<int> labels = {1, 2, 3};
    std::shuffle(labels.begin(), labels.end(), rng);
    PhyloNetwork permuted = net.with_leaf_labels(labels);
    bool same = canonical_certificate(permuted) == cert;
    CHECK(same == brute_isomorphic(net, permuted));
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("outerplanarity");

TEST_CASE("small graphs") {
  CHECK(is_outerplanar(graph(4, {{0, 1}, {1, 2}, {1, 3}})));
  CHECK(is_outerplanar(graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}})));
  CHECK_FALSE(is_outerplanar(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  CHECK_FALSE(is_outerplanar(graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));
  CHECK(is_outerplanar(graph(2, {{0, 1}, {0, 1}})));
  CHECK(has_parallel_edges(graph(2, {{0, 1}, {1, 0}})));
  CHECK_FALSE(brute_outerplanar(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})));
  CHECK_FALSE(brute_outerplanar(graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));
}

TEST_CASE("agrees with the brute-force oracle on generated networks") {
  std::size_t non_outerplanar = 0;
  for (const auto& net : all_n3_r2()) {
    UndirectedMultigraph g = underlying_graph(net);
    bool fast = is_outerplanar(g);
    CHECK(fast == brute_outerplanar(g));
    non_outerplanar += !fast;
  }
  for (const auto& net : generate_shapes(2, 4)) {
    UndirectedMultigraph g = underlying_graph(net);
    CHECK(is_outerplanar(g) == brute_outerplanar(g));
    non_outerplanar += !is_outerplanar(g);
  }
  CHECK(non_outerplanar > 0);  // the sample exercises both answers
}

TEST_CASE("level-1 networks are outer planar") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& net : generate_networks(n, n)) {
      ClassFlags f = classify(net);
      if (f.level == 1) CHECK(f.outer_planar);
    }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("enumeration");

TEST_CASE("trees") {
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(count_class(n, lookup("trees"), 0).count == double_factorial(2 * n - 3));
  }
  CHECK(generate_networks(3, 0).size() == 3);
  CHECK(generate_networks(4, 0).size() == 15);
}

TEST_CASE("tree-child counts") {
  const NetworkClassSpec& tc = lookup("level2-tree-child");
  std::uint64_t expected[] = {1, 3, 66};
  for (int n = 1; n <= 3; ++n) {
    ClassCount c = count_class(n, tc, n - 1, true);
    CHECK(c.count == expected[n - 1]);
    CHECK(c.saturated());
  }
}

TEST_CASE("structural invariants of generated networks") {
  for (const auto& net : all_n3_r2()) {
    CHECK_FALSE(validation_error(net).has_value());
    CHECK(net.tree_node_count() == net.leaf_count() + net.reticulation_count() - 1);
  }
  std::uint64_t via_shapes = 0;
  for (const auto& shape : generate_shapes(3, 2)) via_shapes += labeling_count(shape);
  CHECK(via_shapes == all_n3_r2().size());
  std::set<std::string> certs;
  for (const auto& net : all_n3_r2()) certs.insert(canonical_certificate(net));
  CHECK(certs.size() == all_n3_r2().size());
}

TEST_CASE("class inclusions") {
  std::map<std::string, std::uint64_t> count;
  for (const auto& net : all_n3_r2()) {
    ClassFlags f = classify(net);
    for (const auto& spec : reference_table()) count[spec.name] += matches(f, spec);
  }
  CHECK(count["level2-gtc"] <= count["level2-tree-child"]);
  CHECK(count["level2-gtc"] <= count["level2-galled"]);
  CHECK(count["level2-tree-child"] <= count["level2-general"]);
  for (const char* base : {"general", "tree-child", "galled", "gtc"}) {
    std::string name = std::string("level2-") + base;
    CHECK(count[name + "-outerplanar"] <= count[name]);
  }
  // Pruned tree-child search agrees with filtering the full enumeration.
  CHECK(count_class(3, lookup("level2-tree-child"), 2).count == count["level2-tree-child"]);
  CHECK(count_class(3, lookup("level2-gtc"), 2).count == count["level2-gtc"]);
  CHECK(count["level2-gtc"] == 48);  // regression value
}

TEST_CASE("parallel arcs appear only outside tree-child") {
  bool seen = false;
  for (const auto& net : generate_networks(2, 2)) {
    ClassFlags f = classify(net);
    if (f.has_parallel_arcs) {
      seen = true;
      CHECK_FALSE(f.tree_child);
    }
  }
  CHECK(seen);
}

TEST_CASE("a blob with three reticulations is not level 2") {
  bool seen = false;
  for (const auto& net : generate_shapes(2, 3)) {
    ClassFlags f = classify(net);
    if (f.level >= 3) {
      seen = true;
      for (const auto& spec : reference_table()) CHECK_FALSE(matches(f, spec));
    }
  }
  CHECK(seen);
}

TEST_CASE("deterministic parallel search") {
  GenerateOptions four;
  four.threads = 4;
  auto serial = generate_shapes(3, 2);
  auto parallel = generate_shapes(3, 2, four);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i)
    CHECK(network_to_string(serial[i]) == network_to_string(parallel[i]));
}

TEST_CASE("budget") {
  GenerateOptions tight;
  tight.state_budget = 50;
  try {
    count_class(4, lookup("level2-tree-child"), 3, false, tight);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.progress().states > 50);
  }
}

TEST_SUITE_END();
