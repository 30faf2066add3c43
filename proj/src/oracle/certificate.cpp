#include "lvl2/certificate.hpp"

#include <algorithm>
#include <set>

namespace lvl2 {

namespace {

using Colouring = std::vector<int>;

struct Search {
  const PhyloNetwork& net;
  std::vector<std::uint16_t> initial;  // seed colour per vertex
  std::vector<std::uint16_t> best_code;
  std::vector<int> best_order;
  bool have_best = false;

  // Iterated refinement: a vertex's new colour is the rank of
  // (colour, sorted child colours, sorted parent colours). Ranks follow the
  // sorted signatures, so old cells keep their relative order.
  Colouring refine(Colouring colours) const {
    const std::size_t nv = net.vertex_count();
    std::size_t classes = std::set<int>(colours.begin(), colours.end()).size();
    for (;;) {
      std::vector<std::vector<int>> sig(nv);
      for (std::size_t v = 0; v < nv; ++v) {
        std::vector<int> down;
        std::vector<int> up;
        for (int w : net.children(static_cast<int>(v))) down.push_back(colours[static_cast<std::size_t>(w)]);
        for (int w : net.parents(static_cast<int>(v))) up.push_back(colours[static_cast<std::size_t>(w)]);
        std::sort(down.begin(), down.end());
        std::sort(up.begin(), up.end());
        sig[v].push_back(colours[v]);
        sig[v].push_back(static_cast<int>(down.size()));
        sig[v].insert(sig[v].end(), down.begin(), down.end());
        sig[v].insert(sig[v].end(), up.begin(), up.end());
      }
      std::vector<std::vector<int>> distinct = sig;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (std::size_t v = 0; v < nv; ++v) {
        colours[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                      distinct.begin());
      }
      if (distinct.size() == classes) return colours;
      classes = distinct.size();
    }
  }

  void encode(const Colouring& colours) {
    const std::size_t nv = net.vertex_count();
    std::vector<int> order(nv);
    for (std::size_t v = 0; v < nv; ++v) order[static_cast<std::size_t>(colours[v])] = static_cast<int>(v);
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : net.arcs()) {
      arcs.emplace_back(colours[static_cast<std::size_t>(u)], colours[static_cast<std::size_t>(v)]);
    }
    std::sort(arcs.begin(), arcs.end());
    std::vector<std::uint16_t> code;
    code.reserve(2 + nv + 2 * arcs.size());
    code.push_back(static_cast<std::uint16_t>(nv));
    for (int v : order) code.push_back(initial[static_cast<std::size_t>(v)]);
    code.push_back(static_cast<std::uint16_t>(arcs.size()));
    for (auto [a, b] : arcs) {
      code.push_back(static_cast<std::uint16_t>(a));
      code.push_back(static_cast<std::uint16_t>(b));
    }
    if (!have_best || code < best_code) {
      best_code = std::move(code);
      best_order = std::move(order);
      have_best = true;
    }
  }

  void run(const Colouring& seed) {
    Colouring colours = refine(seed);
    const std::size_t nv = colours.size();
    std::vector<std::size_t> cell_size(nv, 0);
    for (int c : colours) ++cell_size[static_cast<std::size_t>(c)];
    // First non-singleton cell by colour.
    int target = -1;
    for (std::size_t c = 0; c < nv; ++c) {
      if (cell_size[c] > 1) {
        target = static_cast<int>(c);
        break;
      }
    }
    if (target < 0) {
      encode(colours);
      return;
    }
    for (std::size_t v = 0; v < nv; ++v) {
      if (colours[v] != target) continue;
      Colouring split(nv);
      for (std::size_t w = 0; w < nv; ++w) split[w] = 2 * colours[w] + 1;
      split[v] = 2 * colours[v];
      run(split);
    }
  }
};

std::uint16_t seed_colour(const PhyloNetwork& net, int v, bool use_labels) {
  switch (net.kind(v)) {
    case VertexKind::Root: return 0;
    case VertexKind::Tree: return 1;
    case VertexKind::Reticulation: return 2;
    case VertexKind::Leaf: break;
  }
  return static_cast<std::uint16_t>(3 + (use_labels ? net.label(v) : 0));
}

std::string to_hex(const std::vector<std::uint16_t>& code) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 4);
  for (std::uint16_t word : code) {
    for (int shift = 12; shift >= 0; shift -= 4) out.push_back(digits[(word >> shift) & 0xF]);
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form(const PhyloNetwork& net, bool use_leaf_labels) {
  Search search{net, {}, {}, {}, false};
  const std::size_t nv = net.vertex_count();
  search.initial.resize(nv);
  Colouring seed(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    search.initial[v] = seed_colour(net, static_cast<int>(v), use_leaf_labels);
    seed[v] = search.initial[v];
  }
  search.run(seed);
  return {std::move(search.best_code), std::move(search.best_order)};
}

std::string canonical_certificate(const PhyloNetwork& net) {
  return to_hex(canonical_form(net, true).code);
}

std::string shape_certificate(const PhyloNetwork& net) {
  return to_hex(canonical_form(net, false).code);
}

}  // namespace lvl2
