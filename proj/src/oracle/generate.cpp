#include "lvl2/generate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "lvl2/certificate.hpp"
#include "lvl2/classify.hpp"

namespace lvl2 {

namespace {

using ShapeMap = std::map<std::vector<std::uint16_t>, PhyloNetwork>;

// A network under top-down construction. Open stubs are out-slots whose head
// is still undecided; they are resolved first-in first-out. A half-open
// reticulation has one parent and waits for its second.
struct Partial {
  struct Stub {
    int vertex;
    int slot;
  };
  std::vector<VertexKind> kind;
  std::vector<std::array<int, 2>> child;
  std::vector<std::array<int, 2>> parent;
  std::vector<Stub> stubs;
  std::size_t stub_head = 0;
  std::vector<int> half_open;
  int leaves = 0;
  int retics = 0;
  int trees = 0;

  int add(VertexKind k) {
    kind.push_back(k);
    child.push_back({-1, -1});
    parent.push_back({-1, -1});
    return static_cast<int>(kind.size()) - 1;
  }
  std::size_t open_stubs() const { return stubs.size() - stub_head; }

  // Is a an ancestor of b (or b itself)?
  bool reaches_up(int b, int a) const {
    std::vector<int> stack{b};
    std::vector<char> seen(kind.size(), 0);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == a) return true;
      for (int p : parent[static_cast<std::size_t>(v)]) {
        if (p >= 0 && !seen[static_cast<std::size_t>(p)]) {
          seen[static_cast<std::size_t>(p)] = 1;
          stack.push_back(p);
        }
      }
    }
    return false;
  }

  PhyloNetwork finish() const {
    PhyloNetwork net;
    for (auto k : kind) net.add_vertex(k);
    for (std::size_t v = 0; v < kind.size(); ++v) {
      for (int c : child[v]) {
        if (c >= 0) net.add_arc(static_cast<int>(v), c);
      }
    }
    return net;
  }
};

class ShapeSearch {
 public:
  ShapeSearch(int n, int r_max, const GenerateOptions& options)
      : n_(n), r_max_(r_max), options_(options) {}

  // Depth-first search below `state`, recording complete shapes.
  void explore(const Partial& state) {
    count_state();
    if (state.open_stubs() == 0) {
      if (state.half_open.empty() && state.leaves == n_) record(state);
      return;
    }
    expand(state, [this](const Partial& next) { explore(next); });
  }

  // Breadth-first expansion of the first levels, used to split work between
  // threads. States that complete early are recorded directly.
  std::vector<Partial> frontier(const Partial& start, std::size_t wanted) {
    std::vector<Partial> level{start};
    while (!level.empty() && level.size() < wanted) {
      std::vector<Partial> next_level;
      for (const auto& s : level) {
        count_state();
        if (s.open_stubs() == 0) {
          if (s.half_open.empty() && s.leaves == n_) record(s);
          continue;
        }
        expand(s, [&](const Partial& next) { next_level.push_back(next); });
      }
      level = std::move(next_level);
    }
    return level;
  }

  ShapeMap& shapes() { return shapes_; }
  std::uint64_t states() const { return states_; }

  std::atomic<std::uint64_t>* shared_states = nullptr;

 private:
  // Every viable way to resolve the first open stub: a leaf, a tree node, a
  // new reticulation, or the second parent slot of a half-open reticulation
  // that is not an ancestor of the stub's tail.
  template <class Visit>
  void expand(const Partial& state, Visit&& visit) const {
    const auto stub = state.stubs[state.stub_head];
    const VertexKind tail_kind = state.kind[static_cast<std::size_t>(stub.vertex)];
    const int sibling = stub.slot == 1 ? state.child[static_cast<std::size_t>(stub.vertex)][0] : -1;

    if (state.leaves < n_) {
      Partial next = state;
      ++next.stub_head;
      int leaf = next.add(VertexKind::Leaf);
      attach(next, stub, leaf);
      ++next.leaves;
      if (viable(next)) visit(next);
    }
    if (state.trees < n_ + r_max_ - 1) {
      Partial next = state;
      ++next.stub_head;
      int t = next.add(VertexKind::Tree);
      attach(next, stub, t);
      ++next.trees;
      next.stubs.push_back({t, 0});
      next.stubs.push_back({t, 1});
      if (viable(next)) visit(next);
    }

    const bool retic_child_allowed =
        !options_.tree_child_only ||
        (tail_kind != VertexKind::Reticulation &&
         !(sibling >= 0 && state.kind[static_cast<std::size_t>(sibling)] == VertexKind::Reticulation));
    if (!retic_child_allowed) return;

    if (state.retics < r_max_) {
      Partial next = state;
      ++next.stub_head;
      int h = next.add(VertexKind::Reticulation);
      attach(next, stub, h);
      ++next.retics;
      next.half_open.push_back(h);
      next.stubs.push_back({h, 0});
      if (viable(next)) visit(next);
    }
    for (std::size_t i = 0; i < state.half_open.size(); ++i) {
      const int h = state.half_open[i];
      if (state.reaches_up(stub.vertex, h)) continue;
      Partial next = state;
      ++next.stub_head;
      attach(next, stub, h);
      next.half_open.erase(next.half_open.begin() + static_cast<long>(i));
      if (viable(next)) visit(next);
    }
  }

  static void attach(Partial& p, const Partial::Stub& stub, int head) {
    p.child[static_cast<std::size_t>(stub.vertex)][static_cast<std::size_t>(stub.slot)] = head;
    auto& par = p.parent[static_cast<std::size_t>(head)];
    (par[0] < 0 ? par[0] : par[1]) = stub.vertex;
  }

  // Open stubs minus pending reticulation slots can only shrink through new
  // leaves and new reticulations.
  bool viable(const Partial& p) const {
    const long balance = static_cast<long>(p.open_stubs()) - static_cast<long>(p.half_open.size());
    if (balance > static_cast<long>(n_ - p.leaves) + static_cast<long>(r_max_ - p.retics)) return false;
    if (p.open_stubs() == 0 && (!p.half_open.empty() || p.leaves != n_)) return false;
    return true;
  }

  void count_state() {
    ++states_;
    std::uint64_t total = states_;
    if (shared_states != nullptr) total = shared_states->fetch_add(1) + 1;
    if (options_.state_budget != 0 && total > options_.state_budget) {
      throw BudgetExceeded("search budget of " + std::to_string(options_.state_budget) +
                               " states exceeded after finding " + std::to_string(shapes_.size()) +
                               " shapes",
                           {total, shapes_.size()});
    }
  }

  void record(const Partial& p) {
    PhyloNetwork net = p.finish();
    if (validation_error(net, false)) return;
    CanonicalForm form = canonical_form(net, false);
    if (shapes_.count(form.code) == 0) shapes_.emplace(std::move(form.code), net.reordered(form.order));
  }

  int n_;
  int r_max_;
  GenerateOptions options_;
  ShapeMap shapes_;
  std::uint64_t states_ = 0;
};

}  // namespace

std::vector<PhyloNetwork> generate_shapes(int n, int r_max, const GenerateOptions& options,
                                          GenerationProgress* progress) {
  if (n < 1) throw InvalidArgument("generate_shapes: n must be >= 1");
  if (r_max < 0) throw InvalidArgument("generate_shapes: r_max must be >= 0");
  if (n == 1) {
    if (progress) *progress = {1, 1};
    PhyloNetwork single = PhyloNetwork::single_leaf();
    return {single.with_leaf_labels({0})};
  }
  Partial start;
  int root = start.add(VertexKind::Root);
  start.stubs.push_back({root, 0});

  ShapeMap shapes;
  std::uint64_t states = 0;
  if (options.threads <= 1) {
    ShapeSearch search(n, r_max, options);
    try {
      search.explore(start);
    } catch (const BudgetExceeded& e) {
      if (progress) *progress = e.progress();
      throw;
    }
    shapes = std::move(search.shapes());
    states = search.states();
  } else {
    ShapeSearch seed(n, r_max, options);
    std::vector<Partial> work = seed.frontier(start, 8 * options.threads);
    shapes = std::move(seed.shapes());
    std::atomic<std::uint64_t> shared{seed.states()};
    std::atomic<std::size_t> next{0};
    std::mutex merge_lock;
    std::exception_ptr failure;
    auto worker = [&] {
      ShapeSearch local(n, r_max, options);
      local.shared_states = &shared;
      try {
        for (std::size_t i = next++; i < work.size(); i = next++) local.explore(work[i]);
      } catch (...) {
        std::lock_guard<std::mutex> guard(merge_lock);
        if (!failure) failure = std::current_exception();
        next = work.size();
      }
      std::lock_guard<std::mutex> guard(merge_lock);
      shapes.merge(local.shapes());
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < options.threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    states = shared.load();
    if (failure) {
      if (progress) *progress = {states, shapes.size()};
      std::rethrow_exception(failure);
    }
  }
  if (progress) *progress = {states, shapes.size()};
  std::vector<PhyloNetwork> out;
  out.reserve(shapes.size());
  for (auto& [key, net] : shapes) out.push_back(std::move(net));
  return out;
}

std::vector<PhyloNetwork> labelings(const PhyloNetwork& shape) {
  const std::size_t n = shape.leaf_count();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  ShapeMap seen;
  do {
    PhyloNetwork labelled = shape.with_leaf_labels(labels);
    CanonicalForm form = canonical_form(labelled, true);
    if (seen.count(form.code) == 0) seen.emplace(std::move(form.code), labelled.reordered(form.order));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::vector<PhyloNetwork> out;
  out.reserve(seen.size());
  for (auto& [key, net] : seen) out.push_back(std::move(net));
  return out;
}

std::uint64_t labeling_count(const PhyloNetwork& shape) {
  const std::size_t n = shape.leaf_count();
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 1);
  std::set<std::vector<std::uint16_t>> seen;
  do {
    seen.insert(canonical_form(shape.with_leaf_labels(labels), true).code);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return seen.size();
}

void generate_networks(int n, int r_max, const GenerateOptions& options,
                       const std::function<void(const PhyloNetwork&)>& sink) {
  for (const auto& shape : generate_shapes(n, r_max, options)) {
    for (const auto& net : labelings(shape)) sink(net);
  }
}

std::vector<PhyloNetwork> generate_networks(int n, int r_max, const GenerateOptions& options) {
  std::vector<PhyloNetwork> out;
  generate_networks(n, r_max, options, [&](const PhyloNetwork& net) { out.push_back(net); });
  return out;
}

int default_reticulation_bound(int n, const NetworkClassSpec& spec) {
  if (spec.level == 0) return 0;
  if (spec.tree_child || spec.level == 1) return n - 1;
  return 2 * (n - 1);
}

ClassCount count_class(int n, const NetworkClassSpec& spec, int r_max, bool saturate,
                       const GenerateOptions& options) {
  GenerateOptions opts = options;
  opts.tree_child_only = opts.tree_child_only || spec.tree_child;
  auto run = [&](int bound, GenerationProgress& progress, std::size_t& shape_count) {
    std::uint64_t total = 0;
    shape_count = 0;
    for (const auto& shape : generate_shapes(n, bound, opts, &progress)) {
      if (!matches(classify(shape), spec)) continue;
      ++shape_count;
      total += labeling_count(shape);
    }
    return total;
  };
  ClassCount result;
  result.count = run(r_max, result.progress, result.shapes);
  if (saturate) {
    GenerationProgress ignored;
    std::size_t shapes = 0;
    result.recount = run(r_max + 1, ignored, shapes);
  }
  return result;
}

}  // namespace lvl2
