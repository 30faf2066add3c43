#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lvl2/error.hpp"
#include "lvl2/netclass.hpp"
#include "lvl2/network.hpp"

namespace lvl2 {

struct GenerateOptions {
  // Abort after this many search states (0 = unlimited).
  std::uint64_t state_budget = 0;
  // Cut branches that already violate the tree-child condition.
  bool tree_child_only = false;
  unsigned threads = 1;
};

struct GenerationProgress {
  std::uint64_t states = 0;
  std::size_t shapes = 0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, GenerationProgress progress)
      : Error(what), progress_(progress) {}
  const GenerationProgress& progress() const { return progress_; }

 private:
  GenerationProgress progress_;
};

// One canonical representative (leaves unlabeled) per shape: valid networks
// with n leaves and at most r_max reticulations, up to isomorphism ignoring
// leaf labels. Sorted by shape certificate.
std::vector<PhyloNetwork> generate_shapes(int n, int r_max, const GenerateOptions& options = {},
                                          GenerationProgress* progress = nullptr);

// One canonical representative per leaf-labelled isomorphism class of the
// shape's labelings.
std::vector<PhyloNetwork> labelings(const PhyloNetwork& shape);
std::uint64_t labeling_count(const PhyloNetwork& shape);

// Every leaf-labelled isomorphism class with n leaves and at most r_max
// reticulations, streamed in a deterministic order.
void generate_networks(int n, int r_max, const GenerateOptions& options,
                       const std::function<void(const PhyloNetwork&)>& sink);
std::vector<PhyloNetwork> generate_networks(int n, int r_max, const GenerateOptions& options = {});

struct ClassCount {
  std::uint64_t count = 0;
  std::size_t shapes = 0;
  GenerationProgress progress;
  // Filled when a saturation re-check at r_max + 1 was requested.
  std::optional<std::uint64_t> recount;
  bool saturated() const { return recount && *recount == count; }
};

// Reticulation bound used when the caller has none: 0 for trees, n - 1 for
// tree-child and level-1 classes, 2(n - 1) otherwise.
int default_reticulation_bound(int n, const NetworkClassSpec& spec);

ClassCount count_class(int n, const NetworkClassSpec& spec, int r_max, bool saturate = false,
                       const GenerateOptions& options = {});

}  // namespace lvl2
