#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lvl2/network.hpp"

namespace lvl2 {

struct CanonicalForm {
  std::vector<std::uint16_t> code;  // compared lexicographically
  std::vector<int> order;           // order[k] = vertex placed at position k
};

// Colour refinement seeded with (root | tree | reticulation | leaf label),
// then exhaustive individualisation of the first non-singleton class, keeping
// the lexicographically smallest encoding. With use_leaf_labels = false all
// leaves share one colour, giving a certificate of the unlabeled shape.
CanonicalForm canonical_form(const PhyloNetwork& net, bool use_leaf_labels = true);

// Lowercase hex of the canonical code. Equal iff isomorphic by a map fixing
// the root and every leaf label.
std::string canonical_certificate(const PhyloNetwork& net);
std::string shape_certificate(const PhyloNetwork& net);

}  // namespace lvl2
