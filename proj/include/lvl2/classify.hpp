#pragma once

#include "lvl2/netclass.hpp"
#include "lvl2/network.hpp"

namespace lvl2 {

struct ClassFlags {
  int level = 0;  // max reticulations in one blob; 0 iff tree
  bool tree_child = false;
  bool galled = false;
  bool blob_condition = false;
  bool outer_planar = false;
  bool has_parallel_arcs = false;
};

ClassFlags classify(const PhyloNetwork& net);

// Every interior vertex has a child that is not a reticulation.
bool is_tree_child(const PhyloNetwork& net);

// Every reticulation v closes a tree cycle: two arc-disjoint paths from a
// common tree node to v whose inner vertices are tree nodes. Since tree
// nodes have one parent, such a pair is unique when it exists.
bool is_galled(const PhyloNetwork& net);

// True iff the network's flags satisfy the class (level bound and each
// required structural flag).
bool matches(const ClassFlags& flags, const NetworkClassSpec& spec);

}  // namespace lvl2
