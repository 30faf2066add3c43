#pragma once

#include "lvl2/network.hpp"

namespace lvl2 {

// Outerplanarity of the simple graph underlying g: planar after adding an
// apex adjacent to every vertex. Parallel edges and loops are ignored.
bool is_outerplanar(const UndirectedMultigraph& g);

bool has_parallel_edges(const UndirectedMultigraph& g);

}  // namespace lvl2
