#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "lvl2/network.hpp"

namespace lvl2 {

// Arc-list record:
//   n=<leaves> r=<reticulations>
//   <u> -> <v>      (one line per arc)
// Non-leaf vertices are numbered 0.. in vertex order (the root is 0); leaves
// are written L<label>. Records in a stream are separated by a blank line.
void write_network(std::ostream& out, const PhyloNetwork& net);
std::string network_to_string(const PhyloNetwork& net);

// Reads the next record, skipping blank lines; nullopt at end of input.
// Throws InvalidArgument on malformed records.
std::optional<PhyloNetwork> read_network(std::istream& in);
PhyloNetwork parse_network(const std::string& text);

}  // namespace lvl2
