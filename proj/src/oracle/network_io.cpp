#include "lvl2/network_io.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>

#include "lvl2/error.hpp"

namespace lvl2 {

void write_network(std::ostream& out, const PhyloNetwork& net) {
  out << "n=" << net.leaf_count() << " r=" << net.reticulation_count() << "\n";
  if (net.vertex_count() == 1) return;
  std::vector<int> number(net.vertex_count(), -1);
  int next = 0;
  for (std::size_t v = 0; v < net.vertex_count(); ++v) {
    if (net.kind(static_cast<int>(v)) != VertexKind::Leaf) number[v] = next++;
  }
  auto name = [&](int v) {
    return net.kind(v) == VertexKind::Leaf ? "L" + std::to_string(net.label(v))
                                           : std::to_string(number[static_cast<std::size_t>(v)]);
  };
  for (auto [u, v] : net.arcs()) out << name(u) << " -> " << name(v) << "\n";
}

std::string network_to_string(const PhyloNetwork& net) {
  std::ostringstream out;
  write_network(out, net);
  return out.str();
}

std::optional<PhyloNetwork> read_network(std::istream& in) {
  static const std::regex header(R"(\s*n=(\d+)\s+r=(\d+)\s*)");
  static const std::regex arc(R"(\s*(L?\d+)\s*->\s*(L?\d+)\s*)");
  std::string line;
  bool found = false;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) {
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw InvalidArgument("bad network header: " + line);
  const int n = std::stoi(m[1]);
  const int r = std::stoi(m[2]);

  std::vector<std::pair<std::string, std::string>> arcs;
  while (in.peek() != EOF) {
    std::streampos pos = in.tellg();
    if (!std::getline(in, line)) break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) break;
    if (std::regex_match(line, m, header)) {
      in.seekg(pos);
      break;
    }
    if (!std::regex_match(line, m, arc)) throw InvalidArgument("bad arc line: " + line);
    arcs.emplace_back(m[1], m[2]);
  }
  if (n == 1 && arcs.empty()) return PhyloNetwork::single_leaf();

  // Internal vertices keep their numbers; leaves follow in label order.
  std::map<int, int> internal;
  std::map<int, int> leaf_ids;
  for (const auto& [a, b] : arcs) {
    for (const auto* name : {&a, &b}) {
      if ((*name)[0] == 'L') {
        leaf_ids.emplace(std::stoi(name->substr(1)), -1);
      } else {
        internal.emplace(std::stoi(*name), -1);
      }
    }
  }
  std::map<int, std::size_t> indeg;
  std::map<int, std::size_t> outdeg;
  for (const auto& [a, b] : arcs) {
    if (a[0] != 'L') ++outdeg[std::stoi(a)];
    if (b[0] != 'L') ++indeg[std::stoi(b)];
  }
  PhyloNetwork net;
  for (auto& [id, vertex] : internal) {
    VertexKind kind = indeg[id] == 0 ? VertexKind::Root
                      : indeg[id] >= 2 ? VertexKind::Reticulation
                                       : VertexKind::Tree;
    vertex = net.add_vertex(kind);
  }
  if (internal.empty() || internal.begin()->first != 0 || indeg[0] != 0) {
    throw InvalidArgument("network record must number the root 0");
  }
  for (auto& [label, vertex] : leaf_ids) vertex = net.add_vertex(VertexKind::Leaf, label);
  auto resolve = [&](const std::string& name) {
    return name[0] == 'L' ? leaf_ids.at(std::stoi(name.substr(1))) : internal.at(std::stoi(name));
  };
  for (const auto& [a, b] : arcs) net.add_arc(resolve(a), resolve(b));
  if (static_cast<int>(net.leaf_count()) != n || static_cast<int>(net.reticulation_count()) != r) {
    throw InvalidArgument("network header does not match its arcs");
  }
  return net;
}

PhyloNetwork parse_network(const std::string& text) {
  std::istringstream in(text);
  auto net = read_network(in);
  if (!net) throw InvalidArgument("no network record found");
  return *net;
}

}  // namespace lvl2
