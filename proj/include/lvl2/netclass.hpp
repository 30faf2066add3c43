#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lvl2/error.hpp"
#include "lvl2/rational_function.hpp"
#include "lvl2/series_expr.hpp"

namespace lvl2 {

// A network class: structural flags plus, where known, the functional
// equation of its exponential generating function and published constants.
// The constants are kept as the decimal strings they were printed as; they
// are comparison targets, not inputs.
struct NetworkClassSpec {
  std::string name;
  std::string description;
  int level = 2;
  bool tree_child = false;
  bool galled = false;
  bool outer_planar = false;
  std::optional<SeriesExpr> equation;
  std::optional<std::string> reference_c;
  std::optional<std::string> reference_gamma;
};

class UnknownClass : public Error {
 public:
  explicit UnknownClass(const std::string& name);
};

// Right-hand side of the equation satisfied by the EGF T(x) of level-2
// tree-child networks, with U standing for T.
SeriesExpr tree_child_equation();

// For eq = X + F(U) with F free of X, returns phi(z) = z / (z - F(z)), so that
// T = x + F(T) becomes T = x phi(T). Throws InvalidArgument on any other shape.
RationalFunction derive_phi(const SeriesExpr& eq);

// The eight level-2 cells (general / tree-child / galled / GTC, each with
// arbitrary and outer-planar planarity).
const std::vector<NetworkClassSpec>& reference_table();

// reference_table() plus classes only the enumerator understands: "trees"
// (level 0) and "level1".
const std::vector<NetworkClassSpec>& known_classes();

// Throws UnknownClass listing every known name.
const NetworkClassSpec& lookup(const std::string& name);

nlohmann::json to_json(const NetworkClassSpec& spec);
nlohmann::json registry_json();

}  // namespace lvl2
