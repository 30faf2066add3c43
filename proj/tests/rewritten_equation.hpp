#pragma once

#include "lvl2/series_expr.hpp"

// The tree-child right-hand side, rewritten without shared subterms:
// (1/(1-T))^2 - 1 becomes (2T - T^2)/(1 - 2T + T^2) and T/(1-T) becomes
// T * (1-T)^-1. Typed independently of the library's version.
inline lvl2::SeriesExpr rewritten_tree_child_rhs() {
  using lvl2::SeriesExpr;
  SeriesExpr X = SeriesExpr::x(), U = SeriesExpr::u();
  auto sq = [&] { return 1 - 2 * U + pow(U, 2); };
  auto extra = [&] { return (2 * U - pow(U, 2)) / sq(); };
  return X + pow(U, 2) / 2 + extra() * U / 2 +
         3 * U * pow(1 - U, -3) * extra() * U / 2 + pow(1 - U, -4) * extra() * pow(U, 2) +
         pow(extra(), 2) * pow(U, 2) / (4 * sq());
}
