#include "lvl2/fixed_point.hpp"

namespace lvl2 {

TruncatedSeries fixed_point_solve(const SeriesExpr& expr, std::size_t order) {
  TruncatedSeries current(0);  // S_0 = 0
  for (std::size_t k = 1; k <= order; ++k) {
    TruncatedSeries widened(k);
    for (std::size_t i = 0; i < k; ++i) widened.set(i, current[i]);
    TruncatedSeries next = eval_expr(expr, TruncatedSeries::variable(k), widened);
    // Coefficients below k were final in the previous iterate.
    for (std::size_t i = 0; i < k; ++i) {
      if (next[i] != current[i]) {
        throw ContractionError("fixed-point iteration does not contract: coefficient of x^" +
                                   std::to_string(i) + " changed at iteration " +
                                   std::to_string(k),
                               i);
      }
    }
    current = std::move(next);
  }
  TruncatedSeries residual = eval_expr(expr, TruncatedSeries::variable(order), current) - current;
  if (std::size_t v = residual.valuation(); v <= order) {
    throw ContractionError("fixed-point residual is nonzero at x^" + std::to_string(v), v);
  }
  return current;
}

}  // namespace lvl2
