#pragma once

#include <cstddef>

#include "lvl2/error.hpp"
#include "lvl2/series_expr.hpp"
#include "lvl2/truncated_series.hpp"

namespace lvl2 {

// Iterative substitution did not settle a coefficient when it should have.
class ContractionError : public Error {
 public:
  ContractionError(const std::string& what, std::size_t order)
      : Error(what), order_(order) {}
  std::size_t order() const { return order_; }

 private:
  std::size_t order_;
};

// Solves S = expr(X, S) through x^order by iterated substitution from the zero
// series. Iterate k is evaluated at truncation order k, which suffices when
// expr gains one order of valuation per substitution; each iterate is checked
// to agree with the previous one below its order, and the final solution is
// checked against expr at full order.
TruncatedSeries fixed_point_solve(const SeriesExpr& expr, std::size_t order);

}  // namespace lvl2
