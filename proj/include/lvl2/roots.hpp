#pragma once

#include <cstddef>
#include <vector>

#include "lvl2/interval.hpp"
#include "lvl2/polynomial.hpp"

namespace lvl2 {

// Sturm chain of the squarefree part of a polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);

  const Polynomial& squarefree() const { return chain_.front(); }
  // Number of sign changes of the chain at z (zeros skipped).
  std::size_t variations_at(const Rational& z) const;
  // Number of distinct real roots in the half-open interval (a, b].
  std::size_t count_roots(const Rational& a, const Rational& b) const;

 private:
  std::vector<Polynomial> chain_;
};

// Isolating intervals for the distinct real roots of p inside the open
// interval (lo, hi), in increasing order. Each returned interval is either a
// point [r, r] with p(r) = 0, or has endpoints where the squarefree part of p
// has opposite nonzero signs and holds exactly one root.
std::vector<Interval> sturm_isolate(const Polynomial& p, const Rational& lo,
                                    const Rational& hi);

// Shrinks an isolating interval to width <= target_width. Uses interval
// Newton steps when they certifiably contract and bisection otherwise.
Interval refine_root(const Polynomial& p, const Interval& iv,
                     const Rational& target_width);

}  // namespace lvl2
