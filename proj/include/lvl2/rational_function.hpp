#pragma once

#include <cstddef>
#include <string>

#include "lvl2/interval.hpp"
#include "lvl2/polynomial.hpp"
#include "lvl2/truncated_series.hpp"

namespace lvl2 {

// num/den in lowest terms. The denominator is scaled so that all coefficients
// of num and den together are coprime integers and den is positive at 0 (or,
// when den(0) = 0, has positive lowest-order coefficient).
class RationalFunction {
 public:
  RationalFunction();  // 0
  explicit RationalFunction(Polynomial num, Polynomial den = Polynomial::constant(1));

  static RationalFunction constant(Rational c);
  static RationalFunction identity();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool analytic_at_zero() const { return den_[0] != 0; }

  // Throws NotInvertible at a pole.
  Rational operator()(const Rational& z) const;
  // Outward enclosure; throws if den's enclosure contains zero.
  Interval operator()(const Interval& z) const;
  RationalFunction derivative() const;

  RationalFunction& operator+=(const RationalFunction& other);
  RationalFunction& operator-=(const RationalFunction& other);
  RationalFunction& operator*=(const RationalFunction& other);
  RationalFunction& operator/=(const RationalFunction& other);

  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  Polynomial num_;
  Polynomial den_;
};

RationalFunction pow(const RationalFunction& base, int exponent);

// Taylor expansion at 0 through z^order. Throws NotInvertible if den(0) = 0.
TruncatedSeries phi_series(const RationalFunction& phi, std::size_t order);

}  // namespace lvl2
