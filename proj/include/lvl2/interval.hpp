#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lvl2/polynomial.hpp"
#include "lvl2/rational.hpp"

namespace lvl2 {

// Closed interval [lo, hi] with exact rational endpoints. Arithmetic is exact
// on the endpoints, so results always contain the true image of the operands;
// round_outward() trades width for smaller endpoints when sizes grow.
class Interval {
 public:
  Interval() = default;
  Interval(Rational point);  // NOLINT(google-explicit-constructor)
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const { return (lo_ + hi_) / 2; }
  bool is_point() const { return lo_ == hi_; }
  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const Interval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool strictly_positive() const { return lo_ > 0; }
  bool intersects(const Interval& other) const {
    return lo_ <= other.hi_ && other.lo_ <= hi_;
  }

  Interval operator-() const { return {-hi_, -lo_}; }
  Interval& operator+=(const Interval& other);
  Interval& operator-=(const Interval& other);
  Interval& operator*=(const Interval& other);
  Interval& operator/=(const Interval& other);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

 private:
  Rational lo_;
  Rational hi_;
};

Interval pow(const Interval& base, unsigned exponent);
Interval reciprocal(const Interval& iv);
std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Widens iv to dyadic endpoints with `bits` significant bits each.
Interval round_outward(const Interval& iv, unsigned bits);

// Horner evaluation in interval arithmetic: contains p(x) for every x in iv.
Interval evaluate(const Polynomial& p, const Interval& iv);

// The interval denoted by a rounded decimal such as "4.67104907": every real
// that rounds to it, i.e. [d - ulp/2, d + ulp/2].
Interval decimal_half_ulp(const std::string& decimal);

// True when some real that rounds to `decimal` lies in iv.
bool matches_decimal(const Interval& iv, const std::string& decimal);

// Every decimal with `digits` places whose half-ulp interval meets iv, in
// increasing order. A single entry means the rounding is certified.
std::vector<std::string> consistent_roundings(const Interval& iv, unsigned digits);

// "[lo, hi]" with outward-rounded decimal endpoints.
std::string to_decimal_string(const Interval& iv, unsigned digits);

}  // namespace lvl2
