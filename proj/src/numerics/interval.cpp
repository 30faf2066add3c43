#include "lvl2/interval.hpp"

#include <algorithm>

#include "lvl2/error.hpp"

namespace lvl2 {

Interval::Interval(Rational point) : lo_(point), hi_(std::move(point)) {}

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) {
    throw InvalidArgument("interval with lo > hi: [" + lo_.get_str() + ", " +
                          hi_.get_str() + "]");
  }
}

Interval& Interval::operator+=(const Interval& other) {
  lo_ += other.lo_;
  hi_ += other.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& other) {
  Rational lo = lo_ - other.hi_;
  hi_ -= other.lo_;
  lo_ = std::move(lo);
  return *this;
}

Interval& Interval::operator*=(const Interval& other) {
  Rational a = lo_ * other.lo_;
  Rational b = lo_ * other.hi_;
  Rational c = hi_ * other.lo_;
  Rational d = hi_ * other.hi_;
  lo_ = std::min({a, b, c, d});
  hi_ = std::max({a, b, c, d});
  return *this;
}

Interval& Interval::operator/=(const Interval& other) {
  return *this *= reciprocal(other);
}

Interval reciprocal(const Interval& iv) {
  if (iv.contains_zero()) {
    throw InvalidArgument("division by an interval containing zero");
  }
  return {1 / iv.hi(), 1 / iv.lo()};
}

Interval pow(const Interval& base, unsigned exponent) {
  if (exponent == 0) return Interval(Rational(1));
  auto ipow = [exponent](const Rational& x) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), exponent);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), exponent);
    return r;
  };
  Rational a = ipow(base.lo());
  Rational b = ipow(base.hi());
  if (exponent % 2 == 1 || base.lo() >= 0) return {a, b};
  if (base.hi() <= 0) return {b, a};
  return {Rational(0), std::max(a, b)};
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) return std::nullopt;
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

Interval round_outward(const Interval& iv, unsigned bits) {
  return {floor_dyadic(iv.lo(), bits), ceil_dyadic(iv.hi(), bits)};
}

Interval evaluate(const Polynomial& p, const Interval& iv) {
  const auto& c = p.coefficients();
  if (c.empty()) return Interval(Rational(0));
  if (iv.is_point()) return Interval(p(iv.lo()));
  Interval acc(c.back());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) {
    acc *= iv;
    acc += Interval(*it);
  }
  return acc;
}

Interval decimal_half_ulp(const std::string& decimal) {
  Rational center = parse_rational(decimal);
  auto dot = decimal.find('.');
  int places = dot == std::string::npos ? 0 : static_cast<int>(decimal.size() - dot - 1);
  Rational half = pow10(-places) / 2;
  return {center - half, center + half};
}

bool matches_decimal(const Interval& iv, const std::string& decimal) {
  return iv.intersects(decimal_half_ulp(decimal));
}

std::vector<std::string> consistent_roundings(const Interval& iv, unsigned digits) {
  const Rational scale = pow10(static_cast<int>(digits));
  const Rational half(1, 2);
  BigInt first = floor(iv.lo() * scale + half);
  BigInt last = floor(iv.hi() * scale + half);
  std::vector<std::string> out;
  for (BigInt k = first - 1; k <= last + 1; ++k) {
    std::string candidate = decimal_nearest(Rational(k) / scale, digits);
    if (matches_decimal(iv, candidate)) out.push_back(std::move(candidate));
  }
  return out;
}

std::string to_decimal_string(const Interval& iv, unsigned digits) {
  return "[" + decimal_floor(iv.lo(), digits) + ", " + decimal_ceil(iv.hi(), digits) + "]";
}

}  // namespace lvl2
