#pragma once

#include <cstddef>
#include <vector>

#include <json.hpp>

#include "lvl2/rational.hpp"

namespace lvl2 {

// Formal power series known exactly through x^order. Binary operations
// truncate to the smaller of the two orders.
class TruncatedSeries {
 public:
  // The zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  // Order is coefficients.size() - 1; throws on an empty vector.
  explicit TruncatedSeries(std::vector<Rational> coefficients);

  static TruncatedSeries constant(Rational c, std::size_t order);
  // The series x.
  static TruncatedSeries variable(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  void set(std::size_t n, Rational value) { coeffs_.at(n) = std::move(value); }
  // Index of the first nonzero coefficient; order() + 1 for the zero series.
  std::size_t valuation() const;

  TruncatedSeries truncated(std::size_t order) const;

  TruncatedSeries operator-() const;
  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const Rational& scalar);

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Rational> coeffs_;
};

// Cauchy product truncated at min(a.order(), b.order()).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
// Throws NotInvertible when a[0] == 0.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);
// Negative exponents go through the reciprocal.
TruncatedSeries series_pow(const TruncatedSeries& base, int exponent);

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, b);
}
inline TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_div(a, b);
}

// JSON array of "p/q" strings, lowest order first.
nlohmann::json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const nlohmann::json& j);

}  // namespace lvl2
