#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lvl2/rational.hpp"

namespace lvl2 {

// Dense univariate polynomial over Q; coefficient i multiplies z^i. Trailing
// zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(Rational c);
  static Polynomial monomial(Rational c, std::size_t degree);
  // z
  static Polynomial identity();

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of z^i; zero beyond the degree.
  Rational operator[](std::size_t i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& z) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

// Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// p / gcd(p, p'), made monic. Same roots as p, all simple.
Polynomial squarefree_part(const Polynomial& p);

// Scales p by a nonzero rational so that its coefficients are coprime
// integers with positive leading coefficient.
Polynomial primitive_part(const Polynomial& p);

// Sign (-1, 0, 1) of p(z).
int sign_at(const Polynomial& p, const Rational& z);

// Every real root of p has absolute value below the returned bound.
Rational cauchy_root_bound(const Polynomial& p);

}  // namespace lvl2
