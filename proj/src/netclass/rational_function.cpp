#include "lvl2/rational_function.hpp"

#include "lvl2/error.hpp"

namespace lvl2 {

RationalFunction::RationalFunction() : den_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw NotInvertible("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::constant(Rational c) {
  return RationalFunction(Polynomial::constant(std::move(c)));
}

RationalFunction RationalFunction::identity() { return RationalFunction(Polynomial::identity()); }

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  BigInt den_lcm = 1;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coefficients()) {
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  BigInt content = 0;
  for (const auto* p : {&num_, &den_}) {
    for (const auto& c : p->coefficients()) {
      BigInt scaled = c.get_num() * (den_lcm / c.get_den());
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }
  }
  Rational factor(den_lcm, content);
  factor.canonicalize();
  const auto& dc = den_.coefficients();
  std::size_t low = 0;
  while (dc[low] == 0) ++low;
  if (dc[low] < 0) factor = -factor;
  num_ *= factor;
  den_ *= factor;
}

Rational RationalFunction::operator()(const Rational& z) const {
  Rational d = den_(z);
  if (d == 0) throw NotInvertible("rational function has a pole at " + z.get_str());
  return num_(z) / d;
}

Interval RationalFunction::operator()(const Interval& z) const {
  return evaluate(num_, z) / evaluate(den_, z);
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& other) {
  return *this = RationalFunction(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& other) {
  return *this = RationalFunction(num_ * other.den_ - other.num_ * den_, den_ * other.den_);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& other) {
  return *this = RationalFunction(num_ * other.num_, den_ * other.den_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& other) {
  if (other.is_zero()) throw NotInvertible("division by the zero rational function");
  return *this = RationalFunction(num_ * other.den_, den_ * other.num_);
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction pow(const RationalFunction& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw NotInvertible("negative power of the zero rational function");
    return RationalFunction(pow(base.den(), static_cast<unsigned>(-exponent)),
                            pow(base.num(), static_cast<unsigned>(-exponent)));
  }
  return RationalFunction(pow(base.num(), static_cast<unsigned>(exponent)),
                          pow(base.den(), static_cast<unsigned>(exponent)));
}

TruncatedSeries phi_series(const RationalFunction& phi, std::size_t order) {
  if (!phi.analytic_at_zero()) throw NotInvertible("phi has a pole at 0");
  auto to_series = [order](const Polynomial& p) {
    TruncatedSeries s(order);
    for (std::size_t i = 0; i <= order && i < p.coefficients().size(); ++i) s.set(i, p[i]);
    return s;
  };
  return series_div(to_series(phi.num()), to_series(phi.den()));
}

}  // namespace lvl2
