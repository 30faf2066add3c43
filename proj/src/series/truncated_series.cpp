#include "lvl2/truncated_series.hpp"

#include <algorithm>

#include "lvl2/error.hpp"

namespace lvl2 {

namespace {

// Coefficients over a common denominator, so the inner product loop runs on
// integers only.
struct ScaledCoefficients {
  std::vector<BigInt> numerators;
  BigInt denominator = 1;
};

ScaledCoefficients scale_to_common(const std::vector<Rational>& coeffs, std::size_t count) {
  ScaledCoefficients out;
  for (std::size_t i = 0; i < count; ++i) {
    mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
            coeffs[i].get_den_mpz_t());
  }
  out.numerators.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (coeffs[i] == 0) continue;
    mpz_divexact(out.numerators[i].get_mpz_t(), out.denominator.get_mpz_t(),
                 coeffs[i].get_den_mpz_t());
    out.numerators[i] *= coeffs[i].get_num();
  }
  return out;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw InvalidArgument("a truncated series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(Rational c, std::size_t order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = std::move(c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return coeffs_.size();
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw InvalidArgument("cannot extend a truncated series beyond its order");
  }
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin(),
                                               coeffs_.begin() + static_cast<long>(order) + 1));
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  coeffs_.resize(std::min(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.order(), b.order()) + 1;
  const auto sa = scale_to_common(a.coefficients(), n);
  const auto sb = scale_to_common(b.coefficients(), n);
  const BigInt den = sa.denominator * sb.denominator;
  std::vector<Rational> out(n);
  BigInt acc;
  for (std::size_t k = 0; k < n; ++k) {
    acc = 0;
    for (std::size_t i = 0; i <= k; ++i) {
      if (sa.numerators[i] == 0 || sb.numerators[k - i] == 0) continue;
      mpz_addmul(acc.get_mpz_t(), sa.numerators[i].get_mpz_t(),
                 sb.numerators[k - i].get_mpz_t());
    }
    out[k] = Rational(acc, den);
    out[k].canonicalize();
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  if (a[0] == 0) throw NotInvertible("not invertible as a power series: zero constant term");
  const std::size_t order = a.order();
  // Newton iteration b <- b (2 - a b), doubling the number of correct terms.
  TruncatedSeries b = TruncatedSeries::constant(1 / a[0], 0);
  std::size_t known = 0;
  while (known < order) {
    std::size_t next = std::min(order, 2 * known + 1);
    TruncatedSeries wide(next);
    for (std::size_t i = 0; i <= known; ++i) wide.set(i, b[i]);
    TruncatedSeries ab = series_mul(a.truncated(next), wide);
    TruncatedSeries two_minus = -ab;
    two_minus.set(0, two_minus[0] + 2);
    b = series_mul(wide, two_minus);
    known = next;
  }
  return b;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  return series_mul(a, series_reciprocal(b));
}

TruncatedSeries series_pow(const TruncatedSeries& base, int exponent) {
  if (exponent < 0) return series_pow(series_reciprocal(base), -exponent);
  TruncatedSeries result = TruncatedSeries::constant(1, base.order());
  TruncatedSeries square = base;
  auto e = static_cast<unsigned>(exponent);
  while (e > 0) {
    if (e & 1U) result = series_mul(result, square);
    e >>= 1U;
    if (e > 0) square = series_mul(square, square);
  }
  return result;
}

nlohmann::json to_json(const TruncatedSeries& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : s.coefficients()) out.push_back(to_fraction_string(c));
  return out;
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw InvalidArgument("series JSON must be a non-empty array of \"p/q\" strings");
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw InvalidArgument("series JSON entries must be strings");
    coeffs.push_back(parse_rational(item.get<std::string>()));
  }
  return TruncatedSeries(std::move(coeffs));
}

}  // namespace lvl2
