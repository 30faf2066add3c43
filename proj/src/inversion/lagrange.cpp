#include "lvl2/inversion.hpp"

namespace lvl2 {

std::vector<Rational> lagrange_coefficients(const RationalFunction& phi, std::size_t count) {
  if (count == 0) return {};
  const std::size_t order = count - 1;
  const TruncatedSeries s = phi_series(phi, order);
  if (s[0] == 0) throw InvalidArgument("lagrange_coefficients: phi(0) must be nonzero");
  std::vector<Rational> out;
  out.reserve(count);
  TruncatedSeries power = s;  // phi^n, truncated at z^(count-1)
  for (std::size_t n = 1; n <= count; ++n) {
    if (n > 1) power = series_mul(power, s);
    out.push_back(power[n - 1] / static_cast<unsigned long>(n));
  }
  return out;
}

std::vector<BigInt> counts_from_coefficients(const std::vector<Rational>& coeffs_from_one) {
  std::vector<BigInt> counts;
  counts.reserve(coeffs_from_one.size());
  BigInt fact = 1;
  for (std::size_t i = 0; i < coeffs_from_one.size(); ++i) {
    const unsigned long n = i + 1;
    fact *= n;
    const Rational& c = coeffs_from_one[i];
    if (!mpz_divisible_p(fact.get_mpz_t(), c.get_den_mpz_t())) {
      throw InvalidArgument("n! [x^n] is not an integer at n = " + std::to_string(n) + " (coefficient " +
                            c.get_str() + ")");
    }
    counts.push_back(c.get_num() * (fact / c.get_den()));
  }
  return counts;
}

std::vector<BigInt> counts_from_series(const TruncatedSeries& s) {
  std::vector<Rational> coeffs(s.coefficients().begin() + 1, s.coefficients().end());
  return counts_from_coefficients(coeffs);
}

}  // namespace lvl2
