#include "lvl2/constants.hpp"

#include "lvl2/error.hpp"

namespace lvl2 {

namespace {

// floor(sqrt(x) * 2^k) and ceil(sqrt(x) * 2^k) scaled back by 2^-k.
Rational sqrt_floor(const Rational& x, unsigned long k) {
  BigInt scaled;
  BigInt num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * k);
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  BigInt scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
  return Rational(root, scale);
}

Rational sqrt_ceil(const Rational& x, unsigned long k) {
  BigInt scaled;
  BigInt num = x.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * k);
  mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), x.get_den_mpz_t());
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (root * root < scaled) ++root;
  BigInt scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
  return Rational(root, scale);
}

}  // namespace

CertifiedConstants::CertifiedConstants(unsigned digits) : digits_(digits) {
  if (digits == 0) throw InvalidArgument("certified_constants: digits must be >= 1");
  // Sum 1/k! for k <= K; the tail is below 2/(K+1)!.
  const Rational tolerance = pow10(-static_cast<int>(digits));
  Rational sum = 0;
  BigInt fact = 1;
  unsigned long k = 0;
  for (;; ++k) {
    if (k > 0) fact *= k;
    sum += Rational(1, fact);
    Rational tail(2, fact * (k + 1));
    if (tail <= tolerance) {
      e_ = Interval(sum, sum + tail);
      break;
    }
  }
}

Interval CertifiedConstants::sqrt(const Interval& iv) const {
  if (!iv.strictly_positive()) {
    throw InvalidArgument("sqrt: interval must be strictly positive, got " +
                          to_decimal_string(iv, 12));
  }
  // Absolute rounding step 2^-k <= 10^-digits * sqrt(lo) / 2.
  Rational rel = pow10(-static_cast<int>(digits_)) * sqrt_floor(iv.lo(), 4) / 2;
  if (rel == 0) rel = pow10(-static_cast<int>(digits_)) * iv.lo() / 4;
  unsigned long k = static_cast<unsigned long>(std::max(0L, -floor_log2(rel) + 1));
  return {sqrt_floor(iv.lo(), k), sqrt_ceil(iv.hi(), k)};
}

CertifiedConstants certified_constants(unsigned digits) { return CertifiedConstants(digits); }

}  // namespace lvl2
