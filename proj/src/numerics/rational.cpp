#include "lvl2/rational.hpp"

#include <cctype>

#include "lvl2/error.hpp"

namespace lvl2 {

namespace {

Rational pow2(long k) {
  Rational r = 1;
  if (k >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), static_cast<mp_bitcnt_t>(k));
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), static_cast<mp_bitcnt_t>(-k));
  }
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Inserts the decimal point into the integer |scaled| / 10^digits.
std::string place_point(const BigInt& scaled, unsigned digits) {
  BigInt magnitude = abs(scaled);
  std::string s = magnitude.get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  if (scaled < 0) s.insert(0, "-");
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw InvalidArgument("malformed rational: " + std::string(text));
    }
    BigInt d{std::string(den), 10};
    if (d == 0) throw InvalidArgument("zero denominator: " + std::string(text));
    result = Rational(BigInt(std::string(num), 10), d);
    result.canonicalize();
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
      throw InvalidArgument("malformed decimal: " + std::string(text));
    }
    BigInt digits(std::string(whole) + std::string(frac), 10);
    result = Rational(digits) * pow10(-static_cast<int>(frac.size()));
  } else {
    if (!all_digits(body)) {
      throw InvalidArgument("malformed rational: " + std::string(text));
    }
    result = Rational(BigInt(std::string(body), 10));
  }
  return negative ? Rational(-result) : result;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Rational& value) { return value.get_str(); }

BigInt floor(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational pow10(int k) {
  BigInt p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(1, p) : Rational(p);
}

BigInt factorial(unsigned long n) {
  BigInt f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

std::string decimal_floor(const Rational& value, unsigned digits) {
  return place_point(floor(value * pow10(static_cast<int>(digits))), digits);
}

std::string decimal_ceil(const Rational& value, unsigned digits) {
  return place_point(ceil(value * pow10(static_cast<int>(digits))), digits);
}

std::string decimal_nearest(const Rational& value, unsigned digits) {
  Rational scaled = value * pow10(static_cast<int>(digits));
  Rational half(1, 2);
  BigInt rounded = scaled >= 0 ? floor(scaled + half) : ceil(scaled - half);
  return place_point(rounded, digits);
}

long floor_log2(const Rational& value) {
  if (value == 0) throw InvalidArgument("floor_log2 of zero");
  BigInt num = abs(value.get_num());
  const BigInt& den = value.get_den();
  long e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  // |value| lies in (2^(e-1), 2^(e+1)).
  Rational magnitude(num, den);
  return magnitude >= pow2(e) ? e : e - 1;
}

Rational floor_dyadic(const Rational& value, unsigned bits) {
  if (value == 0) return value;
  long shift = static_cast<long>(bits) - 1 - floor_log2(value);
  Rational scale = pow2(shift);
  return Rational(floor(value * scale)) / scale;
}

Rational ceil_dyadic(const Rational& value, unsigned bits) {
  if (value == 0) return value;
  long shift = static_cast<long>(bits) - 1 - floor_log2(value);
  Rational scale = pow2(shift);
  return Rational(ceil(value * scale)) / scale;
}

}  // namespace lvl2
