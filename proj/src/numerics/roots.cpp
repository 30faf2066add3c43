#include "lvl2/roots.hpp"

#include "lvl2/error.hpp"

namespace lvl2 {

namespace {

// Divides out the content without flipping the sign; Sturm chains care about
// signs.
Polynomial shrink_keep_sign(const Polynomial& p) {
  if (p.is_zero()) return p;
  Polynomial q = primitive_part(p);
  return sgn(q.leading()) == sgn(p.leading()) ? q : -q;
}

Rational floor_abs_dyadic(const Rational& x, unsigned long bits) {
  BigInt scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  return Rational(floor(x * scale), scale);
}

Rational ceil_abs_dyadic(const Rational& x, unsigned long bits) {
  BigInt scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  return Rational(ceil(x * scale), scale);
}

void isolate(const SturmSequence& sturm, const Rational& a, const Rational& b,
             std::size_t roots_inside, std::vector<Interval>& out) {
  if (roots_inside == 0) return;
  const Polynomial& q = sturm.squarefree();
  if (roots_inside == 1 && sign_at(q, a) != 0 && sign_at(q, b) != 0) {
    out.emplace_back(a, b);
    return;
  }
  Rational m = (a + b) / 2;
  bool mid_is_root = sign_at(q, m) == 0;
  std::size_t left = sturm.count_roots(a, m) - (mid_is_root ? 1 : 0);
  std::size_t right = roots_inside - left - (mid_is_root ? 1 : 0);
  isolate(sturm, a, m, left, out);
  if (mid_is_root) out.emplace_back(m);
  isolate(sturm, m, b, right, out);
}

}  // namespace

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw InvalidArgument("Sturm sequence of the zero polynomial");
  chain_.push_back(shrink_keep_sign(squarefree_part(p)));
  if (chain_.front().degree() == 0) return;
  chain_.push_back(shrink_keep_sign(chain_.front().derivative()));
  while (chain_.back().degree() > 0) {
    Polynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(shrink_keep_sign(-r));
  }
}

std::size_t SturmSequence::variations_at(const Rational& z) const {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain_) {
    int s = sign_at(p, z);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::size_t SturmSequence::count_roots(const Rational& a, const Rational& b) const {
  if (b <= a) return 0;
  return variations_at(a) - variations_at(b);
}

std::vector<Interval> sturm_isolate(const Polynomial& p, const Rational& lo,
                                    const Rational& hi) {
  if (p.is_zero()) throw InvalidArgument("sturm_isolate: zero polynomial");
  if (!(lo < hi)) throw InvalidArgument("sturm_isolate: requires lo < hi");
  SturmSequence sturm(p);
  std::size_t inside = sturm.count_roots(lo, hi) - (sign_at(sturm.squarefree(), hi) == 0 ? 1 : 0);
  std::vector<Interval> out;
  isolate(sturm, lo, hi, inside, out);
  return out;
}

Interval refine_root(const Polynomial& p, const Interval& iv, const Rational& target_width) {
  if (target_width <= 0) throw InvalidArgument("refine_root: target width must be positive");
  if (p.is_zero()) throw InvalidArgument("refine_root: zero polynomial");
  const Polynomial q = squarefree_part(p);
  const Polynomial dq = q.derivative();
  Rational a = iv.lo();
  Rational b = iv.hi();
  int sa = sign_at(q, a);
  int sb = sign_at(q, b);
  if (sa == 0) return Interval(a);
  if (sb == 0) return Interval(b);
  if (sa == sb) throw InvalidArgument("refine_root: no sign change on " + to_decimal_string(iv, 12));

  // Newton iterates are rounded to this many fractional bits.
  const unsigned long bits = static_cast<unsigned long>(std::max(0L, -floor_log2(target_width))) + 8;

  while (b - a > target_width) {
    Rational width = b - a;
    Rational m = (a + b) / 2;
    int sm = sign_at(q, m);
    if (sm == 0) return Interval(m);

    Interval slope = evaluate(dq, Interval(a, b));
    if (!slope.contains_zero()) {
      Interval newton = Interval(m) - Interval(q(m)) / slope;
      if (auto cut = intersect(newton, Interval(a, b))) {
        Rational na = std::max(a, floor_abs_dyadic(cut->lo(), bits));
        Rational nb = std::min(b, ceil_abs_dyadic(cut->hi(), bits));
        int sna = sign_at(q, na);
        int snb = sign_at(q, nb);
        if (sna == 0) return Interval(na);
        if (snb == 0) return Interval(nb);
        if (sna == sa && snb == sb) {
          a = std::move(na);
          b = std::move(nb);
          if (2 * (b - a) <= width) continue;
          m = (a + b) / 2;
          sm = sign_at(q, m);
          if (sm == 0) return Interval(m);
        }
      }
    }
    if (sm == sa) {
      a = std::move(m);
    } else {
      b = std::move(m);
    }
  }
  return {a, b};
}

}  // namespace lvl2
