#include "lvl2/inversion.hpp"

#include "lvl2/roots.hpp"

namespace lvl2 {

std::vector<std::string> HypothesisReport::failures() const {
  std::vector<std::string> out;
  if (!phi0_nonzero) out.emplace_back("i");
  if (!coeffs_nonneg) out.emplace_back("ii");
  if (!nonlinear) out.emplace_back("iii");
  if (!radius_positive) out.emplace_back("iv");
  if (!tau_unique_in_0R) out.emplace_back("v");
  if (!aperiodic) out.emplace_back("vi");
  return out;
}

Polynomial characteristic_polynomial(const RationalFunction& phi) {
  const Polynomial& p = phi.num();
  const Polynomial& q = phi.den();
  Polynomial n = p * q - Polynomial::identity() * (p.derivative() * q - p * q.derivative());
  return primitive_part(n);
}

namespace {

// Smallest positive root of the denominator, if any.
std::optional<Interval> smallest_positive_pole(const RationalFunction& phi) {
  const Polynomial& q = phi.den();
  if (q.degree() <= 0) return std::nullopt;
  auto roots = sturm_isolate(q, 0, cauchy_root_bound(q));
  if (roots.empty()) return std::nullopt;
  return refine_root(q, roots.front(), pow10(-40));
}

}  // namespace

HypothesisReport verify_hypotheses(const RationalFunction& phi, std::size_t check_order) {
  HypothesisReport report;
  report.radius_positive = phi.analytic_at_zero();
  report.nonlinear = !(phi.den().degree() == 0 && phi.num().degree() <= 1);
  if (!report.radius_positive) return report;

  TruncatedSeries s = phi_series(phi, check_order);
  report.phi0_nonzero = s[0] != 0;
  report.coeffs_nonneg_checked_to = check_order;
  report.coeffs_nonneg = true;
  BigInt support_gcd = 0;
  for (std::size_t k = 0; k <= check_order; ++k) {
    if (s[k] < 0) report.coeffs_nonneg = false;
    if (k > 0 && s[k] != 0) {
      BigInt kk(static_cast<unsigned long>(k));
      mpz_gcd(support_gcd.get_mpz_t(), support_gcd.get_mpz_t(), kk.get_mpz_t());
    }
  }
  report.support_gcd = support_gcd.get_ui();
  report.aperiodic = support_gcd == 1;

  auto pole = smallest_positive_pole(phi);
  report.radius_infinite = !pole.has_value();
  if (pole) report.radius = *pole;

  Polynomial chr = characteristic_polynomial(phi);
  if (chr.is_zero()) return report;
  Rational upper = pole ? pole->lo() : cauchy_root_bound(chr);
  std::size_t candidates = upper > 0 ? sturm_isolate(chr, 0, upper).size() : 0;
  if (pole) {
    SturmSequence sturm(chr);
    // A root of phi - z phi' inside the enclosure of R cannot be placed on
    // either side of R; count it as a candidate so uniqueness fails.
    candidates += sturm.count_roots(pole->lo(), pole->hi());
    if (sign_at(sturm.squarefree(), pole->lo()) == 0) ++candidates;
  }
  report.tau_candidates = candidates;
  report.tau_unique_in_0R = candidates == 1;
  return report;
}

}  // namespace lvl2
