#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lvl2/constants.hpp"
#include "lvl2/error.hpp"
#include "lvl2/interval.hpp"
#include "lvl2/rational_function.hpp"
#include "lvl2/truncated_series.hpp"

namespace lvl2 {

// Outcome of checking the hypotheses of the singular inversion theorem for
// C = z phi(C). Failures are recorded, never thrown.
struct HypothesisReport {
  bool phi0_nonzero = false;               // (i)
  std::size_t coeffs_nonneg_checked_to = 0;  // (ii) phi_0..phi_N >= 0 for N = this
  bool coeffs_nonneg = false;              // (ii) holds through that order
  bool nonlinear = false;                  // (iii)
  bool radius_positive = false;            // (iv) analytic at 0
  bool radius_infinite = false;            // no positive pole
  Interval radius;                         // (iv) enclosure of R when finite
  bool tau_unique_in_0R = false;           // (v)
  std::size_t tau_candidates = 0;          // roots of phi - z phi' found in (0, R)
  bool aperiodic = false;                  // (vi) gcd of the support is 1
  std::size_t support_gcd = 0;

  bool all_pass() const {
    return phi0_nonzero && coeffs_nonneg && nonlinear && radius_positive && tau_unique_in_0R &&
           aperiodic;
  }
  // Labels ("i", "ii", ...) of the failing hypotheses.
  std::vector<std::string> failures() const;
};

struct AsymptoticProfile {
  Interval tau;
  Interval rho;
  Interval gamma;  // 1 / (rho e)
  Interval c;      // sqrt(phi(tau) / phi''(tau))
  Interval phi_at_tau;
  Interval phi2_at_tau;
  unsigned digits = 0;
  HypothesisReport report;
};

class HypothesisFailure : public Error {
 public:
  HypothesisFailure(const std::string& what, HypothesisReport report)
      : Error(what), report_(std::move(report)) {}
  const HypothesisReport& report() const { return report_; }

 private:
  HypothesisReport report_;
};

// phi - z phi' = 0 in polynomial form: with phi = P/Q this is
// P Q - z (P' Q - P Q'), made primitive.
Polynomial characteristic_polynomial(const RationalFunction& phi);

HypothesisReport verify_hypotheses(const RationalFunction& phi, std::size_t check_order);

// Certified tau, rho = tau / phi(tau), gamma = 1/(rho e) and
// c = sqrt(phi(tau) / phi''(tau)), each of width <= 10^-digits. Throws
// HypothesisFailure when the hypotheses do not hold (checked to
// check_order).
AsymptoticProfile compute_profile(const RationalFunction& phi, unsigned digits,
                                  std::size_t check_order = 200);

// [z^n] C for n = 1..count via [z^n] C = (1/n) [z^(n-1)] phi^n.
std::vector<Rational> lagrange_coefficients(const RationalFunction& phi, std::size_t count);

// t_n = n! [x^n] s for n = 1..order. Throws InvalidArgument naming the first
// n where the product is not an integer.
std::vector<BigInt> counts_from_series(const TruncatedSeries& s);
std::vector<BigInt> counts_from_coefficients(const std::vector<Rational>& coeffs_from_one);

// Enclosure of c n^(n-1) gamma^n.
Interval asymptotic_estimate(const AsymptoticProfile& profile, unsigned long n);

// Ratio of n! sqrt(phi(tau) / (2 phi''(tau))) rho^-n / sqrt(pi n^3) (the
// coefficient asymptotics before Stirling's formula) to c n^(n-1) gamma^n,
// in long double log space. Tends to 1; a diagnostic, not a certified value.
long double stirling_consistency_ratio(const AsymptoticProfile& profile, unsigned long n);

struct ConvergenceRow {
  unsigned long n;
  Interval ratio;  // t_n / (c n^(n-1) gamma^n)
};

// counts[0] is t_1. Empty when n_from > n_to; throws InvalidArgument when
// counts stop short of n_to.
std::vector<ConvergenceRow> convergence_report(const std::vector<BigInt>& counts,
                                               const AsymptoticProfile& profile,
                                               unsigned long n_from, unsigned long n_to);

// Value of the branch C(z) of C = z phi(C) for 0 < z < rho, i.e. the root
// y in (0, tau) of y / phi(y) = z, enclosed to width <= tol.
Interval solve_branch(const RationalFunction& phi, const Interval& tau, const Rational& z,
                      const Rational& tol);

nlohmann::json to_json(const HypothesisReport& report, unsigned digits = 12);
nlohmann::json to_json(const AsymptoticProfile& profile);

}  // namespace lvl2
