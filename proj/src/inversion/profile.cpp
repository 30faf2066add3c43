#include "lvl2/inversion.hpp"

#include <cmath>

#include "lvl2/roots.hpp"

namespace lvl2 {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "(" : ", (") + s + ")";
  return out;
}

unsigned rounding_bits(unsigned digits) { return 4 * digits + 32; }

}  // namespace

AsymptoticProfile compute_profile(const RationalFunction& phi, unsigned digits,
                                  std::size_t check_order) {
  if (digits == 0) throw InvalidArgument("compute_profile: digits must be >= 1");
  AsymptoticProfile profile;
  profile.digits = digits;
  profile.report = verify_hypotheses(phi, check_order);
  if (!profile.report.all_pass()) {
    throw HypothesisFailure("singular inversion hypotheses fail: " + join(profile.report.failures()),
                            profile.report);
  }

  const Polynomial chr = characteristic_polynomial(phi);
  const Rational upper = profile.report.radius_infinite ? cauchy_root_bound(chr)
                                                        : profile.report.radius.lo();
  Interval tau = sturm_isolate(chr, 0, upper).front();

  const RationalFunction d1 = phi.derivative();
  const RationalFunction d2 = d1.derivative();
  const CertifiedConstants constants(digits + 6);
  const Rational target = pow10(-static_cast<int>(digits));
  Rational tau_width = target / 100;

  for (int attempt = 0; attempt < 40; ++attempt, tau_width /= 1000) {
    tau = refine_root(chr, tau, tau_width);
    Interval phi_tau = phi(tau);
    Interval phi2_tau = d2(tau);
    if (!phi2_tau.strictly_positive()) {
      if (phi2_tau.contains_zero() && tau.width() > target * pow10(-60)) continue;
      throw Error("characteristic root is not simple: phi''(tau) in " +
                  to_decimal_string(phi2_tau, 20) + ", phi'(tau) in " +
                  to_decimal_string(d1(tau), 20));
    }
    Interval rho = tau / phi_tau;
    Interval gamma = reciprocal(rho * constants.e());
    Interval c = constants.sqrt(phi_tau / phi2_tau);
    if (rho.width() <= target && gamma.width() <= target && c.width() <= target &&
        tau.width() <= target) {
      const unsigned bits = rounding_bits(digits);
      profile.tau = tau;
      profile.rho = rho;
      profile.gamma = round_outward(gamma, bits);
      profile.c = round_outward(c, bits);
      profile.phi_at_tau = phi_tau;
      profile.phi2_at_tau = phi2_tau;
      if (profile.gamma.width() <= target && profile.c.width() <= target) return profile;
    }
  }
  throw Error("compute_profile: could not reach the requested precision");
}

Interval asymptotic_estimate(const AsymptoticProfile& profile, unsigned long n) {
  if (n == 0) throw InvalidArgument("asymptotic_estimate: n must be positive");
  BigInt nn(n);
  BigInt n_pow;
  mpz_pow_ui(n_pow.get_mpz_t(), nn.get_mpz_t(), n - 1);
  Interval estimate = profile.c * Interval(Rational(n_pow)) * pow(profile.gamma, static_cast<unsigned>(n));
  return round_outward(estimate, rounding_bits(profile.digits) + 64);
}

long double stirling_consistency_ratio(const AsymptoticProfile& profile, unsigned long n) {
  auto mid = [](const Interval& iv) { return static_cast<long double>(iv.midpoint().get_d()); };
  const long double phi = mid(profile.phi_at_tau);
  const long double phi2 = mid(profile.phi2_at_tau);
  const long double rho = mid(profile.rho);
  const long double c = mid(profile.c);
  const long double gamma = mid(profile.gamma);
  const long double ln = std::log(static_cast<long double>(n));
  const long double pi = 3.141592653589793238462643383279502884L;
  long double coefficient_side = std::lgamma(static_cast<long double>(n) + 1) +
                                 0.5L * std::log(phi / (2 * phi2)) -
                                 static_cast<long double>(n) * std::log(rho) -
                                 0.5L * (std::log(pi) + 3 * ln);
  long double growth_side =
      std::log(c) + static_cast<long double>(n - 1) * ln + static_cast<long double>(n) * std::log(gamma);
  return std::exp(coefficient_side - growth_side);
}

std::vector<ConvergenceRow> convergence_report(const std::vector<BigInt>& counts,
                                               const AsymptoticProfile& profile,
                                               unsigned long n_from, unsigned long n_to) {
  std::vector<ConvergenceRow> rows;
  if (n_from > n_to) return rows;
  if (n_from == 0) throw InvalidArgument("convergence_report: n starts at 1");
  if (counts.size() < n_to) {
    throw InvalidArgument("convergence_report: have " + std::to_string(counts.size()) +
                          " counts, need " + std::to_string(n_to));
  }
  for (unsigned long n = n_from; n <= n_to; ++n) {
    Interval ratio = Interval(Rational(counts[n - 1])) / asymptotic_estimate(profile, n);
    rows.push_back({n, round_outward(ratio, 96)});
  }
  return rows;
}

Interval solve_branch(const RationalFunction& phi, const Interval& tau, const Rational& z,
                      const Rational& tol) {
  if (z <= 0) throw InvalidArgument("solve_branch: z must be positive");
  // y / phi(y) = z  <=>  y Q(y) - z P(y) = 0 where phi(y) > 0.
  Polynomial h = Polynomial::identity() * phi.den() - z * phi.num();
  auto roots = sturm_isolate(h, 0, tau.lo());
  if (roots.empty()) throw InvalidArgument("solve_branch: z is not below the singularity");
  return refine_root(h, roots.front(), tol);
}

nlohmann::json to_json(const HypothesisReport& report, unsigned digits) {
  nlohmann::json j;
  j["i_phi0_nonzero"] = report.phi0_nonzero;
  j["ii_coeffs_nonneg"] = report.coeffs_nonneg;
  j["ii_checked_to_order"] = report.coeffs_nonneg_checked_to;
  j["iii_nonlinear"] = report.nonlinear;
  j["iv_radius_positive"] = report.radius_positive;
  if (report.radius_infinite) {
    j["iv_radius"] = "inf";
  } else {
    j["iv_radius"] = {{"lo", decimal_floor(report.radius.lo(), digits)},
                      {"hi", decimal_ceil(report.radius.hi(), digits)}};
  }
  j["v_tau_unique"] = report.tau_unique_in_0R;
  j["v_tau_candidates"] = report.tau_candidates;
  j["vi_aperiodic"] = report.aperiodic;
  j["vi_support_gcd"] = report.support_gcd;
  j["all_pass"] = report.all_pass();
  return j;
}

nlohmann::json to_json(const AsymptoticProfile& profile) {
  const unsigned shown = profile.digits + 4;
  auto enclosure = [&](const Interval& iv) {
    return nlohmann::json{{"lo", decimal_floor(iv.lo(), shown)},
                          {"hi", decimal_ceil(iv.hi(), shown)},
                          {"mid", decimal_nearest(iv.midpoint(), profile.digits)}};
  };
  nlohmann::json j;
  j["digits"] = profile.digits;
  j["tau"] = enclosure(profile.tau);
  j["rho"] = enclosure(profile.rho);
  j["c"] = enclosure(profile.c);
  j["gamma"] = enclosure(profile.gamma);
  j["hypotheses"] = to_json(profile.report);
  return j;
}

}  // namespace lvl2
