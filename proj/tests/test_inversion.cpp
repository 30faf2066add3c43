#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lvl2/constants.hpp"
#include "lvl2/fixed_point.hpp"
#include "lvl2/inversion.hpp"
#include "lvl2/netclass.hpp"

using namespace lvl2;

namespace {

const RationalFunction& tree_child_phi() {
  static const RationalFunction phi = derive_phi(tree_child_equation());
  return phi;
}

const AsymptoticProfile& tree_child_profile() {
  static const AsymptoticProfile p = compute_profile(tree_child_phi(), 10);
  return p;
}

RationalFunction catalan_phi() { return RationalFunction(Polynomial{1}, Polynomial{1, -1}); }

long double to_ld(const Rational& r) { return static_cast<long double>(r.get_d()); }

BigInt catalan(unsigned long n) {
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 2 * n, n);
  return c / (n + 1);
}

}  // namespace

TEST_SUITE_BEGIN("characteristic polynomial");

TEST_CASE("controls") {
  // Returned in primitive form, so compare up to a constant factor.
  Polynomial cat = characteristic_polynomial(catalan_phi());
  CHECK(cat * cat[0] == Polynomial{1, -2} * cat[0] * cat[0]);
  CHECK(cat(Rational(1, 2)) == 0);
  Polynomial n = characteristic_polynomial(RationalFunction(Polynomial{1, 0, 1}));
  CHECK(n * n[0] == Polynomial{1, 0, -1} * n[0] * n[0]);
  CHECK(n(Rational(1)) == 0);
}

TEST_CASE("tree-child root") {
  const auto& p = tree_child_profile();
  CHECK(matches_decimal(p.tau, "0.1226285445"));
  CHECK(p.report.tau_candidates == 1);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("hypotheses");

TEST_CASE("tree-child passes everything") {
  HypothesisReport r = verify_hypotheses(tree_child_phi(), 200);
  CHECK(r.all_pass());
  CHECK(r.coeffs_nonneg_checked_to == 200);
  CHECK_FALSE(r.radius_infinite);
  CHECK(matches_decimal(r.radius, "0.19919851"));
}

TEST_CASE("linear controls fail nonlinearity") {
  HypothesisReport z = verify_hypotheses(RationalFunction(Polynomial{0, 1}), 20);
  CHECK_FALSE(z.nonlinear);
  CHECK_FALSE(z.phi0_nonzero);
  // phi - z phi' = phi(0) for affine phi, so (v) necessarily fails too.
  HypothesisReport affine = verify_hypotheses(RationalFunction(Polynomial{1, 1}), 20);
  CHECK(affine.failures() == std::vector<std::string>{"iii", "v"});
}

TEST_CASE("periodic control fails aperiodicity only") {
  HypothesisReport r = verify_hypotheses(RationalFunction(Polynomial{1, 0, 1}), 20);
  CHECK(r.failures() == std::vector<std::string>{"vi"});
  CHECK(r.support_gcd == 2);
  CHECK_THROWS_AS(compute_profile(RationalFunction(Polynomial{1, 0, 1}), 10), HypothesisFailure);
}

TEST_CASE("negative coefficient is caught") {
  HypothesisReport r = verify_hypotheses(RationalFunction(Polynomial{1, -1, 1}), 20);
  CHECK_FALSE(r.coeffs_nonneg);
}

TEST_CASE("pole at zero") {
  HypothesisReport r = verify_hypotheses(RationalFunction(Polynomial{1}, Polynomial{0, 1}), 20);
  CHECK_FALSE(r.radius_positive);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("profile");

TEST_CASE("tree-child constants at 10 digits") {
  const auto& p = tree_child_profile();
  for (const Interval* iv : {&p.tau, &p.rho, &p.c, &p.gamma}) CHECK(iv->width() <= pow10(-10));
  CHECK(matches_decimal(p.tau, "0.1226285445"));
  CHECK(matches_decimal(p.rho, "0.0787573489"));
  CHECK(matches_decimal(p.c, "0.0667418464"));
  CHECK(matches_decimal(p.gamma, "4.6710490707"));
  CHECK(matches_decimal(p.c, "0.06674185"));
  CHECK(matches_decimal(p.gamma, "4.67104907"));
  // rho = tau / phi(tau) and gamma = 1 / (rho e) are consistent enclosures.
  CHECK(p.rho.intersects(p.tau / tree_child_phi()(p.tau)));
}

TEST_CASE("higher precision nests") {
  AsymptoticProfile fine = compute_profile(tree_child_phi(), 25);
  const auto& coarse = tree_child_profile();
  CHECK(coarse.gamma.intersects(fine.gamma));
  CHECK(coarse.c.intersects(fine.c));
  CHECK(fine.gamma.width() <= pow10(-25));
}

TEST_CASE("Catalan control") {
  AsymptoticProfile p = compute_profile(catalan_phi(), 10);
  CHECK(p.tau.contains(Rational(1, 2)));
  CHECK(p.rho.contains(Rational(1, 4)));
  // gamma = 4/e = 1.47151776468577...; the ten-digit truncation is 1.4715177646.
  CHECK(p.gamma.intersects(Interval(4) / certified_constants(30).e()));
  CHECK(decimal_floor(p.gamma.lo(), 10) == "1.4715177646");
  // c = sqrt(phi / phi'') = sqrt(2 / 16)
  CHECK(p.c.lo() * p.c.lo() <= Rational(1, 8));
  CHECK(p.c.hi() * p.c.hi() >= Rational(1, 8));
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("coefficients");

TEST_CASE("Lagrange inversion") {
  auto tc = lagrange_coefficients(tree_child_phi(), 4);
  CHECK(tc[3] == Rational(745, 8));
  CHECK(lagrange_coefficients(catalan_phi(), 4) == std::vector<Rational>{1, 1, 2, 5});
  CHECK(lagrange_coefficients(RationalFunction::constant(1), 4) == std::vector<Rational>{1, 0, 0, 0});
}

TEST_CASE("Lagrange agrees with fixed point") {
  TruncatedSeries s = fixed_point_solve(tree_child_equation(), 60);
  auto l = lagrange_coefficients(tree_child_phi(), 60);
  for (std::size_t n = 1; n <= 60; ++n) CHECK(s[n] == l[n - 1]);
  TruncatedSeries cat = fixed_point_solve(SeriesExpr::x() + pow(SeriesExpr::u(), 2), 50);
  auto lc = lagrange_coefficients(catalan_phi(), 50);
  for (std::size_t n = 1; n <= 50; ++n) CHECK(cat[n] == lc[n - 1]);
}

TEST_CASE("counts") {
  TruncatedSeries x = TruncatedSeries::variable(1);
  CHECK(counts_from_series(x) == std::vector<BigInt>{1});
  auto cat = counts_from_coefficients(lagrange_coefficients(catalan_phi(), 6));
  for (unsigned long n = 1; n <= 6; ++n) CHECK(cat[n - 1] == factorial(n) * catalan(n - 1));
  CHECK_THROWS_AS(counts_from_coefficients({1, Rational(1, 3)}), InvalidArgument);
  try {
    counts_from_coefficients({1, 1, Rational(1, 7)});
    FAIL("expected InvalidArgument");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find('3') != std::string::npos);
  }
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("asymptotics");

TEST_CASE("estimate") {
  const auto& p = tree_child_profile();
  CHECK(asymptotic_estimate(p, 1).intersects(p.c * p.gamma));
  long double expected = 0.0667418464L * std::pow(8.0L, 7) * std::pow(4.6710490708L, 8);
  long double got = to_ld(asymptotic_estimate(p, 8).midpoint());
  CHECK(std::fabs(got / expected - 1) < 1e-8L);
}

TEST_CASE("convergence report") {
  const auto& p = tree_child_profile();
  auto counts = counts_from_coefficients(lagrange_coefficients(tree_child_phi(), 200));
  auto rows = convergence_report(counts, p, 20, 200);
  REQUIRE(rows.size() == 181);
  auto err = [](const ConvergenceRow& r) { return std::fabs(to_ld(r.ratio.midpoint()) - 1); };
  CHECK(err(rows.back()) < 0.1L);
  CHECK(err(rows.back()) < err(rows.front()));
  CHECK(convergence_report(counts, p, 30, 20).empty());
  CHECK_THROWS(convergence_report(counts, p, 1, 201));
}

TEST_CASE("Catalan convergence") {
  AsymptoticProfile p = compute_profile(catalan_phi(), 10);
  auto counts = counts_from_coefficients(lagrange_coefficients(catalan_phi(), 100));
  for (unsigned long n = 1; n <= 100; ++n) REQUIRE(counts[n - 1] == factorial(n) * catalan(n - 1));
  auto rows = convergence_report(counts, p, 10, 100);
  auto err = [](const ConvergenceRow& r) { return std::fabs(to_ld(r.ratio.midpoint()) - 1); };
  CHECK(err(rows.back()) < err(rows.front()));
  CHECK(err(rows.back()) < 0.02L);
}

TEST_CASE("Stirling consistency") {
  const auto& p = tree_child_profile();
  long double r20 = stirling_consistency_ratio(p, 20), r200 = stirling_consistency_ratio(p, 200);
  CHECK(std::fabs(r200 - 1) < std::fabs(r20 - 1));
  CHECK(std::fabs(r200 - 1) < 1e-3L);
}

TEST_CASE("local expansion near the singularity") {
  const auto& p = tree_child_profile();
  const long double target = std::sqrt(2.0L) * to_ld(p.c.midpoint());
  long double last_error = 1;
  for (int k : {2, 3, 4}) {
    Rational delta = pow10(-k);
    Rational z = p.rho.lo() * (1 - delta);
    Interval C = solve_branch(tree_child_phi(), p.tau, z, pow10(-30));
    long double scaled = to_ld((p.tau.midpoint() - C.midpoint())) / std::sqrt(to_ld(delta));
    long double error = std::fabs(scaled / target - 1);
    CHECK(error < last_error);
    last_error = error;
  }
  CHECK(last_error < 0.05L);
}

TEST_CASE("branch value agrees with the series") {
  // At z = 0.99 rho the coefficients decay like 0.99^n n^(-3/2); 400 terms
  // leave a tail far below the tolerance.
  const auto& p = tree_child_profile();
  Rational z = parse_rational("0.0787573488") * Rational(99, 100);
  auto coeffs = lagrange_coefficients(tree_child_phi(), 400);
  // Terms are formed exactly: a_n and z^n alone overflow a long double.
  Rational power = 1;
  long double sum = 0;
  for (const auto& a : coeffs) {
    power *= z;
    sum += to_ld(a * power);
  }
  Interval C = solve_branch(tree_child_phi(), p.tau, z, pow10(-20));
  CHECK(std::fabs(sum - to_ld(C.midpoint())) < 1e-5L);
}

TEST_CASE("JSON has decimal strings only") {
  auto j = to_json(tree_child_profile());
  CHECK(j["gamma"]["lo"].is_string());
  CHECK(j["gamma"]["mid"] == "4.6710490707");
  CHECK(j["hypotheses"]["all_pass"] == true);
}

TEST_SUITE_END();
