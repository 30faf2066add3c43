#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lvl2/fixed_point.hpp"
#include "lvl2/netclass.hpp"
#include "lvl2/rational_function.hpp"
#include "rewritten_equation.hpp"

using namespace lvl2;

namespace {

// The printed form: -4 (z - 1)^6 over 2z^7 - 18z^6 + 67z^5 - 126z^4 + 124z^3 - 70z^2 + 30z - 4.
RationalFunction printed_phi() {
  Polynomial num = pow(Polynomial{-1, 1}, 6) * Rational(-4);
  Polynomial den{-4, 30, -70, 124, -126, 67, -18, 2};
  return RationalFunction(num, den);
}

// p1/q1 == p2/q2 as a polynomial identity, and the two forms differ by a
// constant: p1 = k p2 and q1 = k q2.
bool same_up_to_constant(const Polynomial& p1, const Polynomial& q1, const Polynomial& p2,
                         const Polynomial& q2) {
  if (p1.degree() != p2.degree() || q1.degree() != q2.degree()) return false;
  Rational k = p1.leading() / p2.leading();
  return p1 == p2 * k && q1 == q2 * k;
}

}  // namespace

TEST_SUITE_BEGIN("equation");

TEST_CASE("fixed point of the registered equation") {
  SeriesExpr eq = lookup("level2-tree-child").equation.value();
  TruncatedSeries s = fixed_point_solve(eq, 8);
  CHECK(s[1] == 1);
  CHECK(s[2] == Rational(3, 2));
  CHECK(s[3] == 11);
  CHECK(s[8] == Rational(105501013, 128));
  CHECK(s == fixed_point_solve(rewritten_tree_child_rhs(), 8));
}

TEST_CASE("right-hand side at U = 0 is x") {
  TruncatedSeries x = TruncatedSeries::variable(6);
  CHECK(eval_expr(tree_child_equation(), x, TruncatedSeries(6)) == x);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("phi");

TEST_CASE("tree-child phi matches the printed form") {
  RationalFunction phi = derive_phi(tree_child_equation());
  RationalFunction printed = printed_phi();
  CHECK(phi == printed);
  CHECK(same_up_to_constant(phi.num(), phi.den(), printed.num() * Rational(-1),
                            printed.den() * Rational(-1)));
  // Coprime integer coefficients, positive denominator at 0.
  CHECK(phi.den()[0] > 0);
  for (const auto& c : phi.num().coefficients()) CHECK(c.get_den() == 1);
  CHECK(phi.num()[0] == 4);
  CHECK(phi.den()[0] == 4);
}

TEST_CASE("phi is invariant under rewriting the equation") {
  CHECK(derive_phi(rewritten_tree_child_rhs()) == derive_phi(tree_child_equation()));
  SeriesExpr X = SeriesExpr::x(), U = SeriesExpr::u();
  CHECK(derive_phi(X + pow(U, 2)) == derive_phi(pow(U, 3) / U + X));
}

TEST_CASE("simple equations") {
  SeriesExpr X = SeriesExpr::x(), U = SeriesExpr::u();
  CHECK(derive_phi(X + pow(U, 2)) == RationalFunction(Polynomial{1}, Polynomial{1, -1}));
  CHECK(derive_phi(X) == RationalFunction::constant(1));
}

TEST_CASE("equation shape is enforced") {
  SeriesExpr X = SeriesExpr::x(), U = SeriesExpr::u();
  CHECK_THROWS_AS(derive_phi(2 * X + U), InvalidArgument);
  CHECK_THROWS_AS(derive_phi(X + X * U), InvalidArgument);
  CHECK_THROWS_AS(derive_phi(pow(U, 2)), InvalidArgument);
  CHECK_THROWS_AS(derive_phi(U - X), InvalidArgument);
}

TEST_CASE("phi series") {
  RationalFunction phi = derive_phi(tree_child_equation());
  TruncatedSeries s = phi_series(phi, 3);
  CHECK(s.coefficients() ==
        std::vector<Rational>{1, Rational(3, 2), Rational(35, 4), Rational(403, 8)});
  CHECK(phi_series(RationalFunction(Polynomial{1}, Polynomial{1, -1}), 4) ==
        TruncatedSeries(std::vector<Rational>{1, 1, 1, 1, 1}));
  CHECK(phi_series(RationalFunction::constant(1), 3) == TruncatedSeries::constant(1, 3));
  CHECK_THROWS(phi_series(RationalFunction(Polynomial{1}, Polynomial{0, 1}), 3));
}

TEST_CASE("T = x phi(T) holds for the fixed-point solution") {
  const std::size_t N = 25;
  TruncatedSeries T = fixed_point_solve(tree_child_equation(), N);
  TruncatedSeries phi = phi_series(derive_phi(tree_child_equation()), N);
  // Compose phi(T) by Horner; T has zero constant term so truncation is exact.
  TruncatedSeries composed = TruncatedSeries::constant(phi[N], N);
  for (std::size_t k = N; k-- > 0;) composed = composed * T + TruncatedSeries::constant(phi[k], N);
  CHECK(TruncatedSeries::variable(N) * composed == T);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("registry");

TEST_CASE("reference table") {
  CHECK(reference_table().size() == 8);
  CHECK(lookup("level2-tree-child").reference_gamma == "4.67104907");
  CHECK(lookup("level2-gtc-outerplanar").reference_gamma == "3.83201916");
  CHECK_FALSE(lookup("level2-general").equation.has_value());
  int with_equation = 0;
  for (const auto& spec : reference_table()) with_equation += spec.equation.has_value();
  CHECK(with_equation == 1);
}

TEST_CASE("unknown names list the known ones") {
  try {
    lookup("level3");
    FAIL("expected UnknownClass");
  } catch (const UnknownClass& e) {
    std::string what = e.what();
    for (const auto& spec : known_classes()) CHECK(what.find(spec.name) != std::string::npos);
  }
}

TEST_CASE("JSON export keeps constants as strings") {
  auto j = registry_json();
  REQUIRE(j.is_array());
  bool found = false;
  for (const auto& cls : j) {
    if (cls["name"] == "level2-tree-child") {
      found = true;
      CHECK(cls["reference_c"] == "0.06674185");
      CHECK(cls["equation"].is_string());
    }
  }
  CHECK(found);
}

TEST_SUITE_END();
