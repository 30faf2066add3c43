#include "lvl2/series_expr.hpp"

#include <algorithm>

namespace lvl2 {

struct SeriesExpr::Node {
  Kind kind;
  std::vector<SeriesExpr> children;
  Rational value;
  int exponent = 0;
  bool has_x = false;
  bool has_u = false;
};

SeriesExpr SeriesExpr::make(Kind kind, std::vector<SeriesExpr> children, Rational value,
                            int exponent) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->value = std::move(value);
  node->exponent = exponent;
  node->has_x = kind == Kind::X;
  node->has_u = kind == Kind::U;
  for (const auto& c : children) {
    node->has_x = node->has_x || c.mentions_x();
    node->has_u = node->has_u || c.mentions_u();
  }
  node->children = std::move(children);
  return SeriesExpr(std::move(node));
}

SeriesExpr SeriesExpr::x() { return make(Kind::X, {}); }
SeriesExpr SeriesExpr::u() { return make(Kind::U, {}); }
SeriesExpr SeriesExpr::constant(Rational value) { return make(Kind::Constant, {}, std::move(value)); }

SeriesExpr::Kind SeriesExpr::kind() const { return node_->kind; }
const std::vector<SeriesExpr>& SeriesExpr::children() const { return node_->children; }
const Rational& SeriesExpr::value() const { return node_->value; }
int SeriesExpr::exponent() const { return node_->exponent; }
bool SeriesExpr::mentions_x() const { return node_->has_x; }
bool SeriesExpr::mentions_u() const { return node_->has_u; }

std::string SeriesExpr::prefix() const {
  switch (kind()) {
    case Kind::X: return "X";
    case Kind::U: return "U";
    case Kind::Constant: return to_string(value());
    case Kind::Pow:
      return "(^ " + children()[0].prefix() + " " + std::to_string(exponent()) + ")";
    default: break;
  }
  const char* op = kind() == Kind::Add ? "+" : kind() == Kind::Sub ? "-" : kind() == Kind::Mul ? "*" : "/";
  return std::string("(") + op + " " + children()[0].prefix() + " " + children()[1].prefix() + ")";
}

SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b) { return SeriesExpr::make(SeriesExpr::Kind::Add, {a, b}); }
SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b) { return SeriesExpr::make(SeriesExpr::Kind::Sub, {a, b}); }
SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b) { return SeriesExpr::make(SeriesExpr::Kind::Mul, {a, b}); }
SeriesExpr operator/(const SeriesExpr& a, const SeriesExpr& b) { return SeriesExpr::make(SeriesExpr::Kind::Div, {a, b}); }
SeriesExpr pow(const SeriesExpr& base, int exponent) {
  return SeriesExpr::make(SeriesExpr::Kind::Pow, {base}, 0, exponent);
}

SeriesExpr operator+(const SeriesExpr& a, const Rational& b) { return a + SeriesExpr::constant(b); }
SeriesExpr operator+(const Rational& a, const SeriesExpr& b) { return SeriesExpr::constant(a) + b; }
SeriesExpr operator-(const SeriesExpr& a, const Rational& b) { return a - SeriesExpr::constant(b); }
SeriesExpr operator-(const Rational& a, const SeriesExpr& b) { return SeriesExpr::constant(a) - b; }
SeriesExpr operator*(const Rational& a, const SeriesExpr& b) { return SeriesExpr::constant(a) * b; }
SeriesExpr operator*(const SeriesExpr& a, const Rational& b) { return a * SeriesExpr::constant(b); }
SeriesExpr operator/(const SeriesExpr& a, const Rational& b) { return a / SeriesExpr::constant(b); }
SeriesExpr operator/(const Rational& a, const SeriesExpr& b) { return SeriesExpr::constant(a) / b; }

namespace {

struct SeriesAlgebra {
  const TruncatedSeries& x_series;
  const TruncatedSeries& u_series;
  std::size_t order;

  TruncatedSeries x() const { return x_series.truncated(order); }
  TruncatedSeries u() const { return u_series.truncated(order); }
  TruncatedSeries constant(const Rational& c) const { return TruncatedSeries::constant(c, order); }
  TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) const { return a + b; }
  TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) const { return a - b; }
  TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) const { return series_mul(a, b); }
  TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) const { return series_div(a, b); }
  TruncatedSeries pow(const TruncatedSeries& a, int e) const { return series_pow(a, e); }
};

}  // namespace

TruncatedSeries eval_expr(const SeriesExpr& expr, const TruncatedSeries& x_series,
                          const TruncatedSeries& u_series) {
  SeriesAlgebra algebra{x_series, u_series, std::min(x_series.order(), u_series.order())};
  return fold_expr<TruncatedSeries>(expr, algebra);
}

}  // namespace lvl2
