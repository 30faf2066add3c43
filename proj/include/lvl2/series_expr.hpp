#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "lvl2/error.hpp"
#include "lvl2/rational.hpp"
#include "lvl2/truncated_series.hpp"

namespace lvl2 {

// Immutable expression tree over the indeterminate X, the unknown U, rational
// constants, + - * / and integer powers. Subtrees are shared, so a repeated
// subterm built once is evaluated once.
class SeriesExpr {
 public:
  enum class Kind { X, U, Constant, Add, Sub, Mul, Div, Pow };

  static SeriesExpr x();
  static SeriesExpr u();
  static SeriesExpr constant(Rational value);

  Kind kind() const;
  // Operands of Add/Sub/Mul/Div (two) and Pow (one).
  const std::vector<SeriesExpr>& children() const;
  const Rational& value() const;  // Constant only
  int exponent() const;           // Pow only

  bool mentions_x() const;
  bool mentions_u() const;

  // Canonical prefix rendering, e.g. "(+ X (/ (^ U 2) 2))". Constants are
  // written in natural rational form.
  std::string prefix() const;

  // Identity of the shared node, used for memoised evaluation.
  const void* id() const { return node_.get(); }

  friend SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator/(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr pow(const SeriesExpr& base, int exponent);

 private:
  struct Node;
  explicit SeriesExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static SeriesExpr make(Kind kind, std::vector<SeriesExpr> children, Rational value = 0,
                         int exponent = 0);
  std::shared_ptr<const Node> node_;
};

SeriesExpr operator+(const SeriesExpr& a, const Rational& b);
SeriesExpr operator+(const Rational& a, const SeriesExpr& b);
SeriesExpr operator-(const SeriesExpr& a, const Rational& b);
SeriesExpr operator-(const Rational& a, const SeriesExpr& b);
SeriesExpr operator*(const Rational& a, const SeriesExpr& b);
SeriesExpr operator*(const SeriesExpr& a, const Rational& b);
SeriesExpr operator/(const SeriesExpr& a, const Rational& b);
SeriesExpr operator/(const Rational& a, const SeriesExpr& b);

// Raised when evaluation fails inside a subterm. path() is the list of child
// indices from the root to the failing node, rendered like "/0/1".
class ExprEvaluationError : public Error {
 public:
  ExprEvaluationError(const std::string& what, std::string path, std::string subterm)
      : Error(what + " at " + (path.empty() ? std::string("/") : path) + " in " + subterm),
        path_(std::move(path)),
        subterm_(std::move(subterm)) {}
  const std::string& path() const { return path_; }
  const std::string& subterm() const { return subterm_; }

 private:
  std::string path_;
  std::string subterm_;
};

// Evaluates expr with X := x_series and U := u_series at the common
// truncation order.
TruncatedSeries eval_expr(const SeriesExpr& expr, const TruncatedSeries& x_series,
                          const TruncatedSeries& u_series);

}  // namespace lvl2

namespace lvl2 {

// Bottom-up evaluation of an expression tree into any algebra providing
//   x(), u(), constant(const Rational&),
//   add(a, b), sub(a, b), mul(a, b), div(a, b), pow(a, int).
// Shared subtrees are evaluated once. An lvl2::Error thrown by an algebra
// operation is rethrown as ExprEvaluationError carrying the child-index path
// of the node where it happened.
template <class Value, class Algebra>
Value fold_expr(const SeriesExpr& expr, Algebra& algebra);

namespace detail {

template <class Value, class Algebra>
class ExprFolder {
 public:
  explicit ExprFolder(Algebra& algebra) : algebra_(algebra) {}

  Value fold(const SeriesExpr& e, const std::string& path) {
    if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
    Value v = compute(e, path);
    memo_.emplace(e.id(), v);
    return v;
  }

 private:
  Value compute(const SeriesExpr& e, const std::string& path) {
    using Kind = SeriesExpr::Kind;
    switch (e.kind()) {
      case Kind::X:
        return algebra_.x();
      case Kind::U:
        return algebra_.u();
      case Kind::Constant:
        return algebra_.constant(e.value());
      default:
        break;
    }
    const auto& ch = e.children();
    Value a = fold(ch[0], path + "/0");
    if (e.kind() == Kind::Pow) {
      return guarded(e, path, [&] { return algebra_.pow(a, e.exponent()); });
    }
    Value b = fold(ch[1], path + "/1");
    return guarded(e, path, [&]() -> Value {
      switch (e.kind()) {
        case Kind::Add: return algebra_.add(a, b);
        case Kind::Sub: return algebra_.sub(a, b);
        case Kind::Mul: return algebra_.mul(a, b);
        default: return algebra_.div(a, b);
      }
    });
  }

  template <class Fn>
  Value guarded(const SeriesExpr& e, const std::string& path, Fn&& fn) {
    try {
      return fn();
    } catch (const ExprEvaluationError&) {
      throw;
    } catch (const Error& err) {
      throw ExprEvaluationError(err.what(), path, e.prefix());
    }
  }

  Algebra& algebra_;
  std::unordered_map<const void*, Value> memo_;
};

}  // namespace detail

template <class Value, class Algebra>
Value fold_expr(const SeriesExpr& expr, Algebra& algebra) {
  detail::ExprFolder<Value, Algebra> folder(algebra);
  return folder.fold(expr, "");
}

}  // namespace lvl2
