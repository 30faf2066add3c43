#include "lvl2/netclass.hpp"

namespace lvl2 {

UnknownClass::UnknownClass(const std::string& name)
    : Error([&] {
        std::string msg = "unknown class '" + name + "'; known classes:";
        for (const auto& spec : known_classes()) msg += " " + spec.name;
        return msg;
      }()) {}

SeriesExpr tree_child_equation() {
  const SeriesExpr x = SeriesExpr::x();
  const SeriesExpr t = SeriesExpr::u();
  const SeriesExpr one = SeriesExpr::constant(1);
  const SeriesExpr inv = one / (one - t);       // 1/(1-T)
  const SeriesExpr inv2 = pow(inv, 2);          // (1/(1-T))^2
  const SeriesExpr extra = inv2 - one;          // (1/(1-T))^2 - 1
  const SeriesExpr t2 = pow(t, 2);

  return x + t2 / Rational(2) + Rational(1, 2) * extra * t +
         Rational(3, 2) * inv2 * (t / (one - t)) * extra * t +
         pow(inv, 4) * extra * t2 +
         Rational(1, 4) * inv2 * pow(extra, 2) * t2;
}

namespace {

struct Summand {
  bool negated;
  SeriesExpr term;
};

void flatten_sum(const SeriesExpr& e, bool negated, std::vector<Summand>& out) {
  using Kind = SeriesExpr::Kind;
  if (e.kind() == Kind::Add) {
    flatten_sum(e.children()[0], negated, out);
    flatten_sum(e.children()[1], negated, out);
  } else if (e.kind() == Kind::Sub) {
    flatten_sum(e.children()[0], negated, out);
    flatten_sum(e.children()[1], !negated, out);
  } else {
    out.push_back({negated, e});
  }
}

// U maps to z; X must not occur.
struct RationalFunctionAlgebra {
  RationalFunction x() const {
    throw InvalidArgument("derive_phi: X occurs inside F(U)");
  }
  RationalFunction u() const { return RationalFunction::identity(); }
  RationalFunction constant(const Rational& c) const { return RationalFunction::constant(c); }
  RationalFunction add(const RationalFunction& a, const RationalFunction& b) const { return a + b; }
  RationalFunction sub(const RationalFunction& a, const RationalFunction& b) const { return a - b; }
  RationalFunction mul(const RationalFunction& a, const RationalFunction& b) const { return a * b; }
  RationalFunction div(const RationalFunction& a, const RationalFunction& b) const { return a / b; }
  RationalFunction pow(const RationalFunction& a, int e) const { return lvl2::pow(a, e); }
};

}  // namespace

RationalFunction derive_phi(const SeriesExpr& eq) {
  std::vector<Summand> summands;
  flatten_sum(eq, false, summands);
  int x_terms = 0;
  RationalFunction f;
  RationalFunctionAlgebra algebra;
  for (const auto& s : summands) {
    if (s.term.kind() == SeriesExpr::Kind::X) {
      if (s.negated) throw InvalidArgument("derive_phi: X must appear with coefficient +1");
      ++x_terms;
      continue;
    }
    if (s.term.mentions_x()) {
      throw InvalidArgument("derive_phi: X occurs outside the top-level summand in " +
                            s.term.prefix());
    }
    RationalFunction value = fold_expr<RationalFunction>(s.term, algebra);
    if (s.negated) {
      f -= value;
    } else {
      f += value;
    }
  }
  if (x_terms != 1) {
    throw InvalidArgument("derive_phi: equation must have the shape X + F(U); found " +
                          std::to_string(x_terms) + " top-level X summands");
  }
  RationalFunction z = RationalFunction::identity();
  RationalFunction denominator = z - f;
  if (denominator.is_zero()) throw InvalidArgument("derive_phi: z - F(z) is identically zero");
  return z / denominator;
}

namespace {

NetworkClassSpec cell(std::string name, std::string description, bool tree_child, bool galled,
                      bool outer_planar, std::string c, std::string gamma) {
  NetworkClassSpec spec;
  spec.name = std::move(name);
  spec.description = std::move(description);
  spec.level = 2;
  spec.tree_child = tree_child;
  spec.galled = galled;
  spec.outer_planar = outer_planar;
  spec.reference_c = std::move(c);
  spec.reference_gamma = std::move(gamma);
  return spec;
}

std::vector<NetworkClassSpec> build_reference_table() {
  std::vector<NetworkClassSpec> table = {
      cell("level2-general", "level-2 networks", false, false, false, "0.02931010", "15.4332995"),
      cell("level2-tree-child", "level-2 tree-child networks", true, false, false, "0.06674185",
           "4.67104907"),
      cell("level2-galled", "level-2 galled networks", false, true, false, "0.05885954",
           "6.42241234"),
      cell("level2-gtc", "level-2 galled tree-child networks", true, true, false, "0.07888067",
           "3.98275804"),
      cell("level2-general-outerplanar", "outer planar level-2 networks", false, false, true,
           "0.03486095", "12.9230111"),
      cell("level2-tree-child-outerplanar", "outer planar level-2 tree-child networks", true,
           false, true, "0.07450612", "4.33252428"),
      cell("level2-galled-outerplanar", "outer planar level-2 galled networks", false, true, true,
           "0.06965278", "5.39994365"),
      cell("level2-gtc-outerplanar", "outer planar level-2 galled tree-child networks", true, true,
           true, "0.08586449", "3.83201916"),
  };
  table[1].equation = tree_child_equation();
  return table;
}

std::vector<NetworkClassSpec> build_known_classes() {
  std::vector<NetworkClassSpec> all = reference_table();
  NetworkClassSpec trees;
  trees.name = "trees";
  trees.description = "binary phylogenetic trees";
  trees.level = 0;
  all.push_back(trees);
  NetworkClassSpec level1;
  level1.name = "level1";
  level1.description = "level-1 networks";
  level1.level = 1;
  all.push_back(level1);
  return all;
}

}  // namespace

const std::vector<NetworkClassSpec>& reference_table() {
  static const std::vector<NetworkClassSpec> table = build_reference_table();
  return table;
}

const std::vector<NetworkClassSpec>& known_classes() {
  static const std::vector<NetworkClassSpec> all = build_known_classes();
  return all;
}

const NetworkClassSpec& lookup(const std::string& name) {
  for (const auto& spec : known_classes()) {
    if (spec.name == name) return spec;
  }
  throw UnknownClass(name);
}

nlohmann::json to_json(const NetworkClassSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["description"] = spec.description;
  j["level"] = spec.level;
  j["tree_child"] = spec.tree_child;
  j["galled"] = spec.galled;
  j["outer_planar"] = spec.outer_planar;
  j["equation"] = spec.equation ? nlohmann::json(spec.equation->prefix()) : nlohmann::json(nullptr);
  j["reference_c"] = spec.reference_c ? nlohmann::json(*spec.reference_c) : nlohmann::json(nullptr);
  j["reference_gamma"] =
      spec.reference_gamma ? nlohmann::json(*spec.reference_gamma) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json registry_json() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& spec : known_classes()) out.push_back(to_json(spec));
  return out;
}

}  // namespace lvl2
