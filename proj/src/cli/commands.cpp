#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lvl2/classify.hpp"
#include "lvl2/cli.hpp"
#include "lvl2/fixed_point.hpp"
#include "lvl2/generate.hpp"
#include "lvl2/inversion.hpp"
#include "lvl2/netclass.hpp"
#include "lvl2/network_io.hpp"

namespace lvl2 {
namespace {

using nlohmann::json;

constexpr const char* kDefaultClass = "level2-tree-child";
constexpr unsigned kTableDigits = 10;

// Thrown for bad parameter values that CLI11 cannot see (ranges that depend
// on each other, the thread variable).
struct UsageError : Error {
  using Error::Error;
};

// Equation-less classes cannot go through the analytic pipeline.
struct Unsupported : Error {
  using Error::Error;
};

struct RunConfig {
  std::string class_name = kDefaultClass;
  long order = 0;
  long n = 0;
  long n_max = 3;
  long digits = 10;
  std::optional<long> r_max;
  unsigned long long budget = 0;
  bool stream = false;
  bool saturate = false;
  std::string format = "text";
};

unsigned thread_count() {
  const char* env = std::getenv("LVL2_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1 || value > 1024)
    throw UsageError(std::string("LVL2_THREADS must be an integer in 1..1024, got '") + env + "'");
  return static_cast<unsigned>(value);
}

const NetworkClassSpec& class_with_equation(const std::string& name) {
  const NetworkClassSpec& spec = lookup(name);
  if (!spec.equation)
    throw Unsupported("no functional equation available for class '" + name +
                      "'; only the enumeration oracle supports it");
  return spec;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

// The d-place rounding of iv when it is certified, else the rounded midpoint.
std::string rounded(const Interval& iv, unsigned digits) {
  auto candidates = consistent_roundings(iv, digits);
  return candidates.size() == 1 ? candidates.front() : decimal_nearest(iv.midpoint(), digits);
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows)
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], row[i].size());
    }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    out << line << '\n';
  }
}

// ---------------------------------------------------------------- coeffs

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  if (cfg.order < 1) throw UsageError("--order must be at least 1");
  const NetworkClassSpec& spec = class_with_equation(cfg.class_name);
  const auto order = static_cast<std::size_t>(cfg.order);
  TruncatedSeries series = fixed_point_solve(*spec.equation, order);
  std::vector<BigInt> counts = counts_from_series(series);

  if (cfg.format == "json") {
    json rows = json::array();
    for (std::size_t n = 1; n <= order; ++n)
      rows.push_back({{"n", n},
                      {"coefficient", to_fraction_string(series[n])},
                      {"count", counts[n - 1].get_str()}});
    out << json{{"class", spec.name}, {"order", order}, {"rows", rows}}.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out << "n,coefficient,count\n";
    for (std::size_t n = 1; n <= order; ++n)
      out << n << ',' << to_fraction_string(series[n]) << ',' << counts[n - 1].get_str() << '\n';
  } else {
    std::vector<std::vector<std::string>> rows = {{"n", "coefficient", "t_n"}};
    for (std::size_t n = 1; n <= order; ++n)
      rows.push_back({std::to_string(n), to_string(series[n]), counts[n - 1].get_str()});
    print_table(out, rows);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- asympt

struct Verdict {
  std::string constant;
  std::string reference;
  bool match;
};

std::vector<Verdict> verdicts(const NetworkClassSpec& spec, const AsymptoticProfile& profile) {
  std::vector<Verdict> v;
  if (spec.reference_c)
    v.push_back({"c", *spec.reference_c, matches_decimal(profile.c, *spec.reference_c)});
  if (spec.reference_gamma)
    v.push_back(
        {"gamma", *spec.reference_gamma, matches_decimal(profile.gamma, *spec.reference_gamma)});
  return v;
}

std::vector<std::vector<std::string>> hypothesis_rows(const HypothesisReport& r) {
  auto mark = [](bool ok) { return std::string(ok ? "pass" : "FAIL"); };
  std::string radius = r.radius_infinite ? "inf" : to_decimal_string(r.radius, 12);
  return {
      {"(i)", mark(r.phi0_nonzero), "phi(0) != 0"},
      {"(ii)", mark(r.coeffs_nonneg),
       "phi_k >= 0 for k <= " + std::to_string(r.coeffs_nonneg_checked_to)},
      {"(iii)", mark(r.nonlinear), "phi is not affine"},
      {"(iv)", mark(r.radius_positive), "radius of convergence R = " + radius},
      {"(v)", mark(r.tau_unique_in_0R),
       std::to_string(r.tau_candidates) + " root(s) of phi - z phi' in (0, R)"},
      {"(vi)", mark(r.aperiodic), "support gcd " + std::to_string(r.support_gcd)},
  };
}

int cmd_asympt(const RunConfig& cfg, std::ostream& out) {
  if (cfg.digits < 1 || cfg.digits > 200) throw UsageError("--digits must be in 1..200");
  const NetworkClassSpec& spec = class_with_equation(cfg.class_name);
  const auto digits = static_cast<unsigned>(cfg.digits);
  RationalFunction phi = derive_phi(*spec.equation);
  AsymptoticProfile profile = compute_profile(phi, digits);
  std::vector<Verdict> checks = verdicts(spec, profile);
  std::vector<std::string> gamma_roundings = consistent_roundings(profile.gamma, digits);
  bool all_match = std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.match; });

  if (cfg.format == "json") {
    json j = to_json(profile);
    j["class"] = spec.name;
    j["phi"] = phi.to_string();
    j["gamma_roundings"] = gamma_roundings;
    json jv = json::array();
    for (const auto& v : checks)
      jv.push_back({{"constant", v.constant},
                    {"reference", v.reference},
                    {"verdict", v.match ? "MATCH" : "MISMATCH"}});
    j["verdicts"] = jv;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    const unsigned shown = digits + 4;
    out << "quantity,lo,hi,reference,verdict\n";
    auto row = [&](const char* name, const Interval& iv) {
      std::string ref, verdict;
      for (const auto& v : checks)
        if (v.constant == name) ref = v.reference, verdict = v.match ? "MATCH" : "MISMATCH";
      out << name << ',' << decimal_floor(iv.lo(), shown) << ',' << decimal_ceil(iv.hi(), shown)
          << ',' << ref << ',' << verdict << '\n';
    };
    row("tau", profile.tau);
    row("rho", profile.rho);
    row("c", profile.c);
    row("gamma", profile.gamma);
  } else {
    const unsigned shown = digits + 4;
    out << "class " << spec.name << ", " << digits << " digits\n";
    out << "phi(z) = " << phi.to_string() << "\n\n";
    print_table(out, {{"tau", to_decimal_string(profile.tau, shown)},
                      {"rho", to_decimal_string(profile.rho, shown)},
                      {"c", to_decimal_string(profile.c, shown)},
                      {"gamma", to_decimal_string(profile.gamma, shown)}});
    out << "\nhypotheses\n";
    print_table(out, hypothesis_rows(profile.report));
    if (!checks.empty()) out << "\nreference constants\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : checks)
      rows.push_back({v.constant, v.reference, v.match ? "MATCH" : "MISMATCH"});
    print_table(out, rows);
    out << "\ngamma rounded to " << digits << " places: ";
    for (std::size_t i = 0; i < gamma_roundings.size(); ++i)
      out << (i ? " or " : "") << gamma_roundings[i];
    out << (gamma_roundings.size() == 1 ? " (certified)" : " (not yet decided)") << '\n';
  }
  return all_match ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  if (cfg.n > 12) throw UsageError("--n above 12 is beyond exhaustive enumeration");
  const NetworkClassSpec& spec = lookup(cfg.class_name);
  const int n = static_cast<int>(cfg.n);
  int r_max = default_reticulation_bound(n, spec);
  if (cfg.r_max) {
    if (*cfg.r_max < 0 || *cfg.r_max > 3 * n) throw UsageError("--r-max must be in 0..3n");
    r_max = static_cast<int>(*cfg.r_max);
  }
  GenerateOptions options;
  options.state_budget = cfg.budget;
  options.threads = thread_count();

  ClassCount result = count_class(n, spec, r_max, cfg.saturate, options);

  std::vector<std::string> records;
  if (cfg.stream) {
    if (spec.tree_child) options.tree_child_only = true;
    generate_networks(n, r_max, options, [&](const PhyloNetwork& net) {
      if (matches(classify(net), spec)) records.push_back(network_to_string(net));
    });
  }
  const bool stable = !cfg.saturate || result.saturated();

  if (cfg.format == "json") {
    json j{{"class", spec.name},       {"n", n},
           {"r_max", r_max},           {"count", result.count},
           {"shapes", result.shapes},  {"states", result.progress.states}};
    j["saturation"] = cfg.saturate ? json{{"r_max", r_max + 1},
                                          {"count", *result.recount},
                                          {"stable", stable}}
                                   : json(nullptr);
    if (cfg.stream) j["networks"] = records;
    out << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    if (cfg.stream) {
      out << "index,network\n";
      for (std::size_t i = 0; i < records.size(); ++i) out << i + 1 << ',' << csv_quote(records[i]) << '\n';
      err << "count " << result.count << '\n';
    } else {
      out << "class,n,r_max,count,shapes,states";
      if (cfg.saturate) out << ",saturation_r_max,saturation_count,stable";
      out << '\n'
          << spec.name << ',' << n << ',' << r_max << ',' << result.count << ',' << result.shapes
          << ',' << result.progress.states;
      if (cfg.saturate) out << ',' << r_max + 1 << ',' << *result.recount << ',' << (stable ? "yes" : "no");
      out << '\n';
    }
  } else if (cfg.stream) {
    for (const auto& record : records) out << record << '\n';
    err << "count " << result.count << '\n';
  } else {
    out << result.count << '\n';
    if (cfg.saturate)
      out << "r_max " << r_max + 1 << ": " << *result.recount << ' '
          << (stable ? "(stable)" : "(NOT stable: raise --r-max)") << '\n';
  }
  if (cfg.saturate && !stable) {
    err << "count changed from " << result.count << " to " << *result.recount
        << " at r_max + 1\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.order < 1) throw UsageError("--order must be at least 1");
  if (cfg.n_max < 1) throw UsageError("--n-max must be at least 1");
  if (cfg.n_max > 6) throw UsageError("--n-max above 6 is beyond exhaustive enumeration");
  if (cfg.order < cfg.n_max) throw UsageError("--order must be at least --n-max");
  const NetworkClassSpec& spec = lookup(kDefaultClass);
  const auto order = static_cast<std::size_t>(cfg.order);
  const int n_max = static_cast<int>(cfg.n_max);
  std::vector<Check> checks;

  TruncatedSeries series = fixed_point_solve(*spec.equation, order);
  RationalFunction phi = derive_phi(*spec.equation);
  std::vector<Rational> lagrange = lagrange_coefficients(phi, order);
  {
    std::size_t bad = 0;
    for (std::size_t n = 1; n <= order && !bad; ++n)
      if (series[n] != lagrange[n - 1]) bad = n;
    checks.push_back({"fixed-point = Lagrange through order " + std::to_string(order), bad == 0,
                      bad ? "first difference at n = " + std::to_string(bad) : "exact equality"});
  }

  std::vector<BigInt> counts;
  try {
    counts = counts_from_series(series);
    checks.push_back({"counts n! [x^n] T integral", true, "n = 1.." + std::to_string(order)});
  } catch (const Error& e) {
    checks.push_back({"counts n! [x^n] T integral", false, e.what()});
  }

  GenerateOptions options;
  options.threads = thread_count();
  for (int n = 1; n <= n_max; ++n) {
    int r_max = default_reticulation_bound(n, spec);
    ClassCount oracle = count_class(n, spec, r_max, true, options);
    std::string expected = counts.size() >= static_cast<std::size_t>(n) ? counts[n - 1].get_str() : "?";
    bool agree = std::to_string(oracle.count) == expected;
    std::ostringstream detail;
    detail << "oracle " << oracle.count << ", series " << expected << ", r_max " << r_max
           << " -> " << r_max + 1 << ": " << *oracle.recount;
    checks.push_back({"oracle t_" + std::to_string(n), agree && oracle.saturated(), detail.str()});
  }

  HypothesisReport report = verify_hypotheses(phi, order);
  {
    auto failed = report.failures();
    std::string detail = "(ii) checked through order " + std::to_string(order);
    for (const auto& f : failed) detail += "; (" + f + ") fails";
    checks.push_back({"hypotheses (i)-(vi)", report.all_pass(), detail});
  }

  std::vector<ConvergenceRow> table;
  if (report.all_pass() && counts.size() == order) {
    AsymptoticProfile profile = compute_profile(phi, kTableDigits, order);
    unsigned long from = std::max<unsigned long>(1, order / 10);
    table = convergence_report(counts, profile, from, order);
    auto error = [](const ConvergenceRow& row) -> Rational {
      return abs(row.ratio.midpoint() - 1);
    };
    bool shrinking = error(table.back()) < error(table.front()) || table.size() == 1;
    std::string detail = "|ratio - 1| = " + decimal_nearest(error(table.front()), 6) + " at n = " +
                         std::to_string(table.front().n) + ", " +
                         decimal_nearest(error(table.back()), 6) + " at n = " +
                         std::to_string(table.back().n);
    checks.push_back({"convergence t_n / (c n^(n-1) gamma^n) -> 1", shrinking, detail});
  } else {
    checks.push_back({"convergence t_n / (c n^(n-1) gamma^n) -> 1", false,
                      "skipped: hypotheses or counts failed"});
  }

  auto first_failure = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; });
  const bool pass = first_failure == checks.end();
  std::string confirmed;
  for (int n = 1; n <= n_max && n <= static_cast<int>(counts.size()); ++n)
    confirmed += (n > 1 ? ", " : "") + counts[n - 1].get_str();

  if (cfg.format == "json") {
    json jc = json::array();
    for (const auto& c : checks) jc.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    json jt = json::array();
    for (const auto& row : table)
      jt.push_back({{"n", row.n},
                    {"lo", decimal_floor(row.ratio.lo(), 8)},
                    {"hi", decimal_ceil(row.ratio.hi(), 8)}});
    json counts_json = json::array();
    for (const auto& t : counts) counts_json.push_back(t.get_str());
    out << json{{"order", order},
                {"n_max", n_max},
                {"pass", pass},
                {"first_failure", pass ? json(nullptr) : json(first_failure->name)},
                {"checks", jc},
                {"counts", counts_json},
                {"convergence", jt}}
               .dump(2)
        << '\n';
  } else if (cfg.format == "csv") {
    out << "check,pass,detail\n";
    for (const auto& c : checks)
      out << csv_quote(c.name) << ',' << (c.pass ? "yes" : "no") << ',' << csv_quote(c.detail) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : checks) rows.push_back({c.pass ? "PASS" : "FAIL", c.name, c.detail});
    print_table(out, rows);
    if (!table.empty()) {
      out << "\nconvergence of t_n / (c n^(n-1) gamma^n)\n";
      std::vector<std::vector<std::string>> conv = {{"n", "ratio"}};
      const unsigned long step = std::max<unsigned long>(1, order / 10);
      for (const auto& row : table)
        if (row.n == table.front().n || row.n == table.back().n || row.n % step == 0)
          conv.push_back({std::to_string(row.n), to_decimal_string(row.ratio, 8)});
      print_table(out, conv);
    }
    out << '\n';
    if (pass)
      out << "PASS: t_1..t_" << n_max << " = " << confirmed
          << " confirmed by fixed point, Lagrange inversion and enumeration\n";
    else
      out << "FAIL: " << first_failure->name << " (" << first_failure->detail << ")\n";
  }
  return pass ? kExitOk : kExitVerificationFailed;
}

// ---------------------------------------------------------------- table

int cmd_table(const RunConfig& cfg, std::ostream& out) {
  struct Row {
    const NetworkClassSpec* spec;
    std::optional<AsymptoticProfile> profile;
  };
  std::vector<Row> rows;
  for (const auto& spec : reference_table()) {
    Row row{&spec, std::nullopt};
    if (spec.equation) row.profile = compute_profile(derive_phi(*spec.equation), kTableDigits);
    rows.push_back(std::move(row));
  }
  auto ref = [](const std::optional<std::string>& s) { return s ? *s : std::string("-"); };

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json j = to_json(*row.spec);
      j["computable"] = row.profile.has_value();
      if (row.profile) {
        j["computed_c"] = rounded(row.profile->c, kTableDigits);
        j["computed_gamma"] = rounded(row.profile->gamma, kTableDigits);
        j["profile"] = to_json(*row.profile);
      } else {
        j["computed_c"] = nullptr;
        j["computed_gamma"] = nullptr;
      }
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return kExitOk;
  }

  std::vector<std::vector<std::string>> listing = {
      {"class", "c", "gamma", "computable", "computed c", "computed gamma"}};
  for (const auto& row : rows) {
    const bool has = row.profile.has_value();
    listing.push_back({row.spec->name, ref(row.spec->reference_c), ref(row.spec->reference_gamma),
                       has ? "yes" : "no", has ? rounded(row.profile->c, kTableDigits) : "-",
                       has ? rounded(row.profile->gamma, kTableDigits) : "-"});
  }
  if (cfg.format == "csv") {
    out << "class,reference_c,reference_gamma,computable,computed_c,computed_gamma\n";
    for (std::size_t i = 1; i < listing.size(); ++i) {
      auto r = listing[i];
      for (auto& cell : r)
        if (cell == "-") cell.clear();
      out << r[0] << ',' << r[1] << ',' << r[2] << ',' << r[3] << ',' << r[4] << ',' << r[5] << '\n';
    }
    return kExitOk;
  }

  // 2 x 4 grid: planarity by restriction.
  const char* columns[] = {"general", "tree-child", "galled", "gtc"};
  std::vector<std::vector<std::string>> grid = {{"", "general", "tree-child", "galled", "GTC"}};
  for (const char* suffix : {"", "-outerplanar"}) {
    std::vector<std::string> c_line = {*suffix ? "outer planar  c" : "arbitrary     c"};
    std::vector<std::string> g_line = {"              gamma"};
    for (const char* col : columns) {
      const NetworkClassSpec& spec = lookup(std::string("level2-") + col + suffix);
      c_line.push_back(ref(spec.reference_c));
      g_line.push_back(ref(spec.reference_gamma));
    }
    grid.push_back(c_line);
    grid.push_back(g_line);
  }
  print_table(out, grid);
  out << '\n';
  print_table(out, listing);
  return kExitOk;
}

// ---------------------------------------------------------------- parsing

void add_format(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
}

void add_class(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--class", cfg.class_name, "Network class name")->capture_default_str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Level-2 phylogenetic network enumeration and asymptotics", "lvl2net"};
  app.require_subcommand(1);

  auto* coeffs = app.add_subcommand("coeffs", "Exact EGF coefficients and counts t_n");
  add_class(coeffs, cfg);
  cfg.order = 8;
  coeffs->add_option("--order", cfg.order, "Largest n")->capture_default_str();
  add_format(coeffs, cfg);

  auto* asympt = app.add_subcommand("asympt", "Certified tau, rho, c, gamma with verdicts");
  add_class(asympt, cfg);
  asympt->add_option("--digits", cfg.digits, "Decimal digits of the enclosures")
      ->capture_default_str();
  add_format(asympt, cfg);

  auto* oracle = app.add_subcommand("oracle", "Count networks by exhaustive enumeration");
  add_class(oracle, cfg);
  oracle->add_option("--n", cfg.n, "Number of leaves")->required();
  oracle->add_option("--r-max", cfg.r_max, "Reticulation bound (default depends on class)");
  oracle->add_option("--budget", cfg.budget, "Abort after this many search states (0 = none)");
  oracle->add_flag("--stream", cfg.stream, "Print every matching network as an arc list");
  oracle->add_flag("--saturate", cfg.saturate, "Re-count at r-max + 1 and report stability");
  add_format(oracle, cfg);

  auto* verify = app.add_subcommand("verify", "Cross-check series, inversion and enumeration");
  verify->add_option("--order", cfg.order, "Series order (default 30)");
  verify->add_option("--n-max", cfg.n_max, "Largest n checked by enumeration")->capture_default_str();
  add_format(verify, cfg);

  auto* table = app.add_subcommand("table", "Reference constants of the eight level-2 classes");
  add_format(table, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (verify->parsed() && verify->count("--order") == 0) cfg.order = 30;

  try {
    if (coeffs->parsed()) return cmd_coeffs(cfg, out);
    if (asympt->parsed()) return cmd_asympt(cfg, out);
    if (oracle->parsed()) return cmd_oracle(cfg, out, err);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_table(cfg, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownClass& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Unsupported& e) {
    err << e.what() << '\n';
    return kExitUnsupported;
  } catch (const BudgetExceeded& e) {
    err << e.what() << " (explored " << e.progress().states << " states, " << e.progress().shapes
        << " shapes so far)\n";
    return kExitBudgetExceeded;
  } catch (const HypothesisFailure& e) {
    err << e.what() << '\n';
    for (const auto& f : e.report().failures()) err << "hypothesis (" << f << ") fails\n";
    return kExitVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
}

}  // namespace lvl2
