#include "rf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rf/elementary.hpp"
#include "rf/errors.hpp"
#include "rf/expr.hpp"
#include "rf/integrator.hpp"
#include "rf/report_io.hpp"
#include "rf/theorems.hpp"

namespace rf::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kHumanDigits = 9;
constexpr std::size_t kMinMaxN = std::size_t{1} << 6;
constexpr std::size_t kMaxMaxN = std::size_t{1} << 26;

enum class Output { Human, Csv, Json };

struct Config {
  double tol = 1e-8;
  std::size_t max_n = std::size_t{1} << 22;
  bool max_n_given = false;
  std::string rule = "midpoint";
  Output output = Output::Human;
  std::uint64_t seed = 42;
  int jobs = 0;
};

std::string human(double v) { return io::format_g(v, kHumanDigits); }

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_max_n(std::size_t n, const char* source) {
  if (!is_pow2(n) || n < kMinMaxN || n > kMaxMaxN)
    throw InvalidArgument(std::string(source) + " must be a power of two in [2^6, 2^26]");
}

// --max-n wins over RF_MAX_N, which wins over the built-in default.
std::size_t resolve_max_n(const Config& cfg) {
  if (cfg.max_n_given) {
    check_max_n(cfg.max_n, "--max-n");
    return cfg.max_n;
  }
  if (const char* env = std::getenv("RF_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0') throw InvalidArgument("RF_MAX_N must be an integer");
    check_max_n(static_cast<std::size_t>(v), "RF_MAX_N");
    return static_cast<std::size_t>(v);
  }
  return cfg.max_n;
}

bool mentions_t(const expr::Expr& e) {
  const expr::Node& n = e.node();
  if (n.kind == expr::Node::Kind::Var) return true;
  return std::any_of(n.children.begin(), n.children.end(), mentions_t);
}

// Endpoints and eval arguments accept constant expressions such as "pi/4".
double constant_arg(const std::string& text) {
  const expr::Expr e = expr::parse(text);
  if (mentions_t(e)) throw InvalidArgument("'" + text + "' must not depend on t");
  return expr::eval_expr(e, 0.0);
}

int print_integration(const IntegrationResult& r, Output output, std::ostream& out) {
  switch (output) {
    case Output::Human:
      out << "value          " << human(r.value) << '\n'
          << "error_estimate " << human(r.error_estimate) << '\n'
          << "n_final        " << r.n_final << '\n'
          << "evaluations    " << r.evaluations << '\n'
          << "converged      " << (r.converged ? "yes" : "no") << '\n';
      break;
    case Output::Csv:
      out << "value,error_estimate,n_final,evaluations,converged\n"
          << io::format_g(r.value) << ',' << io::format_g(r.error_estimate) << ',' << r.n_final
          << ',' << r.evaluations << ',' << (r.converged ? "true" : "false") << '\n';
      break;
    case Output::Json: {
      Json j;
      j["value"] = r.value;
      j["error_estimate"] = r.error_estimate;
      j["n_final"] = r.n_final;
      j["evaluations"] = r.evaluations;
      j["converged"] = r.converged;
      out << j.dump() << '\n';
      break;
    }
  }
  return r.converged ? kOk : kNotConverged;
}

int print_reports(const std::vector<CheckReport>& reports, Output output, std::ostream& out) {
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const CheckReport& r) { return !r.pass; });
  switch (output) {
    case Output::Human: {
      std::size_t width = 4;
      for (const auto& r : reports) width = std::max(width, r.name.size());
      for (const auto& r : reports) {
        out << (r.pass ? "PASS  " : "FAIL  ") << r.name << std::string(width - r.name.size() + 2, ' ')
            << "diff " << human(r.abs_diff) << "  tol " << human(r.tol) << '\n';
      }
      out << (reports.size() - failed) << '/' << reports.size() << " checks passed\n";
      break;
    }
    case Output::Csv: out << to_csv(reports); break;
    case Output::Json: {
      Json arr = Json::array();
      for (const auto& r : reports) {
        arr.push_back({{"name", r.name},
                       {"lhs", r.lhs},
                       {"rhs", r.rhs},
                       {"abs_diff", r.abs_diff},
                       {"tol", r.tol},
                       {"pass", r.pass},
                       {"anchor", r.anchor}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
  return failed == 0 ? kOk : kVerifyFailed;
}

void print_convergence(const ConvergenceReport& rep, Output output, std::ostream& out) {
  if (output != Output::Json) {
    out << to_csv(rep);
    return;
  }
  Json rows = Json::array();
  for (const auto& r : rep.rows) rows.push_back({{"n", r.n}, {"value", r.value}, {"diff", r.diff}});
  Json j;
  j["rows"] = rows;
  j["estimated_order"] = rep.estimated_order;
  out << j.dump(2) << '\n';
}

struct EvalOutcome {
  double value;
  std::optional<double> bound;
};

EvalOutcome eval_named(const std::string& name, const std::vector<double>& args, double eps) {
  const auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw InvalidArgument("'" + name + "' takes " + std::to_string(n) + " argument" +
                            (n == 1 ? "" : "s"));
  };
  if (name == "e") {
    need(0);
    return {e_const(eps), std::nullopt};
  }
  if (name == "log") {
    need(1);
    const ApproxValue v = log_construct(args[0], eps);
    return {v.value, v.bound};
  }
  if (name == "exp") {
    need(1);
    return {exp_construct(args[0], eps), std::nullopt};
  }
  if (name == "pow") {
    need(2);
    return {pow_construct(args[0], args[1], eps), std::nullopt};
  }
  const std::pair<const char*, Hyperbolic> hyps[] = {
      {"sinh", Hyperbolic::Sinh}, {"cosh", Hyperbolic::Cosh}, {"tanh", Hyperbolic::Tanh}};
  for (const auto& [n, k] : hyps) {
    if (name != n) continue;
    need(1);
    return {hyperbolic(k, args[0]), std::nullopt};
  }
  const std::pair<const char*, InverseKind> invs[] = {
      {"arsinh", InverseKind::Arsinh}, {"arcosh", InverseKind::Arcosh},
      {"artanh", InverseKind::Artanh}, {"arcsin", InverseKind::Arcsin},
      {"arctan", InverseKind::Arctan}};
  for (const auto& [n, k] : invs) {
    if (name != n) continue;
    need(1);
    return {inverse_fn(k, args[0], eps), std::nullopt};
  }
  throw InvalidArgument("unknown function '" + name +
                        "' (expected log, exp, e, pow, sinh, cosh, tanh, arsinh, arcosh, "
                        "artanh, arcsin or arctan)");
}

int print_eval(const EvalOutcome& r, Output output, std::ostream& out) {
  switch (output) {
    case Output::Human:
      out << "value " << human(r.value) << '\n';
      if (r.bound) out << "bound " << human(*r.bound) << '\n';
      break;
    case Output::Csv:
      out << "value,bound\n"
          << io::format_g(r.value) << ',' << (r.bound ? io::format_g(*r.bound) : "") << '\n';
      break;
    case Output::Json: {
      Json j;
      j["value"] = r.value;
      j["bound"] = r.bound ? Json(*r.bound) : Json(nullptr);
      out << j.dump() << '\n';
      break;
    }
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Riemann integration and constructive elementary functions", "rf"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--tol", cfg.tol, "Tolerance (default 1e-8)")->check(CLI::PositiveNumber);
  app.add_option_function<std::size_t>(
      "--max-n", [&cfg](const std::size_t& n) { cfg.max_n = n, cfg.max_n_given = true; },
      "Largest cell count, a power of two in [2^6, 2^26] (default 2^22; env RF_MAX_N)");
  app.add_option("--rule", cfg.rule, "Tag rule: left, right or midpoint (default midpoint)")
      ->check(CLI::IsMember({"left", "right", "midpoint"}));
  app.add_option("--output", cfg.output, "human, csv or json (default human)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Output>{
              {"human", Output::Human}, {"csv", Output::Csv}, {"json", Output::Json}},
          CLI::ignore_case))
      ->option_text("{human,csv,json}");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks (default 42)");
  app.add_option("--jobs", cfg.jobs, "Worker threads for verify (default: all)")
      ->check(CLI::NonNegativeNumber);

  std::string expr_text;
  std::string a_text;
  std::string b_text;

  auto* integ = app.add_subcommand("integrate", "Integrate an expression in t over [a, b]");
  integ->fallthrough();
  integ->add_option("expr", expr_text, "Expression in t")->required();
  integ->add_option("a", a_text, "Lower limit")->required();
  integ->add_option("b", b_text, "Upper limit")->required();
  std::string improper;
  integ->add_option("--improper", improper, "Singular endpoint: lower or upper")
      ->check(CLI::IsMember({"lower", "upper"}));

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->fallthrough();
  std::string filter;
  verify->add_option("--filter", filter, "Keep checks whose name contains this");

  auto* converge = app.add_subcommand("converge", "Riemann sums on a doubling list of n");
  converge->fallthrough();
  converge->add_option("expr", expr_text, "Expression in t")->required();
  converge->add_option("a", a_text, "Lower limit")->required();
  converge->add_option("b", b_text, "Upper limit")->required();
  std::size_t n_from = 8;
  std::size_t n_to = 65536;
  std::optional<std::string> exact_text;
  converge->add_option("--n-from", n_from, "First n (default 8)")->check(CLI::PositiveNumber);
  converge->add_option("--n-to", n_to, "Last n (default 65536)")->check(CLI::PositiveNumber);
  converge->add_option("--exact", exact_text, "Exact value; diffs become errors");

  auto* eval = app.add_subcommand("eval", "Evaluate a constructive elementary function");
  eval->fallthrough();
  std::string fname;
  std::vector<std::string> eval_args;
  double eps = 1e-12;
  eval->add_option("fname", fname, "log exp e pow sinh cosh tanh arsinh arcosh artanh arcsin arctan")
      ->required();
  eval->add_option("args", eval_args, "Arguments");
  eval->add_option("--eps", eps, "Accuracy target (default 1e-12)")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    IntegratorOptions iopts;
    iopts.max_n = resolve_max_n(cfg);
    const TagRule rule = TagRule::from_name(cfg.rule);

    if (*integ) {
      const RealFn f = expr::to_function(expr::parse(expr_text));
      const double a = constant_arg(a_text);
      const double b = constant_arg(b_text);
      const IntegrationResult r =
          improper.empty()
              ? integrate(f, a, b, cfg.tol, rule, iopts)
              : integrate_improper(f, a, b,
                                   improper == "lower" ? SingularEnd::Lower : SingularEnd::Upper,
                                   cfg.tol, iopts);
      return print_integration(r, cfg.output, out);
    }
    if (*verify) {
      SuiteOptions sopts;
      sopts.jobs = cfg.jobs;
      sopts.seed = cfg.seed;
      sopts.integrator = iopts;
      return print_reports(verification_suite(cfg.tol, filter, sopts), cfg.output, out);
    }
    if (*converge) {
      if (n_from > n_to) throw InvalidArgument("--n-from must not exceed --n-to");
      const RealFn f = expr::to_function(expr::parse(expr_text));
      std::optional<double> exact;
      if (exact_text) exact = constant_arg(*exact_text);
      print_convergence(convergence_report(f, constant_arg(a_text), constant_arg(b_text), rule,
                                           doubling_list(n_from, n_to), exact),
                        cfg.output, out);
      return kOk;
    }
    std::vector<double> values;
    for (const auto& s : eval_args) values.push_back(constant_arg(s));
    return print_eval(eval_named(fname, values, eps), cfg.output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace rf::cli
