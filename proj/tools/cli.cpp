#include "cli.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "crossbessel/criterion.hpp"
#include "crossbessel/cross_product.hpp"
#include "crossbessel/errors.hpp"
#include "crossbessel/specfun.hpp"
#include "crossbessel/verify.hpp"
#include "crossbessel/zero_cache.hpp"
#include "crossbessel/zeros.hpp"
#include "json.hpp"

namespace crossbessel::cli {

namespace {

using nlohmann::json;

enum class Format { Json, Csv, Human };

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "human") return Format::Human;
  throw DomainError("unknown format '" + s + "'");
}

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string scalar_text(const json& v) {
  if (v.is_number_float()) return num(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Flat objects become key,value rows; anything nested is dumped in place.
void emit_flat(const json& doc, Format fmt, std::ostream& out) {
  if (fmt == Format::Json) {
    out << doc.dump(2) << '\n';
    return;
  }
  if (fmt == Format::Csv) {
    out << "key,value\n";
    for (const auto& [k, v] : doc.items()) out << k << ',' << scalar_text(v) << '\n';
    return;
  }
  for (const auto& [k, v] : doc.items()) out << k << ": " << scalar_text(v) << '\n';
}

json eval_json(const EvalResult& r) {
  return {{"value", r.value},
          {"abs_error_estimate", r.abs_error_estimate},
          {"terms_used", r.terms_used},
          {"cancellation_flag", r.cancellation_flag}};
}

struct Options {
  std::string format = "json";
  // eval
  std::string fn;
  double nu = 0.0;
  std::optional<double> x;
  std::optional<double> re;
  std::optional<double> im;
  double rel_tol = 1e-15;
  int max_terms = 200;
  // coeffs
  std::string coeff_kind = "cross";
  std::optional<double> mu;
  int depth = kDefaultDiskDepth;
  // zeros
  std::string zero_kind = "j";
  int n = 5;
  double tol = kDefaultZeroTol;
  std::optional<std::string> cache_dir;
  bool no_cache = false;
  // criterion
  std::string which = "cross";
  std::string method = "closed";
  // solve
  std::string equation = "th1-paper";
  double lo = -0.99;
  double hi = -0.5;
  double solve_tol = kDefaultThresholdTol;
  // verify
  std::string suite = "all";
  // report
  std::string report = "sums";
  double step = 0.01;
};

int cmd_eval(const Options& o, std::ostream& out) {
  const Order nu(o.nu);
  SeriesControl ctl{o.rel_tol, o.max_terms};
  ctl.validate();
  json doc;
  if (o.fn == "f1" || o.fn == "f2") {
    if (!o.re && !o.x) throw DomainError("--re (or --x) is required for " + o.fn);
    const std::complex<double> t(o.re ? *o.re : *o.x, o.im.value_or(0.0));
    const CoefficientTable table =
        o.fn == "f1" ? cross_coefficients(nu, o.depth) : product_coefficients(nu, o.depth);
    const std::complex<double> f = f_eval(table, t);
    const std::complex<double> ld = f_log_derivative(table, t);
    doc = {{"re", f.real()},       {"im", f.imag()},           {"depth", table.depth()},
           {"t_re", t.real()},     {"t_im", t.imag()},         {"log_derivative_re", ld.real()},
           {"log_derivative_im", ld.imag()}};
  } else {
    if (!o.x) throw DomainError("--x is required for " + o.fn);
    const double x = *o.x;
    EvalResult r;
    if (o.fn == "J") {
      r = bessel_j(nu, x, ctl);
    } else if (o.fn == "I") {
      r = bessel_i(nu, x, ctl);
    } else if (o.fn == "phi") {
      r = phi_series(nu, x, ctl);
    } else if (o.fn == "phi-prime") {
      r = phi_prime(nu, x, ctl);
    } else {
      throw DomainError("unknown function '" + o.fn + "'");
    }
    doc = eval_json(r);
  }
  doc["fn"] = o.fn;
  doc["nu"] = o.nu;
  if (o.x) doc["x"] = *o.x;
  emit_flat(doc, format_from_string(o.format), out);
  return kOk;
}

int cmd_coeffs(const Options& o, std::ostream& out) {
  const Order nu(o.nu);
  CoefficientTable table;
  if (o.coeff_kind == "cross") {
    table = cross_coefficients(nu, o.depth);
  } else if (o.coeff_kind == "product") {
    table = product_coefficients(nu, o.depth);
  } else if (o.coeff_kind == "general") {
    if (!o.mu) throw DomainError("--mu is required for general coefficients");
    table = pi_general(*o.mu, nu, o.depth);
  } else {
    throw DomainError("unknown coefficient kind '" + o.coeff_kind + "'");
  }
  const Format fmt = format_from_string(o.format);
  if (fmt == Format::Json) {
    json doc = {{"kind", std::string(to_string(table.kind))},
                {"nu", o.nu},
                {"depth", table.depth()},
                {"coeffs", table.coeffs}};
    if (table.mu) doc["mu"] = *table.mu;
    out << doc.dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    out << "k,coefficient\n";
    for (std::size_t k = 0; k < table.coeffs.size(); ++k) out << k << ',' << num(table.coeffs[k]) << '\n';
  } else {
    for (std::size_t k = 0; k < table.coeffs.size(); ++k)
      out << "c[" << k << "] = " << num(table.coeffs[k]) << '\n';
  }
  return kOk;
}

int cmd_zeros(const Options& o, std::ostream& out, std::ostream& err) {
  const Order nu(o.nu);
  const ZeroKind kind = zero_kind_from_string(o.zero_kind);
  if (o.n < 1) throw DomainError("--n must be at least 1");
  ZeroTable table;
  if (o.no_cache) {
    table = kind == ZeroKind::J ? j_zeros(nu, o.n, o.tol) : gamma_zeros(nu, o.n, o.tol);
  } else {
    ZeroCache cache(ZeroCache::resolve_dir(o.cache_dir));
    table = kind == ZeroKind::J ? cache.j_zeros(nu, o.n, o.tol) : cache.gamma_zeros(nu, o.n, o.tol);
    err << "cache: " << cache.path_for(kind, nu, o.tol).string() << '\n';
  }
  table.zeros.resize(o.n);
  table.brackets.resize(o.n);
  const Format fmt = format_from_string(o.format);
  if (fmt == Format::Json) {
    out << to_json(table).dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    out << to_csv(table);
  } else {
    for (std::size_t i = 1; i <= table.size(); ++i)
      out << to_string(kind) << "[" << i << "] = " << num(table[i]) << "  in ["
          << num(table.brackets[i - 1].lo) << ", " << num(table.brackets[i - 1].hi) << "]\n";
  }
  return kOk;
}

int cmd_criterion(const Options& o, std::ostream& out) {
  const Order nu(o.nu);
  const SumKind which = sum_kind_from_string(o.which);
  const SumMethod method = sum_method_from_string(o.method);
  CriterionReport r;
  if (method == SumMethod::Direct) {
    r = which == SumKind::Cross ? s1_direct(nu, o.n) : s2_direct(nu, o.n);
  } else {
    r = which == SumKind::Cross ? s1_closed(nu) : s2_closed(nu);
  }
  emit_flat(to_json(r), format_from_string(o.format), out);
  return kOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const ThresholdResult r = solve_threshold(equation_from_string(o.equation), {o.lo, o.hi}, o.solve_tol);
  json doc = to_json(r);
  const Format fmt = format_from_string(o.format);
  if (fmt != Format::Json) {
    doc.erase("bracket");
    doc["bracket_lo"] = r.bracket.lo;
    doc["bracket_hi"] = r.bracket.hi;
  }
  emit_flat(doc, fmt, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const std::vector<Check> checks = run_verification(suite_from_string(o.suite));
  const bool ok = all_passed(checks);
  json th2;
  for (const Check& c : checks)
    if (c.informational) th2 = c.detail;
  if (th2.is_null()) th2 = to_json(compare_th2());
  const Format fmt = format_from_string(o.format);
  if (fmt == Format::Json) {
    json doc = to_json(checks);
    doc["th2_comparison"] = th2;
    doc["suite"] = o.suite;
    out << doc.dump(2) << '\n';
  } else if (fmt == Format::Csv) {
    out << "suite,name,status\n";
    for (const Check& c : checks)
      out << c.suite << ",\"" << c.name << "\","
          << (c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL")) << '\n';
  } else {
    for (const Check& c : checks)
      out << (c.informational ? "INFO" : (c.passed ? "PASS" : "FAIL")) << "  " << c.suite << ": "
          << c.name << "  " << c.detail.dump() << '\n';
    out << "th2 comparison: " << th2.dump() << '\n';
  }
  if (!ok) {
    for (const Check& c : checks)
      if (!c.passed && !c.informational) err << "FAIL " << c.suite << ": " << c.name << '\n';
  }
  return ok ? kOk : kVerificationFailed;
}

// Plot-ready CSV only.
int cmd_report(const Options& o, std::ostream& out) {
  const std::vector<double> grid = order_grid(o.lo, o.hi, o.step);
  std::ostringstream body;
  if (o.report == "sums") {
    const double pole1 = unit_first_zero_order(SumKind::Cross);
    const double pole2 = unit_first_zero_order(SumKind::Product);
    body << "nu,s1_closed,s2_closed,th1_residual,th2_residual\n";
    for (double v : grid) {
      const Order nu(v);
      auto cell = [](auto f) -> std::string {
        try {
          return num(f());
        } catch (const Error&) {
          return "nan";
        }
      };
      body << num(v) << ','
           << (v > pole1 ? cell([&] { return s1_closed(nu).sum_value; }) : std::string("nan")) << ','
           << (v > pole2 ? cell([&] { return s2_closed(nu).sum_value; }) : std::string("nan")) << ','
           << cell([&] { return theorem1_residual(nu); }) << ','
           << cell([&] { return theorem2_residual(nu); }) << '\n';
    }
  } else if (o.report == "zeros") {
    if (o.n < 1) throw DomainError("--n must be at least 1");
    body << "nu";
    for (int k = 1; k <= o.n; ++k) body << ",j_" << k << ",gamma_" << k;
    body << '\n';
    for (double v : grid) {
      const Order nu(v);
      const ZeroTable j = j_zeros(nu, o.n);
      const ZeroTable g = gamma_zeros(nu, o.n);
      body << num(v);
      for (int k = 1; k <= o.n; ++k) body << ',' << num(j[k]) << ',' << num(g[k]);
      body << '\n';
    }
  } else if (o.report == "phi") {
    const Order nu(o.nu);
    body << "z,phi,phi_prime\n";
    for (double z : grid) {
      body << num(z) << ',' << num(phi_series(nu, z).value) << ',' << num(phi_prime(nu, z).value)
           << '\n';
    }
  } else {
    throw DomainError("unknown report '" + o.report + "'");
  }
  out << body.str();
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Cross-product of Bessel functions: evaluation, zeros, univalence thresholds"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", "crossbessel 1.0.0");
  const std::vector<std::string> formats{"json", "csv", "human"};
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
  };

  auto* eval = app.add_subcommand("eval", "Evaluate J, I, phi, phi', or the disk functions f1/f2");
  eval->add_option("--fn", o.fn, "Function")
      ->required()
      ->check(CLI::IsMember({"J", "I", "phi", "phi-prime", "f1", "f2"}));
  eval->add_option("--nu", o.nu, "Order")->required();
  eval->add_option("--x", o.x, "Real argument");
  eval->add_option("--re", o.re, "Real part of t (f1, f2)");
  eval->add_option("--im", o.im, "Imaginary part of t (f1, f2)");
  eval->add_option("--rel-tol", o.rel_tol, "Series stopping tolerance");
  eval->add_option("--max-terms", o.max_terms, "Series term cap");
  eval->add_option("--depth", o.depth, "Coefficient depth for f1/f2");
  add_format(eval);

  auto* coeffs = app.add_subcommand("coeffs", "Power-series coefficient tables");
  coeffs->add_option("--kind", o.coeff_kind, "cross, product or general")
      ->check(CLI::IsMember({"cross", "product", "general"}));
  coeffs->add_option("--nu", o.nu, "Order")->required();
  coeffs->add_option("--mu", o.mu, "Second order (general)");
  coeffs->add_option("--depth", o.depth, "Number of coefficients");
  add_format(coeffs);

  auto* zeros = app.add_subcommand("zeros", "Zero tables of J_nu or Phi_nu");
  zeros->add_option("--kind", o.zero_kind, "j or gamma")->check(CLI::IsMember({"j", "gamma"}));
  zeros->add_option("--nu", o.nu, "Order")->required();
  zeros->add_option("--n", o.n, "Number of zeros");
  zeros->add_option("--tol", o.tol, "Refinement tolerance");
  zeros->add_option("--cache-dir", o.cache_dir, "Cache directory");
  zeros->add_flag("--no-cache", o.no_cache, "Bypass the cache");
  add_format(zeros);

  auto* crit = app.add_subcommand("criterion", "Univalence sums S1 (cross) and S2 (product)");
  crit->add_option("--which", o.which, "cross or product")->check(CLI::IsMember({"cross", "product"}));
  crit->add_option("--nu", o.nu, "Order")->required();
  crit->add_option("--method", o.method, "direct or closed")->check(CLI::IsMember({"direct", "closed"}));
  crit->add_option("--n", o.n, "Zeros used by the direct method");
  add_format(crit);

  auto* solve = app.add_subcommand("solve", "Solve a threshold equation by bisection");
  solve->add_option("--equation", o.equation, "Equation")
      ->check(CLI::IsMember({"th1-paper", "th1-sum", "th2-paper", "th2-sum"}));
  solve->add_option("--lo", o.lo, "Bracket lower end");
  solve->add_option("--hi", o.hi, "Bracket upper end");
  solve->add_option("--tol", o.solve_tol, "Root tolerance");
  add_format(solve);

  auto* verify = app.add_subcommand("verify", "Run the self-verification suites");
  verify->add_option("--suite", o.suite, "Suite")
      ->check(CLI::IsMember({"all", "series", "zeros", "jacobi", "criterion", "starlike"}));
  add_format(verify);

  auto* report = app.add_subcommand("report", "Plot-ready CSV");
  report->add_option("--what", o.report, "sums, zeros or phi")
      ->check(CLI::IsMember({"sums", "zeros", "phi"}));
  report->add_option("--lo", o.lo, "Grid start");
  report->add_option("--hi", o.hi, "Grid end");
  report->add_option("--step", o.step, "Grid step");
  report->add_option("--n", o.n, "Zeros per order (zeros report)");
  report->add_option("--nu", o.nu, "Order (phi report)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "eval") return cmd_eval(o, out);
    if (name == "coeffs") return cmd_coeffs(o, out);
    if (name == "zeros") return cmd_zeros(o, out, err);
    if (name == "criterion") return cmd_criterion(o, out);
    if (name == "solve") return cmd_solve(o, out);
    if (name == "verify") return cmd_verify(o, out, err);
    if (name == "report") return cmd_report(o, out);
  } catch (const NonConvergenceError& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const InsufficientDepthError& e) {
    err << "non-convergence: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const StructuralError& e) {
    err << "structural failure: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace crossbessel::cli
