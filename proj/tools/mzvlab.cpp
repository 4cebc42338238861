#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "mzvlab/expr.hpp"
#include "mzvlab/hopf.hpp"
#include "mzvlab/json_io.hpp"
#include "mzvlab/maps.hpp"
#include "mzvlab/qseries.hpp"
#include "mzvlab/suites.hpp"

using namespace mzv;

namespace {

struct Common {
  std::string alphabet = "H";
  std::string lambda = "1";
  std::string format = "auto";
  bool json = false;
};

// Errors in user input (bad expression, unknown name, domain violations).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

WordFormat parse_format(const std::string& s) {
  if (s == "auto") return WordFormat::Auto;
  if (s == "letters") return WordFormat::Letters;
  if (s == "z") return WordFormat::Z;
  throw UsageError("unknown format '" + s + "' (use auto, letters or z)");
}

ParseContext context(const Common& c) {
  ParseContext ctx;
  ctx.alphabet = parse_alphabet(c.alphabet);
  try {
    ctx.lambda = parse_rational(c.lambda);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid --lambda '" + c.lambda + "'");
  }
  return ctx;
}

void print_poly(const Poly& p, const Common& c) {
  if (c.json) {
    std::cout << poly_to_json(p).dump() << '\n';
  } else {
    std::cout << format_poly(p, parse_format(c.format)) << '\n';
  }
}

void add_common(CLI::App* sub, Common& c, bool with_lambda = true) {
  sub->add_option("--alphabet,-a", c.alphabet, "h (x0,x1), H (p,y) or pdy")->capture_default_str();
  if (with_lambda) sub->add_option("--lambda,-l", c.lambda, "rational parameter")->capture_default_str();
  sub->add_option("--format", c.format, "auto, letters or z")->capture_default_str();
  sub->add_flag("--json", c.json, "machine-readable output");
}

int run_product(const Common& c, const std::string& expr) {
  print_poly(parse_expr(expr, context(c)), c);
  return 0;
}

int run_map(const Common& c, const std::string& name, const std::string& expr) {
  const NamedMap m = named_map(name);
  ParseContext ctx = context(c);
  ctx.alphabet = m.domain;
  print_poly(m.apply(parse_expr(expr, ctx)), c);
  return 0;
}

int run_coproduct(const Common& c, const std::string& kind, const std::string& expr) {
  const ParseContext ctx = context(c);
  const Poly p = parse_expr(expr, ctx);
  Tensor2 t(ctx.alphabet);
  if (kind == "deconcat") {
    t = deconcat(p);
  } else if (kind == "square-op") {
    t = coproduct_square_op(p);
  } else if (kind == "infinitesimal") {
    t = infinitesimal_coproduct(p.alphabet() == Alphabet::PY ? p.relabel(Alphabet::PDY) : p);
  } else if (kind == "antipode") {
    print_poly(ctx.alphabet == Alphabet::H2 ? antipode_classical(p) : antipode(p, ctx.lambda), c);
    return 0;
  } else {
    throw UsageError("unknown coproduct '" + kind + "' (use deconcat, square-op, infinitesimal or antipode)");
  }
  if (c.json) {
    std::cout << tensor_to_json(t).dump() << '\n';
  } else {
    std::cout << t.to_string() << '\n';
  }
  return 0;
}

struct QevalArgs {
  std::string model = "SZ";
  std::string comp;
  std::string expr;
  int order = 20;
  bool rota_baxter = false;
  bool classical = false;
  long cutoff = 100000;
  bool limit = false;
};

int run_qeval(const Common& c, const QevalArgs& a) {
  if (a.classical) {
    if (a.comp.empty()) throw UsageError("--classical needs --comp");
    const FloatEstimate e = zeta_classical_float(parse_composition(a.comp), a.cutoff);
    if (c.json) {
      std::cout << float_estimate_to_json(e).dump() << '\n';
    } else {
      std::printf("%.12Lf +%.3Le\n", e.value, e.error_bound);
    }
    return 0;
  }
  const Model model = parse_model(a.model);
  if (a.limit) {
    if (a.comp.empty()) throw UsageError("--limit needs --comp");
    const LimitReport r = limit_scaling_check(model, parse_composition(a.comp));
    if (c.json) {
      Json samples = Json::array();
      for (const auto& s : r.samples) samples.push_back({{"q", s.q}, {"scaled", s.scaled}});
      std::cout << Json{{"samples", samples}, {"target", r.target}}.dump() << '\n';
    } else {
      for (const auto& s : r.samples) std::printf("q=%.2f  %.6f\n", s.q, s.scaled);
      std::printf("target %.6f\n", r.target);
    }
    return 0;
  }
  QPoly q(a.order);
  if (!a.comp.empty() && !a.expr.empty()) throw UsageError("give either --comp or an expression");
  if (!a.comp.empty()) {
    const Composition comp = parse_composition(a.comp);
    if (a.rota_baxter) {
      if (model != Model::OOZ) throw UsageError("--rota-baxter is only available for OOZ");
      q = rota_baxter_eval_ooz(comp, a.order);
    } else {
      q = zeta_q(model, comp, a.order);
    }
  } else if (!a.expr.empty()) {
    ParseContext ctx = context(c);
    ctx.alphabet = model == Model::BZ ? Alphabet::H2 : Alphabet::PY;
    q = eval_word(model, parse_expr(a.expr, ctx), a.order);
  } else {
    throw UsageError("qeval needs --comp or an expression");
  }
  if (c.json) {
    std::cout << qpoly_to_json(q).dump() << '\n';
  } else {
    std::cout << q.to_string() << '\n';
  }
  return 0;
}

int run_verify(const Common& c, const std::string& suite, const std::vector<std::string>& skip,
               const SuiteOptions& opts) {
  suite_description(suite);  // rejects unknown names before any work
  for (const auto& s : skip) suite_description(s);
  std::vector<std::string> names{suite};
  if (suite == "all") {
    names = suite_names();
    names.pop_back();
  }
  std::erase_if(names, [&](const std::string& n) { return std::find(skip.begin(), skip.end(), n) != skip.end(); });
  bool ok = true;
  Json reports = Json::array();
  for (const std::string& name : names) {
    const SuiteReport r = run_suite(name, opts);
    ok = ok && r.passed();
    if (c.json) {
      reports.push_back(report_to_json(r));
      continue;
    }
    std::printf("%-28s %6zu cases  %4zu failed  %7.2fs\n", name.c_str(), r.cases, r.failures.size(), r.seconds);
    for (const Failure& f : r.failures) {
      std::printf("  FAIL #%zu %s\n", f.index, f.input.dump().c_str());
      if (!f.detail.empty()) std::printf("    %s\n", f.detail.c_str());
    }
  }
  if (c.json) std::cout << Json{{"passed", ok}, {"suites", reports}}.dump(2) << '\n';
  return ok ? 0 : 1;
}

int run_export(const std::string& suite, const SuiteOptions& opts, const std::string& path) {
  std::size_t n = 0;
  if (path.empty() || path == "-") {
    n = export_vectors(suite, opts, std::cout);
  } else {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    n = export_vectors(suite, opts, out);
    std::cerr << "wrote " << n << " records to " << path << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word algebras, Hopf structures and q-analogues of multiple zeta values"};
  app.require_subcommand(1);
  Common common;

  std::string expr;
  auto* product = app.add_subcommand("product", "evaluate an expression with products");
  add_common(product, common);
  product->add_option("expr", expr, "expression, e.g. \"z{2} * z{2}\"")->required();

  std::string map_name;
  auto* map = app.add_subcommand("map", "apply a named linear map");
  add_common(map, common, false);
  map->add_option("--name,-n", map_name, "one of: " + [] {
    std::string s;
    for (const auto& n : map_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();
  map->add_option("expr", expr, "argument")->required();

  std::string kind = "deconcat";
  auto* coproduct = app.add_subcommand("coproduct", "coproducts and antipodes");
  add_common(coproduct, common);
  coproduct->add_option("--kind,-k", kind, "deconcat, square-op, infinitesimal or antipode")->capture_default_str();
  coproduct->add_option("expr", expr, "argument")->required();

  QevalArgs q;
  auto* qeval = app.add_subcommand("qeval", "truncated q-series of a model");
  add_common(qeval, common);
  qeval->add_option("--model,-m", q.model, "SZ, SZstar, BZ or OOZ")->capture_default_str();
  qeval->add_option("--comp,-c", q.comp, "composition, e.g. \"(2,1)\"");
  qeval->add_option("--order,-N", q.order, "truncation order")->capture_default_str()->check(CLI::PositiveNumber);
  qeval->add_flag("--rota-baxter", q.rota_baxter, "OOZ via the Rota-Baxter operator");
  qeval->add_flag("--classical", q.classical, "classical value by partial sums with a tail bound");
  qeval->add_option("--cutoff", q.cutoff, "partial sum cutoff for --classical")->capture_default_str();
  qeval->add_flag("--limit", q.limit, "(1-q)^weight scaling diagnostic");
  qeval->add_option("expr", q.expr, "word expression instead of --comp");

  std::string suite;
  SuiteOptions opts;
  auto add_suite_opts = [&](CLI::App* sub) {
    sub->add_option("--suite,-s", suite, "suite name or 'all'")->required();
    sub->add_option("--max-weight,-w", opts.max_weight, "enumeration bound")->capture_default_str()->check(
        CLI::NonNegativeNumber);
    sub->add_option("--order,-N", opts.order, "q-series order")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--threads,-j", opts.threads, "workers (default: MZV_LAB_THREADS or all cores)");
  };
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_suite_opts(verify);
  verify->add_flag("--json", common.json, "machine-readable report");
  std::vector<std::string> skip;
  verify->add_option("--skip", skip, "suites to leave out of 'all'");

  std::string out_path;
  auto* exporter = app.add_subcommand("export-vectors", "write a suite's cases as JSON lines");
  add_suite_opts(exporter);
  exporter->add_option("--out,-o", out_path, "output file (default stdout)");

  auto* list = app.add_subcommand("suites", "list suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*product) return run_product(common, expr);
    if (*map) return run_map(common, map_name, expr);
    if (*coproduct) return run_coproduct(common, kind, expr);
    if (*qeval) return run_qeval(common, q);
    if (*verify) return run_verify(common, suite, skip, opts);
    if (*exporter) return run_export(suite, opts, out_path);
    if (*list) {
      for (const auto& n : suite_names()) std::cout << n << "  " << suite_description(n) << '\n';
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
