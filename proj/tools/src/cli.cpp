#include "akzeta_cli/cli.hpp"

#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "akzeta/combinatorics.hpp"
#include "akzeta/evaluator.hpp"
#include "akzeta/expression.hpp"
#include "akzeta/identities.hpp"
#include "akzeta/powerseries.hpp"

namespace akzeta::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  unsigned digits = 50;
  std::optional<long> cutoff;
  bool json = false;
  bool parallel = false;

  PrecisionContext context() const {
    PrecisionContext ctx;
    ctx.digits = digits;
    ctx.cutoff = cutoff;
    ctx.parallel = parallel;
    ctx.validate();
    return ctx;
  }
};

std::string decimal(const Real& v, unsigned digits) { return v.str(digits); }
std::string short_sci(const Real& v) { return v.str(3, std::ios_base::scientific); }

struct EvalArgs {
  std::string kind;
  std::string index;
  std::string v;
  std::string x = "0";
  std::string p = "1";
  std::string z;
  std::optional<unsigned> m;
  std::optional<unsigned> s;
};

Composition index_of(const EvalArgs& a) {
  const std::string& text = !a.v.empty() ? a.v : a.index;
  if (text.empty()) throw CLI::ValidationError("eval " + a.kind, "a composition is required (positional or --v)");
  return Composition::parse(text);
}

Evaluation evaluate(const EvalArgs& a, const PrecisionContext& ctx) {
  if (a.kind == "zeta") return eval_hurwitz_mzv(index_of(a), parse_real(a.x), ctx);
  if (a.kind == "t") return eval_t(index_of(a), ctx);
  if (a.kind == "li") {
    if (a.z.empty()) throw CLI::ValidationError("eval li", "--z is required");
    return eval_li(index_of(a), parse_real(a.z), ctx);
  }
  if (a.kind == "ak") return eval_ak_lhs(index_of(a), parse_real(a.p), a.m.value_or(0), parse_real(a.x), ctx);
  if (a.kind == "euler") {
    const unsigned s = a.s ? *a.s : a.m.value_or(0) + 1;
    return eval_euler_transform(parse_real(a.p), s, parse_real(a.x), ctx);
  }
  throw CLI::ValidationError("eval", "unknown kind '" + a.kind + "' (expected zeta, t, li, ak or euler)");
}

int cmd_eval(const EvalArgs& a, const Config& cfg, std::ostream& out) {
  const PrecisionContext ctx = cfg.context();
  ScopedPrecision scope(ctx);
  const Evaluation e = evaluate(a, ctx);
  if (cfg.json) {
    ordered_json j;
    j["kind"] = a.kind;
    j["value"] = decimal(e.value, cfg.digits);
    j["bound"] = short_sci(e.bound);
    j["bound_kind"] = std::string(to_string(e.bound_kind));
    j["method"] = e.method;
    j["cutoff"] = e.cutoff_used;
    out << j.dump() << '\n';
  } else {
    out << "value       " << decimal(e.value, cfg.digits) << '\n'
        << "bound       " << short_sci(e.bound) << " (" << to_string(e.bound_kind) << ")\n"
        << "method      " << e.method << '\n'
        << "cutoff      " << e.cutoff_used << '\n';
  }
  return kOk;
}

int cmd_dual(const std::string& literal, const Config& cfg, std::ostream& out) {
  const Composition c = Composition::parse(literal);
  const Composition d = dual(c);
  if (cfg.json) {
    ordered_json j;
    j["input"] = c.str();
    j["dual"] = d.str();
    j["weight"] = c.weight();
    j["depth"] = c.depth();
    j["dual_depth"] = d.depth();
    out << j.dump() << '\n';
  } else {
    out << d.str() << '\n' << "weight " << c.weight() << ", depth " << c.depth() << " -> " << d.depth() << '\n';
  }
  return kOk;
}

int cmd_bpoly(const std::string& v, const std::string& p, unsigned m_max, const Config& cfg, std::ostream& out) {
  const auto polys = ak_bernoulli_polys(Composition::parse(v), parse_rational(p), m_max);
  if (cfg.json) {
    ordered_json j;
    j["v"] = Composition::parse(v).str();
    j["p"] = p;
    j["polynomials"] = ordered_json::array();
    for (const auto& poly : polys) j["polynomials"].push_back(poly.str());
    out << j.dump() << '\n';
  } else {
    for (std::size_t m = 0; m < polys.size(); ++m) out << "m=" << m << "  " << polys[m].str() << '\n';
  }
  return kOk;
}

struct VerifyArgs {
  std::string selector;
  bool all = false;
  std::string cls;
  std::string alpha, p, x, z, t;
  std::optional<unsigned> m, q, r;

  bool has_params() const {
    return !alpha.empty() || !p.empty() || !x.empty() || !z.empty() || !t.empty() || m || q || r;
  }

  ParamSet params() const {
    ParamSet ps;
    if (!alpha.empty()) ps.alpha = Composition::parse(alpha);
    ps.m = m;
    if (!p.empty()) ps.p = p;
    if (!x.empty()) ps.x = parse_rational(x);
    ps.q = q;
    ps.r = r;
    if (!z.empty()) ps.z = parse_rational(z);
    if (!t.empty()) ps.t = parse_rational(t);
    return ps;
  }
};

ordered_json report_json(const IdentityReport& rep, unsigned digits) {
  ordered_json j;
  j["id"] = rep.id;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : rep.params.entries()) params[k] = v;
  j["params"] = params;
  j["lhs"] = decimal(rep.lhs.value, digits);
  j["rhs"] = decimal(rep.rhs.value, digits);
  j["abs_diff"] = short_sci(rep.abs_diff);
  j["bound"] = short_sci(rep.bound);
  j["bound_kind"] = std::string(to_string(rep.bound_kind));
  j["tolerance_class"] = std::string(to_string(rep.tolerance.cls));
  j["tolerance"] = rep.tolerance.value;
  j["pass"] = rep.pass;
  j["seconds"] = rep.seconds;
  return j;
}

void print_report(const IdentityReport& rep, std::ostream& out) {
  std::ostringstream time;
  time << std::fixed << std::setprecision(2) << rep.seconds << 's';
  out << (rep.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(12) << rep.id << std::setw(28) << rep.params.str()
      << " |diff| " << short_sci(rep.abs_diff) << "  bound " << short_sci(rep.bound) << " ("
      << to_string(rep.bound_kind) << ")  tol " << rep.tolerance.value << "  " << time.str() << '\n';
}

int cmd_verify(const VerifyArgs& a, const Config& cfg, std::ostream& out) {
  if (a.all == !a.selector.empty())
    throw CLI::ValidationError("verify", "give exactly one of an identity id or --all");
  std::optional<ToleranceClass> cls;
  if (!a.cls.empty()) {
    cls = parse_tolerance_class(a.cls);
    if (!cls) throw CLI::ValidationError("--class", "expected exact, rigorous or estimated");
  }

  const PrecisionContext ctx = cfg.context();
  ScopedPrecision scope(ctx);

  VerifySummary summary;
  if (a.has_params()) {
    if (a.all) throw CLI::ValidationError("verify", "explicit parameters need an identity id");
    const ParamSet ps = a.params();
    summary.worst_abs_diff = 0;
    for (const auto* c : select_identities(a.selector)) {
      if (cls && c->tolerance(ps).cls != *cls) continue;
      auto rep = verify(*c, ps, ctx);
      (rep.pass ? summary.passed : summary.failed)++;
      if (rep.bound_kind != BoundKind::exact && rep.abs_diff > summary.worst_abs_diff) {
        summary.worst_abs_diff = rep.abs_diff;
        summary.worst_case = rep.id + " " + rep.params.str();
      }
      summary.reports.push_back(std::move(rep));
    }
  } else {
    const unsigned threads = cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
    summary = verify_all({a.all ? std::string() : a.selector, cls}, ctx, threads);
  }

  for (const auto& rep : summary.reports) {
    if (cfg.json) out << report_json(rep, cfg.digits).dump() << '\n';
    else print_report(rep, out);
  }
  if (!cfg.json) {
    out << summary.passed << " passed, " << summary.failed << " failed";
    if (!summary.worst_case.empty())
      out << "; worst |diff| " << short_sci(summary.worst_abs_diff) << " at " << summary.worst_case;
    out << '\n';
  }
  return summary.failed == 0 ? kOk : kVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple zeta values, Bell-weighted beta sums and identity checks", "akzeta"};
  app.require_subcommand(1);

  Config cfg;
  app.add_option("--precision", cfg.digits, "Working precision in decimal digits")->check(CLI::Range(15u, 100000u));
  app.add_option("--cutoff", cfg.cutoff, "Force the series cutoff N")->check(CLI::PositiveNumber);
  app.add_flag("--json", cfg.json, "Machine-readable output (JSON lines)");
  app.add_flag("--parallel", cfg.parallel, "Parallel nested sums and identity checks");

  std::string dual_literal;
  auto* dual_cmd = app.add_subcommand("dual", "Dual of an admissible composition");
  dual_cmd->add_option("composition", dual_literal, "Composition literal, e.g. 1,2")->required();

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a series");
  eval_cmd->add_option("kind", ev.kind, "zeta | t | li | ak | euler")->required();
  eval_cmd->add_option("index", ev.index, "Composition literal");
  eval_cmd->add_option("--v,--alpha", ev.v, "Composition literal");
  eval_cmd->add_option("--x", ev.x, "Shift x (expression)");
  eval_cmd->add_option("--p", ev.p, "Geometric parameter p (expression)");
  eval_cmd->add_option("--z", ev.z, "Polylogarithm argument (expression)");
  eval_cmd->add_option("--m", ev.m, "Bell order m");
  eval_cmd->add_option("--s", ev.s, "Harmonic order s for euler (default m+1)");

  std::string bp_v = "1", bp_p = "1";
  unsigned bp_m = 4;
  auto* bpoly_cmd = app.add_subcommand("bpoly", "Generalized Bernoulli polynomials B_m(x) for m = 0..M");
  bpoly_cmd->add_option("--v,--alpha", bp_v, "Polylogarithm index");
  bpoly_cmd->add_option("--p", bp_p, "Rational p >= 1");
  bpoly_cmd->add_option("--m", bp_m, "Largest m");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Verify catalog identities");
  verify_cmd->add_option("id", va.selector, "Identity id or id prefix");
  verify_cmd->add_flag("--all", va.all, "Verify the whole catalog");
  verify_cmd->add_option("--class", va.cls, "Only exact, rigorous or estimated cases");
  verify_cmd->add_option("--alpha,--v", va.alpha, "Override: composition");
  verify_cmd->add_option("--m", va.m, "Override: m");
  verify_cmd->add_option("--p", va.p, "Override: p (expression)");
  verify_cmd->add_option("--x", va.x, "Override: rational x");
  verify_cmd->add_option("--q", va.q, "Override: q");
  verify_cmd->add_option("--r", va.r, "Override: r");
  verify_cmd->add_option("--z", va.z, "Override: rational z");
  verify_cmd->add_option("--t", va.t, "Override: rational t");

  auto* list_cmd = app.add_subcommand("list", "List catalog identities");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
    if (*dual_cmd) return cmd_dual(dual_literal, cfg, out);
    if (*eval_cmd) return cmd_eval(ev, cfg, out);
    if (*bpoly_cmd) return cmd_bpoly(bp_v, bp_p, bp_m, cfg, out);
    if (*verify_cmd) return cmd_verify(va, cfg, out);
    if (*list_cmd) {
      for (const auto& c : catalog()) {
        if (cfg.json) {
          ordered_json j;
          j["id"] = c.id;
          j["statement"] = c.statement;
          j["lhs"] = c.lhs.operation;
          j["rhs"] = c.rhs.operation;
          j["cases"] = c.grid.size();
          out << j.dump() << '\n';
        } else {
          out << std::left << std::setw(12) << c.id << c.statement << '\n';
        }
      }
      return kOk;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const UnknownIdentity& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"akzeta"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace akzeta::cli
