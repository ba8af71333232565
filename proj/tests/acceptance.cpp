// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "akzeta/combinatorics.hpp"
#include "akzeta/evaluator.hpp"
#include "akzeta/identities.hpp"
#include "akzeta/numerics.hpp"
#include "support.hpp"

using namespace akzeta;
using oracle::pi;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string sci(const Real& v) { return v.str(3, std::ios_base::scientific); }

PrecisionContext default_ctx() {
  PrecisionContext ctx;
  ctx.digits = 50;
  return ctx;
}

/// Runs a catalog selection and checks every report with `extra`.
Outcome catalog_check(const std::string& selector, const std::function<bool(const IdentityReport&)>& extra) {
  const auto summary = verify_all({selector, std::nullopt}, default_ctx());
  Real worst_diff = 0, worst_bound = 0;
  bool ok = summary.failed == 0 && !summary.reports.empty();
  for (const auto& r : summary.reports) {
    ok = ok && r.pass && extra(r);
    worst_diff = std::max(worst_diff, r.abs_diff);
    worst_bound = std::max(worst_bound, r.bound);
  }
  std::ostringstream d;
  d << summary.reports.size() << " cases, " << summary.failed << " failed, max |diff| " << sci(worst_diff)
    << ", max bound " << sci(worst_bound);
  return {ok, d.str()};
}

Outcome duality_involution() {
  std::size_t count = 0;
  bool ok = true;
  for (unsigned w = 2; w <= 12; ++w) {
    for (const auto& c : admissible_compositions(w)) {
      const auto d = dual(c);
      ok = ok && dual(d) == c && d.weight() == c.weight() && c.depth() + d.depth() == c.weight() &&
           d == oracle::dual_by_words(c);
      ++count;
    }
  }
  return {ok, std::to_string(count) + " compositions"};
}

Outcome apery() {
  const auto ctx = default_ctx();
  const auto rep = verify("APERY", ParamSet{}, ctx);
  const Real reference = 7 * zeta_em(Real(3), Real(0), ctx).value;
  const Real err = abs(rep.lhs.value - reference);
  const bool ok = rep.pass && err <= Real("1e-6") && abs(reference - 7 * oracle::zeta(3)) < Real("1e-40");
  return {ok, "sum " + rep.lhs.value.str(20) + " vs 7 zeta(3) " + reference.str(20) + ", |diff| " + sci(err)};
}

Outcome cor4() {
  const auto ctx = default_ctx();
  bool ok = true;
  Real worst = 0;
  for (unsigned q = 1; q <= 3; ++q) {
    ParamSet ps;
    ps.q = q;
    ps.m = 0;
    const auto r = verify("COR4_M0", ps, ctx);
    ok = ok && r.pass && r.abs_diff <= Real("1e-6");
    worst = std::max(worst, r.abs_diff);
    if (q == 1) {
      const Real err = abs(r.lhs.value - pi() * pi() / 8);
      ok = ok && err <= Real("1e-6") && abs(r.rhs.value - pi() * pi() / 8) <= Real("1e-6");
    }
  }
  for (unsigned q = 1; q <= 2; ++q) {
    ParamSet ps;
    ps.q = q;
    ps.m = 1;
    const auto r = verify("COR4_M1", ps, ctx);
    ok = ok && r.pass && r.abs_diff <= Real("1e-6");
    worst = std::max(worst, r.abs_diff);
  }
  return {ok, "5 cases and t(2) = pi^2/8, max |diff| " + sci(worst)};
}

Outcome arcsin_table() {
  const auto ctx = default_ctx();
  struct Row {
    const char* p;
    Real closed;
    double tol;
    BoundKind kind;
  };
  const Real pi2 = pi() * pi();
  const Row rows[] = {{"4", pi2 / 36, 1e-10, BoundKind::rigorous},
                      {"2", pi2 / 16, 1e-8, BoundKind::estimated},
                      {"8+4*sqrt(3)", pi2 / 144, 1e-10, BoundKind::rigorous}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& row : rows) {
    ParamSet ps;
    ps.p = row.p;
    const auto r = verify("ARCSIN", ps, ctx);
    const Real err = abs(r.lhs.value - row.closed);
    ok = ok && r.pass && err <= Real(row.tol) && r.lhs.bound_kind == row.kind;
    d << (d.tellp() > 0 ? "; " : "") << "p=" << row.p << " |diff| " << sci(err);
  }
  return {ok, d.str()};
}

Outcome eq62() {
  const auto ctx = default_ctx();
  bool ok = true;
  Real worst = 0;
  for (const auto& x : {Rational(0), Rational(-1, 2)}) {
    for (unsigned m = 0; m <= 2; ++m) {
      ParamSet ps;
      ps.p = "3";
      ps.m = m;
      ps.x = x;
      const auto r = verify("EQ62", ps, ctx);
      ok = ok && r.pass && r.abs_diff <= Real("1e-8");
      worst = std::max(worst, r.abs_diff);
    }
  }
  return {ok, "6 cases, max |diff| " + sci(worst)};
}

Outcome clausen_p4() {
  ParamSet ps;
  ps.p = "4";
  ps.m = 1;
  const auto r = verify("CLAUSEN_M1", ps, default_ctx());
  const bool ok = r.pass && r.abs_diff <= Real("1e-6") && r.rhs.bound <= Real("1e-8");
  return {ok, "|diff| " + sci(r.abs_diff) + ", Clausen side bound " + sci(r.rhs.bound)};
}

Outcome bernoulli() {
  const auto classic = catalog_check("BERN_CLASSIC", [](const IdentityReport& r) { return r.abs_diff == 0; });
  const auto gen = verify("GENFUN_B", find_identity("GENFUN_B").grid.front(), default_ctx());
  const bool ok = classic.pass && gen.pass && gen.abs_diff <= Real("1e-25");
  return {ok, "m <= 10 exact; generating function |diff| " + sci(gen.abs_diff)};
}

/// Recomputes randomly chosen rigorous evaluations at four times the cutoff.
Outcome bound_honesty() {
  std::mt19937 rng(20240611);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Rational xs[] = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1, 3)};
  auto random_x = [&] { return to_real(xs[pick(0, 3)]); };
  auto random_index = [&](bool admissible) {
    std::vector<unsigned> parts(pick(1, 3));
    for (auto& v : parts) v = pick(1, 3);
    if (admissible && parts.back() < 2) parts.back() = 2;
    return Composition(parts);
  };

  int checked = 0, failures = 0;
  Real worst_ratio = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const int kind = trial % 8;
    const long n = pick(30, 200);
    std::function<Evaluation(const PrecisionContext&)> call;
    switch (kind) {
      case 0: {
        const Real s = pick(2, 6), x = random_x();
        call = [=](const PrecisionContext& c) { return zeta_em(s, x, c); };
        break;
      }
      case 1: {
        const auto e = random_index(true);
        const Real x = random_x();
        call = [=](const PrecisionContext& c) { return eval_hurwitz_mzv(e, x, c); };
        break;
      }
      case 2: {
        const auto e = random_index(true);
        call = [=](const PrecisionContext& c) { return eval_t(e, c); };
        break;
      }
      case 3: {
        const auto v = random_index(false);
        const Real z = Real(pick(-7, 7)) / 10;
        call = [=](const PrecisionContext& c) { return eval_li(v, z, c); };
        break;
      }
      case 4: {
        const auto v = random_index(false);
        const Real p = pick(2, 4), x = random_x();
        const unsigned m = pick(0, 2);
        call = [=](const PrecisionContext& c) { return eval_ak_lhs(v, p, m, x, c); };
        break;
      }
      case 5: {
        const auto b = random_index(false);
        const Real p = pick(2, 4);
        const unsigned m = pick(0, 2);
        call = [=](const PrecisionContext& c) { return eval_inverse_binomial(b, m, p, c); };
        break;
      }
      case 6: {
        const Real p = pick(3, 8), x = random_x();
        const unsigned s = pick(1, 3);
        call = [=](const PrecisionContext& c) { return eval_euler_transform(p, s, x, c); };
        break;
      }
      default: {
        const unsigned order = pick(2, 3);
        const Real theta = Real(pick(1, 30)) / 10;
        call = [=](const PrecisionContext& c) { return clausen(order, theta, c); };
        break;
      }
    }
    PrecisionContext coarse = default_ctx(), fine = default_ctx();
    coarse.cutoff = n;
    fine.cutoff = 4 * n;
    const auto a = call(coarse);
    const auto b = call(fine);
    ++checked;
    if (a.bound_kind != BoundKind::rigorous || !(abs(a.value - b.value) < a.bound)) ++failures;
    if (a.bound > 0) worst_ratio = std::max(worst_ratio, Real(abs(a.value - b.value) / a.bound));
  }
  return {failures == 0, std::to_string(checked) + " calls, " + std::to_string(failures) +
                             " violations, max |shift|/bound " + sci(worst_ratio)};
}

}  // namespace

int main() {
  ScopedPrecision precision(50);
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit;
  };
  const Real kBoundCap8("1e-8"), kBoundCap6("1e-6");
  const Criterion criteria[] = {
      {"duality involution, weight <= 12", duality_involution, 1.0},
      {"numeric duality, weight <= 7",
       [&] { return catalog_check("DUAL", [&](const IdentityReport& r) { return r.bound <= kBoundCap8; }); }, 0},
      {"beta ratio coefficients equal Bell polynomials (exact)",
       [] { return catalog_check("BETARATIO", [](const IdentityReport& r) { return r.abs_diff == 0; }); }, 0},
      {"alternating binomial operator equals beta times Bell (exact)",
       [] { return catalog_check("PROP7", [](const IdentityReport& r) { return r.abs_diff == 0; }); }, 0},
      {"inverse binomial sum equals 7 zeta(3)", apery, 60.0},
      {"harmonic-weighted inverse binomial family, m = 0, 1, 2",
       [] { return catalog_check("COR3", [](const IdentityReport& r) { return r.abs_diff <= Real("1e-6"); }); }, 0},
      {"t-values against inverse binomial sums", cor4, 0},
      {"arcsine squared table", arcsin_table, 0},
      {"Bell-weighted beta sums against Hurwitz combinations",
       [&] { return catalog_check("THM3", [&](const IdentityReport& r) { return r.bound <= kBoundCap6; }); }, 0},
      {"geometric Bell sums against alternating harmonic sums, p = 3", eq62, 0},
      {"Clausen identity at p = 4", clausen_p4, 0},
      {"classical Bernoulli polynomials and generating function", bernoulli, 0},
      {"rigorous bounds survive a 4x cutoff", bound_honesty, 0},
  };

  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    if (!o.pass) ++failed;
    char time_text[32];
    std::snprintf(time_text, sizeof time_text, "%.2fs", seconds);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << (index < 10 ? " " : "") << index << "] " << c.name << " ("
              << o.detail << ", " << time_text << ")" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
