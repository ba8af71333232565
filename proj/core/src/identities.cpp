#include "akzeta/identities.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include <boost/math/constants/constants.hpp>

#include "akzeta/evaluator.hpp"
#include "akzeta/expression.hpp"
#include "akzeta/harmonic_bell.hpp"
#include "akzeta/powerseries.hpp"

namespace akzeta {

std::vector<std::pair<std::string, std::string>> ParamSet::entries() const {
  std::vector<std::pair<std::string, std::string>> out;
  if (alpha) out.emplace_back("alpha", alpha->str());
  if (m) out.emplace_back("m", std::to_string(*m));
  if (p) out.emplace_back("p", *p);
  if (x) out.emplace_back("x", x->str());
  if (q) out.emplace_back("q", std::to_string(*q));
  if (r) out.emplace_back("r", std::to_string(*r));
  if (z) out.emplace_back("z", z->str());
  if (t) out.emplace_back("t", t->str());
  return out;
}

std::string ParamSet::str() const {
  std::string out;
  for (const auto& [k, v] : entries()) {
    if (!out.empty()) out += ' ';
    out += k + '=' + v;
  }
  return out.empty() ? "-" : out;
}

std::string_view to_string(ToleranceClass c) {
  switch (c) {
    case ToleranceClass::exact: return "exact";
    case ToleranceClass::rigorous: return "rigorous";
    case ToleranceClass::estimated: return "estimated";
  }
  return "unknown";
}

std::optional<ToleranceClass> parse_tolerance_class(std::string_view text) {
  if (text == "exact") return ToleranceClass::exact;
  if (text == "rigorous") return ToleranceClass::rigorous;
  if (text == "estimated") return ToleranceClass::estimated;
  return std::nullopt;
}

namespace {


template <class T>
const T& need(const std::optional<T>& v, const char* name) {
  if (!v) throw DomainError(std::string("identity parameter '") + name + "' is required");
  return *v;
}

Real p_of(const ParamSet& ps) { return parse_real(need(ps.p, "p")); }
Real x_of(const ParamSet& ps) { return to_real(need(ps.x, "x")); }

Composition ones_then(unsigned count, std::vector<unsigned> tail) {
  std::vector<unsigned> parts(count, 1u);
  parts.insert(parts.end(), tail.begin(), tail.end());
  return Composition(std::move(parts));
}

/// (1, …, 1) of length n.
Composition ones(unsigned n) { return Composition(std::vector<unsigned>(n, 1u)); }

Evaluation scaled(Evaluation e, const Real& c) {
  e.value *= c;
  e.bound *= abs(c);
  return e;
}

/// A closed-form value at working precision.
Evaluation closed_form(const Real& v, const PrecisionContext& ctx, std::string method) {
  return {v, 16 * ctx.epsilon() * (abs(v) + 1), BoundKind::rigorous, std::move(method), 0};
}

Real power_of_two(int e) { return e >= 0 ? Real(Integer(1) << e) : Real(1) / Real(Integer(1) << -e); }

/// Σ_i c_i 3^{-i}: a display value for a vector of exact rationals.
Evaluation fingerprint(const std::vector<Rational>& values) {
  Rational acc = 0, w = 1;
  for (const auto& v : values) {
    acc += v * w;
    w /= 3;
  }
  return {to_real(acc), Real(0), BoundKind::exact, "exact-rational", 0};
}

/// Empty `ms` or `xs` leaves that field unset.
std::vector<ParamSet> admissible_grid(unsigned max_weight, std::vector<std::optional<unsigned>> ms,
                                      std::vector<std::optional<Rational>> xs) {
  if (ms.empty()) ms.emplace_back();
  if (xs.empty()) xs.emplace_back();
  std::vector<ParamSet> out;
  for (unsigned w = 2; w <= max_weight; ++w)
    for (const auto& c : admissible_compositions(w))
      for (const auto& m : ms)
        for (const auto& x : xs) {
          ParamSet ps;
          ps.alpha = c;
          ps.m = m;
          ps.x = x;
          out.push_back(ps);
        }
  return out;
}

const Rational kHalf(1, 2);
const Rational kMinusHalf(-1, 2);
const Rational kThird(1, 3);

Tolerance fixed(ToleranceClass c, double v) { return {c, v}; }

/// θ = 2 arcsin(1/√p).
Real theta_of(const Real& p) { return 2 * asin(1 / sqrt(p)); }

/// Σ_{|d|=m, d∈N^q} M_{q-1}(α,d) C(α_q+d_q,d_q) t(α+d with last part +1), raw α.
Evaluation t_combination(const Composition& raw, unsigned m, const PrecisionContext& ctx) {
  const std::size_t q = raw.depth();
  std::vector<Real> coefficients;
  std::vector<Evaluation> parts;
  for (const auto& d : weak_compositions(m, q)) {
    std::vector<unsigned> index(q);
    for (std::size_t j = 0; j < q; ++j) index[j] = raw[j] + d.parts[j];
    index[q - 1] += 1;
    coefficients.push_back(to_real(m_coeff(raw.parts().first(q - 1), std::span(d.parts).first(q - 1)) *
                                   binomial(raw[q - 1] + d.parts[q - 1], d.parts[q - 1])));
    parts.push_back(eval_t(Composition(std::move(index)), ctx));
  }
  return linear_combination(coefficients, parts, "t-value-combination");
}

std::vector<IdentityCase> build_catalog() {
  std::vector<IdentityCase> cat;
  const auto rigorous_8 = [](const ParamSet&) { return fixed(ToleranceClass::rigorous, 1e-8); };
  const auto rigorous_10 = [](const ParamSet&) { return fixed(ToleranceClass::rigorous, 1e-10); };
  const auto estimated_6 = [](const ParamSet&) { return fixed(ToleranceClass::estimated, 1e-6); };
  const auto exact = [](const ParamSet&) { return fixed(ToleranceClass::exact, 0); };

  // Raw index α (last part lowered) and the beta-sum index β of the dual side.
  const auto raw_alpha = [](const ParamSet& ps) { return need(ps.alpha, "alpha").with_last_shifted(-1); };
  const auto dual_beta = [](const ParamSet& ps) { return dual(need(ps.alpha, "alpha")).with_last_shifted(-1); };

  cat.push_back({
      "DUAL",
      "zeta(alpha; 0) = zeta(dual(alpha); 0) for admissible alpha",
      {"eval_hurwitz_mzv(alpha, x)",
       [](const ParamSet& ps, const PrecisionContext& ctx) { return eval_hurwitz_mzv(*ps.alpha, x_of(ps), ctx); }},
      {"eval_hurwitz_mzv(dual(alpha), x)",
       [](const ParamSet& ps, const PrecisionContext& ctx) {
         return eval_hurwitz_mzv(dual(need(ps.alpha, "alpha")), x_of(ps), ctx);
       }},
      rigorous_8,
      admissible_grid(7, {}, {Rational(0)}),
      "Duality realized combinatorially; both sides by nested sums with Euler-Maclaurin tails."});

  cat.push_back({
      "THM3",
      "sum over n_1<...<n_r of B(n_r,1+x) P_m(H_{n_r}(x)) / prod n_i^{beta_i} equals "
      "sum_{|d|=m} M_{q-1}(alpha,d) C(alpha_q+d_q,d_q) zeta(alpha_1+d_1, ..., alpha_q+d_q+1; x)",
      {"eval_ak_lhs(beta, p=1, m, x)",
       [dual_beta](const ParamSet& ps, const PrecisionContext& ctx) {
         return eval_ak_lhs(dual_beta(ps), Real(1), need(ps.m, "m"), x_of(ps), ctx);
       }},
      {"eval_ak_rhs(alpha, m, x)",
       [raw_alpha](const ParamSet& ps, const PrecisionContext& ctx) {
         return eval_ak_rhs(raw_alpha(ps), need(ps.m, "m"), x_of(ps), ctx);
       }},
      estimated_6,
      admissible_grid(5, {0, 1, 2}, {Rational(0), kHalf, kMinusHalf}),
      "alpha is the admissible composition; beta is its dual with the last part lowered by one."});

  cat.push_back({
      "EQ13_X0",
      "the beta-weighted Bell sum at x = 0 equals sum over (q+1)-tuples |d|=m of "
      "M_q(alpha,d) zeta(alpha_1+d_1, ..., alpha_q+d_q+d_{q+1}+1)",
      {"eval_ak_lhs(beta, p=1, m, x=0)",
       [dual_beta](const ParamSet& ps, const PrecisionContext& ctx) {
         return eval_ak_lhs(dual_beta(ps), Real(1), need(ps.m, "m"), x_of(ps), ctx);
       }},
      {"eval_ak_rhs_expanded(alpha, m, x=0)",
       [raw_alpha](const ParamSet& ps, const PrecisionContext& ctx) {
         return eval_ak_rhs_expanded(raw_alpha(ps), need(ps.m, "m"), x_of(ps), ctx);
       }},
      estimated_6,
      admissible_grid(4, {0, 1, 2}, {Rational(0)}),
      "Same statement as THM3 before the sum over d_{q+1} is collapsed."});

  {
    std::vector<ParamSet> grid;
    for (unsigned q = 1; q <= 3; ++q)
      for (unsigned m = 0; m <= 2; ++m) {
        ParamSet ps;
        ps.q = q;
        ps.m = m;
        grid.push_back(ps);
      }
    cat.push_back({
        "XI_Q",
        "xi_q(m+1) = sum_n P_m(H_n)/n^{q+1} = sum_{|d|=m} (d_q+1) zeta(d_1+1, ..., d_{q-1}+1, d_q+2)",
        {"eval_ak_lhs(v=(q), p=1, m, x=0)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return eval_ak_lhs(Composition{need(ps.q, "q")}, Real(1), need(ps.m, "m"), Real(0), ctx);
         }},
        {"sum (d_q+1) eval_hurwitz_mzv(d+1, 0)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const unsigned q = need(ps.q, "q");
           std::vector<Real> coefficients;
           std::vector<Evaluation> parts;
           for (const auto& d : weak_compositions(need(ps.m, "m"), q)) {
             std::vector<unsigned> index(q);
             for (unsigned j = 0; j < q; ++j) index[j] = d.parts[j] + 1;
             index[q - 1] += 1;
             coefficients.push_back(Real(d.parts[q - 1] + 1));
             parts.push_back(eval_hurwitz_mzv(Composition(std::move(index)), Real(0), ctx));
           }
           return linear_combination(coefficients, parts, "mzv-combination");
         }},
        estimated_6,
        grid,
        ""});
  }

  cat.push_back({
      "EQ53",
      "sum_{k_1<...<k_r} 4^{k_r} P_m(O_{k_r}) / (C(2k_r,k_r) k_1^{beta_1} ... k_r^{beta_r+1}) = "
      "2^{|alpha|+1} sum_{|d|=m} M_{q-1}(alpha,d) C(alpha_q+d_q,d_q) t(alpha+d)",
      {"eval_inverse_binomial(beta, m, p=1)",
       [dual_beta](const ParamSet& ps, const PrecisionContext& ctx) {
         return eval_inverse_binomial(dual_beta(ps), need(ps.m, "m"), Real(1), ctx);
       }},
      {"2^{|alpha|+1} * t-value combination(alpha, m)",
       [raw_alpha](const ParamSet& ps, const PrecisionContext& ctx) {
         const Composition raw = raw_alpha(ps);
         return scaled(t_combination(raw, need(ps.m, "m"), ctx), power_of_two(static_cast<int>(raw.weight()) + 1));
       }},
      estimated_6,
      admissible_grid(4, {0, 1, 2}, {}),
      "Inverse binomial side summed with 4^n/C(2n,n) and odd harmonic numbers directly."});

  {
    std::vector<ParamSet> grid;
    for (unsigned r = 1; r <= 3; ++r)
      for (unsigned m = 0; m <= 2; ++m) {
        ParamSet ps;
        ps.r = r;
        ps.m = m;
        grid.push_back(ps);
      }
    cat.push_back({
        "COR2",
        "zeta(r+m+1) = 2^m / (C(r+m,m)(2^{r+m+1}-1)) * sum_{k_1<...<k_r} 4^{k_r} P_m(O_{k_r}) / "
        "(C(2k_r,k_r) k_1 ... k_{r-1} k_r^2)",
        {"zeta_em(r+m+1, 0)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return zeta_em(Real(need(ps.r, "r") + need(ps.m, "m") + 1), Real(0), ctx);
         }},
        {"factor * eval_inverse_binomial((1^r), m, p=1)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const unsigned r = need(ps.r, "r"), m = need(ps.m, "m");
           const Real factor = power_of_two(static_cast<int>(m)) /
                               (to_real(binomial(r + m, m)) * (power_of_two(static_cast<int>(r + m + 1)) - 1));
           return scaled(eval_inverse_binomial(ones(r), m, Real(1), ctx), factor);
         }},
        estimated_6,
        grid,
        ""});
  }

  cat.push_back({
      "APERY",
      "sum_n 4^n O_n / (n^2 C(2n,n)) = 7 zeta(3)",
      {"eval_inverse_binomial((1), m=1, p=1)",
       [](const ParamSet&, const PrecisionContext& ctx) { return eval_inverse_binomial({1}, 1, Real(1), ctx); }},
      {"7 * zeta_em(3, 0)",
       [](const ParamSet&, const PrecisionContext& ctx) { return scaled(zeta_em(Real(3), Real(0), ctx), Real(7)); }},
      estimated_6,
      {ParamSet{}},
      ""});

  for (unsigned m = 0; m <= 2; ++m) {
    const char* ids[] = {"COR3_M0", "COR3_M1", "COR3_M2"};
    ParamSet ps;
    ps.m = m;
    cat.push_back({
        ids[m],
        "sum_n 4^n H_{n-1} P_m(O_n) / (n^2 C(2n,n)) = (m+1)(m+2)(2^{m+3}-1) / 2^{m+1} * zeta(m+3)",
        {"eval_inverse_binomial((1,1), m, p=1)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return eval_inverse_binomial({1, 1}, need(ps.m, "m"), Real(1), ctx);
         }},
        {"factor * zeta_em(m+3, 0)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const unsigned m = need(ps.m, "m");
           const Real factor = Real((m + 1) * (m + 2)) * (power_of_two(static_cast<int>(m + 3)) - 1) /
                               power_of_two(static_cast<int>(m + 1));
           return scaled(zeta_em(Real(m + 3), Real(0), ctx), factor);
         }},
        estimated_6,
        {ps},
        "m = 0, 1, 2 give 7 zeta(3), 45 zeta(4) and 93 zeta(5) after clearing the factor 2^{m+1}/2. "
        "External closed forms for m = 0 and m = 1 are cited but not implemented."});
  }

  {
    std::vector<ParamSet> grid;
    for (unsigned q = 1; q <= 3; ++q) {
      ParamSet ps;
      ps.q = q;
      ps.m = 0;
      grid.push_back(ps);
    }
    cat.push_back({
        "COR4_M0",
        "t({1}^{q-1}, 2) = sum_n 4^n / (C(2n,n) (2n)^{q+1})",
        {"eval_t(({1}^{q-1}, 2))",
         [](const ParamSet& ps, const PrecisionContext& ctx) { return eval_t(ones_then(need(ps.q, "q") - 1, {2}), ctx); }},
        {"2^{-q-1} * eval_inverse_binomial((q), 0, p=1)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const unsigned q = need(ps.q, "q");
           return scaled(eval_inverse_binomial(Composition{q}, 0, Real(1), ctx),
                         power_of_two(-static_cast<int>(q) - 1));
         }},
        estimated_6,
        grid,
        "q = 1 reduces to t(2) = pi^2/8."});
  }

  {
    std::vector<ParamSet> grid;
    for (unsigned q = 1; q <= 3; ++q) {
      ParamSet ps;
      ps.q = q;
      ps.m = 1;
      grid.push_back(ps);
    }
    cat.push_back({
        "COR4_M1",
        "2 t({1}^{q-1}, 3) + sum_{a+b=q-2} t({1}^a, 2, {1}^b, 2) = sum_n 4^n O_n / (C(2n,n) (2n)^{q+1})",
        {"2 eval_t(({1}^{q-1},3)) + sum eval_t(({1}^a,2,{1}^b,2))",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const unsigned q = need(ps.q, "q");
           std::vector<Real> coefficients{Real(2)};
           std::vector<Evaluation> parts{eval_t(ones_then(q - 1, {3}), ctx)};
           for (unsigned a = 0; a + 2 <= q; ++a) {
             const unsigned b = q - 2 - a;
             std::vector<unsigned> tail{2};
             tail.insert(tail.end(), b, 1u);
             tail.push_back(2);
             coefficients.push_back(Real(1));
             parts.push_back(eval_t(ones_then(a, tail), ctx));
           }
           return linear_combination(coefficients, parts, "t-value-combination");
         }},
        {"2^{-q-1} * eval_inverse_binomial((q), 1, p=1)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const unsigned q = need(ps.q, "q");
           return scaled(eval_inverse_binomial(Composition{q}, 1, Real(1), ctx),
                         power_of_two(-static_cast<int>(q) - 1));
         }},
        estimated_6,
        grid,
        ""});
  }

  {
    std::vector<ParamSet> grid;
    for (const auto& x : {Rational(0), kMinusHalf})
      for (unsigned m = 0; m <= 2; ++m) {
        ParamSet ps;
        ps.p = "3";
        ps.m = m;
        ps.x = x;
        grid.push_back(ps);
      }
    cat.push_back({
        "EQ62",
        "sum_n B(n,1+x) P_m(H_n(x)) / (n p^n) = sum_n (-1)^{n+1} H_n^{(m+1)}(x) / (n (p-1)^n)",
        {"eval_ak_lhs((1), p, m, x)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return eval_ak_lhs({1}, p_of(ps), need(ps.m, "m"), x_of(ps), ctx);
         }},
        {"eval_euler_transform(p, m+1, x)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return eval_euler_transform(p_of(ps), need(ps.m, "m") + 1, x_of(ps), ctx);
         }},
        rigorous_10,
        grid,
        ""});
  }

  {
    std::vector<ParamSet> grid;
    for (const char* p : {"3", "4"})
      for (unsigned m = 0; m <= 2; ++m) {
        ParamSet ps;
        ps.p = p;
        ps.m = m;
        grid.push_back(ps);
      }
    cat.push_back({
        "EQ63",
        "sum_n 2^{2n-1} P_m(O_n) / (n^2 p^n C(2n,n)) = sum_n (-1)^{n+1} O_n^{(m+1)} / (n (p-1)^n)",
        {"eval_inverse_binomial((1), m, p) / 2",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return scaled(eval_inverse_binomial({1}, need(ps.m, "m"), p_of(ps), ctx), Real(0.5));
         }},
        {"eval_euler_transform(p, m+1, -1/2) / 2^{m+1}",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const unsigned m = need(ps.m, "m");
           return scaled(eval_euler_transform(p_of(ps), m + 1, Real(-0.5), ctx),
                         power_of_two(-static_cast<int>(m) - 1));
         }},
        rigorous_10,
        grid,
        ""});
  }

  {
    std::vector<ParamSet> grid;
    for (const char* p : {"4", "2", "8+4*sqrt(3)", "6+2*sqrt(5)", "2*(5+sqrt(5))/5"}) {
      ParamSet ps;
      ps.p = p;
      grid.push_back(ps);
    }
    cat.push_back({
        "ARCSIN",
        "sum_n (-1)^{n+1} O_n / (n (p-1)^n) = theta^2/4 with theta = 2 arcsin(1/sqrt(p))",
        {"eval_euler_transform(p, 1, -1/2) / 2",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return scaled(eval_euler_transform(p_of(ps), 1, Real(-0.5), ctx), Real(0.5));
         }},
        {"theta^2/4",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const Real theta = theta_of(p_of(ps));
           return closed_form(theta * theta / 4, ctx, "arcsin-closed-form");
         }},
        [](const ParamSet& ps) {
          return p_of(ps) == 2 ? fixed(ToleranceClass::estimated, 1e-8) : fixed(ToleranceClass::rigorous, 1e-10);
        },
        grid,
        "p = 4, 2, 8+4 sqrt 3, 6+2 sqrt 5, 2(5+sqrt 5)/5 give pi^2/36, pi^2/16, pi^2/144, pi^2/100, pi^2/25."});
  }

  {
    std::vector<ParamSet> grid;
    for (const char* p : {"4", "2", "8+4*sqrt(3)"}) {
      ParamSet ps;
      ps.p = p;
      ps.m = 1;
      grid.push_back(ps);
    }
    cat.push_back({
        "CLAUSEN_M1",
        "sum_n 4^n O_n / (n^2 p^n C(2n,n)) = -2 Cl_3(theta) + 2 Cl_3(pi-theta) - theta Cl_2(pi-theta) "
        "- theta Cl_2(theta) + 7 zeta(3)/2",
        {"eval_inverse_binomial((1), 1, p)",
         [](const ParamSet& ps, const PrecisionContext& ctx) { return eval_inverse_binomial({1}, 1, p_of(ps), ctx); }},
        {"Clausen combination",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           PrecisionContext series_ctx = ctx;
           if (!series_ctx.target) series_ctx.target = 1e-10;
           const Real pi = boost::math::constants::pi<Real>();
           const Real theta = theta_of(p_of(ps));
           const std::vector<Evaluation> parts{clausen(3, theta, series_ctx), clausen(3, pi - theta, series_ctx),
                                               clausen(2, pi - theta, series_ctx), clausen(2, theta, series_ctx),
                                               zeta_em(Real(3), Real(0), ctx)};
           const std::vector<Real> coefficients{Real(-2), Real(2), Real(-theta), Real(-theta), Real(3.5)};
           return linear_combination(coefficients, parts, "clausen-combination");
         }},
        [](const ParamSet&) { return fixed(ToleranceClass::rigorous, 1e-6); },
        grid,
        ""});
  }

  const std::vector<Rational> exact_xs{Rational(0), kHalf, kMinusHalf, kThird};
  {
    std::vector<ParamSet> grid;
    for (const auto& x : exact_xs) {
      ParamSet ps;
      ps.x = x;
      grid.push_back(ps);
    }
    cat.push_back({
        "BETARATIO",
        "[z^m] B(n,1+x-z)/B(n,1+x) = P_m(H_n(x)) for n <= 20, m <= 8",
        {"series coefficients of prod_j (1 - z/(j+x))^{-1}", {},
         [](const ParamSet& ps) {
           const Rational x = need(ps.x, "x");
           std::vector<Rational> out;
           for (unsigned n = 1; n <= 20; ++n) {
             RatSeries product = exp_linear(Rational(0), 8);
             for (unsigned j = 1; j <= n; ++j) {
               RatSeries factor(8);
               factor[0] = 1;
               factor[1] = Rational(-1) / (x + j);
               product = series_mul(product, factor);
             }
             const RatSeries ratio = series_inverse(product);
             for (unsigned m = 0; m <= 8; ++m) out.push_back(ratio[m]);
           }
           return out;
         }},
        {"bell_modified(H_n(x))", {},
         [](const ParamSet& ps) {
           const ExactHarmonicTable h(20, 8, need(ps.x, "x"));
           std::vector<Rational> out;
           for (unsigned n = 1; n <= 20; ++n) {
             const auto row = h.row(n, 8);
             const auto p = bell_modified<Rational>(row);
             out.insert(out.end(), p.begin(), p.end());
           }
           return out;
         }},
        exact,
        grid,
        "Exact rational comparison of every coefficient."});
  }

  {
    std::vector<ParamSet> grid;
    for (const auto& x : exact_xs) {
      ParamSet ps;
      ps.x = x;
      grid.push_back(ps);
    }
    cat.push_back({
        "PROP7",
        "D(lambda_{m+1,x})(n) = B(n,1+x) P_m(H_n(x)) for n <= 20, m <= 6",
        {"d_operator(n, m+1, x)", {},
         [](const ParamSet& ps) {
           const Rational x = need(ps.x, "x");
           std::vector<Rational> out;
           for (unsigned n = 1; n <= 20; ++n)
             for (unsigned m = 0; m <= 6; ++m) out.push_back(d_operator(n, m + 1, x));
           return out;
         }},
        {"beta_factor(n, x) * P_m(H_n(x))", {},
         [](const ParamSet& ps) {
           const Rational x = need(ps.x, "x");
           const ExactHarmonicTable h(20, 6, x);
           std::vector<Rational> out;
           for (unsigned n = 1; n <= 20; ++n) {
             const Rational b = beta_factor(n, x);
             const auto row = h.row(n, 6);
             const auto p = bell_modified<Rational>(row);
             for (unsigned m = 0; m <= 6; ++m) out.push_back(b * p[m]);
           }
           return out;
         }},
        exact,
        grid,
        "Exact rational comparison of every entry."});
  }

  {
    std::vector<ParamSet> grid;
    for (const char* a : {"2", "1,2", "3"}) {
      ParamSet ps;
      ps.alpha = Composition::parse(a);
      ps.x = kHalf;
      ps.z = Rational(1, 4);
      grid.push_back(ps);
    }
    cat.push_back({
        "PROP2",
        "zeta(alpha; x-z) = sum_m z^m sum_{k_1<...<k_r} B(1+x,k_r) P_m(H_{k_r}(x)) / prod k_i^{beta_i}",
        {"eval_hurwitz_mzv(alpha, x-z)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return eval_hurwitz_mzv(need(ps.alpha, "alpha"), to_real(need(ps.x, "x") - need(ps.z, "z")), ctx);
         }},
        {"eval_prop2_series(alpha, x, z, 16 terms)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           return eval_prop2_series(need(ps.alpha, "alpha"), x_of(ps), to_real(need(ps.z, "z")), 16, ctx);
         }},
        estimated_6,
        grid,
        "Sixteen z-power terms; the omitted part is a geometric estimate."});
  }

  {
    ParamSet ps;
    ps.alpha = Composition{1, 2};
    ps.p = "2";
    ps.x = kThird;
    ps.t = Rational(1, 10);
    cat.push_back({
        "GENFUN_B",
        "sum_{m<=30} B^v_{p,m}(x) t^m/m! = e^{xt}/(e^t-1) Li_v((1-e^{-t})/p)",
        {"sum_{m<=30} ak_bernoulli_polys(v, p)(x) t^m/m!",
         [](const ParamSet& ps, const PrecisionContext&) {
           const Rational x = need(ps.x, "x"), t = need(ps.t, "t");
           const auto polys = ak_bernoulli_polys(need(ps.alpha, "alpha"), parse_rational(need(ps.p, "p")), 30);
           Rational sum = 0, t_pow = 1, last = 0;
           for (unsigned m = 0; m <= 30; ++m) {
             last = polys[m](x) * t_pow;
             sum += last;
             t_pow = t_pow * t / (m + 1);
           }
           // Radius of convergence is pi; omitted terms estimated geometrically.
           const Real ratio = to_real(t) / boost::math::constants::pi<Real>();
           return Evaluation{to_real(sum), 2 * abs(to_real(last)) * ratio / (1 - ratio), BoundKind::estimated,
                             "exact-polynomials", 30};
         }},
        {"e^{xt}/(e^t-1) * eval_li(v, (1-e^{-t})/p)",
         [](const ParamSet& ps, const PrecisionContext& ctx) {
           const Real x = x_of(ps), t = to_real(need(ps.t, "t")), p = p_of(ps);
           const Real prefactor = exp(x * t) / (exp(t) - 1);
           return scaled(eval_li(need(ps.alpha, "alpha"), (1 - exp(-t)) / p, ctx), prefactor);
         }},
        [](const ParamSet&) { return fixed(ToleranceClass::estimated, 1e-25); },
        {ps},
        "alpha holds the polylogarithm index v."});
  }

  {
    std::vector<ParamSet> grid;
    for (unsigned m = 0; m <= 10; ++m) {
      ParamSet ps;
      ps.m = m;
      grid.push_back(ps);
    }
    cat.push_back({
        "BERN_CLASSIC",
        "B^{(1)}_{1,m}(x) is the classical Bernoulli polynomial B_m(x)",
        {"ak_bernoulli_polys((1), p=1, m)", {},
         [](const ParamSet& ps) {
           const unsigned m = need(ps.m, "m");
           const auto polys = ak_bernoulli_polys({1}, Rational(1), m);
           const auto c = polys[m].coefficients();
           return std::vector<Rational>(c.begin(), c.end());
         }},
        {"bernoulli_polynomial(m)", {},
         [](const ParamSet& ps) {
           const PolyRat b = bernoulli_polynomial(need(ps.m, "m"));
           const auto c = b.coefficients();
           return std::vector<Rational>(c.begin(), c.end());
         }},
        exact,
        grid,
        ""});
  }

  cat.push_back({
      "TRELATION",
      "t(alpha) = 2^{-weight(alpha)} zeta(alpha; -1/2)",
      {"eval_t(alpha)", [](const ParamSet& ps, const PrecisionContext& ctx) { return eval_t(*ps.alpha, ctx); }},
      {"2^{-weight} * eval_hurwitz_mzv(alpha, -1/2)",
       [](const ParamSet& ps, const PrecisionContext& ctx) {
         const Composition& a = need(ps.alpha, "alpha");
         // Both sides share the nested-sum engine; a different cutoff keeps
         // the comparison from being bit-for-bit identical.
         PrecisionContext other = ctx;
         other.cutoff = 3 * eval_t(a, ctx).cutoff_used / 2 + 1;
         return scaled(eval_hurwitz_mzv(a, x_of(ps), other), power_of_two(-static_cast<int>(a.weight())));
       }},
      rigorous_8,
      admissible_grid(6, {}, {kMinusHalf}),
      "The Hurwitz side runs at 1.5 times the t-value cutoff."});

  return cat;
}

}  // namespace

const std::vector<IdentityCase>& catalog() {
  static const std::vector<IdentityCase> cat = build_catalog();
  return cat;
}

const IdentityCase& find_identity(std::string_view id) {
  for (const auto& c : catalog())
    if (c.id == id) return c;
  throw UnknownIdentity("unknown identity id '" + std::string(id) + "'");
}

std::vector<const IdentityCase*> select_identities(std::string_view selector) {
  std::vector<const IdentityCase*> out;
  for (const auto& c : catalog())
    if (c.id == selector) return {&c};
  for (const auto& c : catalog())
    if (c.id.starts_with(selector)) out.push_back(&c);
  if (out.empty()) throw UnknownIdentity("no identity matches '" + std::string(selector) + "'");
  return out;
}

IdentityReport verify(const IdentityCase& c, const ParamSet& params, const PrecisionContext& ctx) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport rep;
  rep.id = c.id;
  rep.params = params;
  rep.tolerance = c.tolerance(params);

  if (c.lhs.exact && c.rhs.exact) {
    const auto l = c.lhs.exact(params);
    const auto r = c.rhs.exact(params);
    rep.lhs = fingerprint(l);
    rep.rhs = fingerprint(r);
    rep.lhs.method = c.lhs.operation;
    rep.rhs.method = c.rhs.operation;
    rep.abs_diff = abs(rep.lhs.value - rep.rhs.value);
    rep.bound = 0;
    rep.bound_kind = BoundKind::exact;
    rep.pass = l == r;
  } else {
    rep.lhs = c.lhs.evaluate(params, ctx);
    rep.rhs = c.rhs.evaluate(params, ctx);
    rep.abs_diff = abs(rep.lhs.value - rep.rhs.value);
    rep.bound = rep.lhs.bound + rep.rhs.bound;
    rep.bound_kind = weakest(rep.lhs.bound_kind, rep.rhs.bound_kind);
    rep.pass = rep.abs_diff <= std::max<Real>(rep.bound, Real(rep.tolerance.value));
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

IdentityReport verify(std::string_view id, const ParamSet& params, const PrecisionContext& ctx) {
  return verify(find_identity(id), params, ctx);
}

VerifySummary verify_all(const VerifyFilter& filter, const PrecisionContext& ctx, unsigned threads) {
  ctx.validate();
  std::vector<const IdentityCase*> cases;
  if (filter.selector.empty()) {
    for (const auto& c : catalog()) cases.push_back(&c);
  } else {
    cases = select_identities(filter.selector);
  }

  std::vector<std::pair<const IdentityCase*, ParamSet>> jobs;
  for (const auto* c : cases)
    for (const auto& ps : c->grid)
      if (!filter.tolerance_class || c->tolerance(ps).cls == *filter.tolerance_class) jobs.emplace_back(c, ps);

  std::vector<std::optional<IdentityReport>> reports(jobs.size());
  if (threads <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) reports[i] = verify(*jobs[i].first, jobs[i].second, ctx);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, jobs.size()); ++t) {
      pool.emplace_back([&] {
        try {
          for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();)
            reports[i] = verify(*jobs[i].first, jobs[i].second, ctx);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = jobs.size();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  VerifySummary summary;
  summary.worst_abs_diff = 0;
  for (auto& rep : reports) {
    if (rep->pass) ++summary.passed;
    else ++summary.failed;
    if (rep->bound_kind != BoundKind::exact && rep->abs_diff > summary.worst_abs_diff) {
      summary.worst_abs_diff = rep->abs_diff;
      summary.worst_case = rep->id + " " + rep->params.str();
    }
    summary.reports.push_back(std::move(*rep));
  }
  return summary;
}

}  // namespace akzeta
