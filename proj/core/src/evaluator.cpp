#include "akzeta/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "akzeta/harmonic_bell.hpp"
#include "akzeta/nested_sum.hpp"

namespace akzeta {

namespace {

constexpr long kMaxGeometricCutoff = 1L << 24;
constexpr unsigned kTailCorrections = 3;
/// Beyond this many log powers the fit basis becomes numerically degenerate.
constexpr unsigned kMaxLogDegree = 7;

long resolve_cutoff(const PrecisionContext& ctx, long fallback) { return ctx.cutoff ? *ctx.cutoff : fallback; }

/// Accumulated rounding of a nested sum of the given depth over `cutoff` terms.
Real roundoff(const PrecisionContext& ctx, std::size_t depth, long cutoff, const Real& value) {
  return 16 * Real(static_cast<unsigned long>((depth + 1) * (depth + 1))) * Real(cutoff) * ctx.epsilon() *
         (abs(value) + 1);
}

Real factorial(unsigned m) {
  Real out = 1;
  for (unsigned i = 2; i <= m; ++i) out *= i;
  return out;
}

/// Σ_k P_k(N) U_{k+1}(N) for pure power weights c_i (n + x)^{-e_i}.
Evaluation power_nested_sum(std::span<const unsigned> e, std::span<const Real> c, const Real& x, long cutoff,
                            const WeightFn& weights, const PrecisionContext& ctx, std::string method) {
  const auto sums = nested_sum(e.size(), cutoff, weights, {}, ctx.parallel);
  const auto tails = power_sum_tails(e, c, x, cutoff, ctx.digits);
  CompensatedSum value;
  Real bound = 0;
  for (std::size_t k = 0; k <= e.size(); ++k) {
    value += sums.prefix[k] * tails.values[k];
    bound += abs(sums.prefix[k]) * tails.bounds[k];
  }
  Evaluation out;
  out.value = value.value();
  out.bound = bound + roundoff(ctx, e.size(), cutoff, out.value);
  out.bound_kind = BoundKind::rigorous;
  out.method = std::move(method);
  out.cutoff_used = cutoff;
  return out;
}

/// Nested sum whose outermost weight is outer[n]; the tail beyond the cutoff
/// comes from a least-squares fit of sampled terms.
Evaluation fitted_nested_sum(std::size_t depth, long cutoff, const WeightFn& weights, const std::vector<Real>& outer,
                             const TailModel& model, const PrecisionContext& ctx, std::string method) {
  const std::size_t params = static_cast<std::size_t>(model.corrections + 1) * (model.log_degree + 1);
  const auto points = geometric_samples(std::max(1L, cutoff / 8), cutoff, std::max<std::size_t>(16, 4 * params));
  std::vector<long> checkpoints;
  checkpoints.reserve(points.size());
  for (long n : points) checkpoints.push_back(n - 1);

  const auto sums = nested_sum(depth, cutoff, weights, checkpoints, ctx.parallel);
  std::vector<TermSample> samples;
  samples.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    samples.push_back({points[i], sums.checkpoints[i][depth - 1] * outer[points[i]]});
  const auto fit = tail_fit(samples, cutoff, model);

  Evaluation out;
  out.value = sums.prefix[depth] + fit.tail;
  out.bound = fit.bound + roundoff(ctx, depth, cutoff, out.value);
  out.bound_kind = BoundKind::estimated;
  out.method = std::move(method);
  out.cutoff_used = cutoff;
  return out;
}

/// Smallest power-of-two cutoff whose (double precision) log tail estimate
/// falls below log(tol).
template <class LogTail>
long choose_cutoff(const PrecisionContext& ctx, LogTail log_tail) {
  const double log_tol = std::log(ctx.tolerance().convert_to<double>());
  long n = 32;
  while (n < kMaxGeometricCutoff && !(log_tail(static_cast<double>(n)) <= log_tol)) n *= 2;
  return n;
}

/// Large log degrees only occur for high Bell orders, whose terms are tiny;
/// a truncated model with fewer corrections keeps the fit well posed.
TailModel slow_tail_model(const Real& gamma, unsigned log_degree) {
  if (log_degree <= kMaxLogDegree - 2) return {gamma, log_degree, kTailCorrections};
  return {gamma, std::min(log_degree, kMaxLogDegree), 1};
}

unsigned count_ones(std::span<const unsigned> parts) {
  return static_cast<unsigned>(std::count(parts.begin(), parts.end(), 1u));
}

/// Weight function: n^{-v_i} for the inner levels, outer[n] for the last one.
WeightFn inner_power_weights(std::span<const unsigned> v, const std::vector<Real>& outer) {
  return [v, &outer](long n, std::span<Real> w) {
    const Real base = n;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) w[i] = detail::inverse_power(base, v[i]);
    w[v.size() - 1] = outer[n];
  };
}

}  // namespace

Evaluation eval_hurwitz_mzv(const Composition& e, const Real& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (!e.admissible()) throw DivergenceError("hurwitz mzv: composition " + e.str() + " is not admissible");
  if (!(x > -1)) throw DomainError("hurwitz mzv: x must satisfy x > -1");
  const long cutoff = resolve_cutoff(ctx, kDefaultMzvCutoff);
  const auto parts = e.parts();
  WeightFn weights = [&](long n, std::span<Real> w) {
    const Real base = n + x;
    for (std::size_t i = 0; i < parts.size(); ++i) w[i] = detail::inverse_power(base, parts[i]);
  };
  const std::vector<Real> unit(parts.size(), Real(1));
  return power_nested_sum(parts, unit, x, cutoff, weights, ctx, "nested-sum+euler-maclaurin");
}

Evaluation eval_t(const Composition& e, const PrecisionContext& ctx) {
  ctx.validate();
  if (!e.admissible()) throw DivergenceError("t-value: composition " + e.str() + " is not admissible");
  const long cutoff = resolve_cutoff(ctx, kDefaultMzvCutoff);
  const auto parts = e.parts();
  WeightFn weights = [&](long n, std::span<Real> w) {
    const Real base = 2 * n - 1;
    for (std::size_t i = 0; i < parts.size(); ++i) w[i] = detail::inverse_power(base, parts[i]);
  };
  // (2n-1)^{-e} = 2^{-e} (n - 1/2)^{-e} for the tail expansion.
  std::vector<Real> scale;
  for (unsigned part : parts) scale.push_back(detail::inverse_power(Real(2), part));
  return power_nested_sum(parts, scale, Real(-0.5), cutoff, weights, ctx, "odd-nested-sum+euler-maclaurin");
}

Evaluation eval_li(const Composition& v, const Real& z, const PrecisionContext& ctx) {
  ctx.validate();
  if (z == 1) {
    if (!v.admissible()) throw DivergenceError("li: Li_v(1) diverges for non-admissible v = " + v.str());
    auto out = eval_hurwitz_mzv(v, Real(0), ctx);
    out.method = "li-at-one:" + out.method;
    return out;
  }
  if (!(abs(z) < 1)) throw DomainError("li: requires |z| < 1 or z = 1");

  const std::size_t k = v.depth();
  const unsigned vk = v.back();
  const double az = abs(z).convert_to<double>();
  auto log_tail = [&](double n) {
    const double rho = std::pow(1 + 1 / (n + 1), static_cast<double>(k - 1)) * az;
    if (rho >= 1) return std::numeric_limits<double>::infinity();
    return (k - 1) * std::log(1 + std::log(n + 1)) - vk * std::log(n + 1) + (n + 1) * std::log(az) -
           std::log(1 - rho);
  };
  const long cutoff = z == 0 ? 10 : (ctx.cutoff ? *ctx.cutoff : choose_cutoff(ctx, log_tail));

  std::vector<Real> outer(cutoff + 1, Real(0));
  for (long n = 1; n <= cutoff; ++n) outer[n] = pow(z, n) * detail::inverse_power(Real(n), vk);
  const auto sums = nested_sum(k, cutoff, inner_power_weights(v.parts(), outer), {}, ctx.parallel);

  // c_n ≤ (1 + ln n)^{k-1} n^{-v_k}; the majorant ratio is at most (1 + 1/n)^{k-1}|z|.
  const Real n1 = cutoff + 1;
  const Real rho = pow(1 + 1 / n1, static_cast<int>(k - 1)) * abs(z);
  if (!(rho < 1)) throw DiagnosticError("li: cutoff too small for a geometric tail bound");
  const Real tail = pow(1 + log(n1), static_cast<int>(k - 1)) * pow(n1, -static_cast<int>(vk)) *
                    pow(abs(z), cutoff + 1) / (1 - rho);

  Evaluation out;
  out.value = sums.prefix[k];
  out.bound = tail + roundoff(ctx, k, cutoff, out.value);
  out.bound_kind = BoundKind::rigorous;
  out.method = "power-series+geometric-tail";
  out.cutoff_used = cutoff;
  return out;
}

Evaluation eval_ak_lhs(const Composition& v, const Real& p, unsigned m, const Real& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (!(p >= 1)) throw DomainError("ak: p must satisfy p >= 1");
  if (!(x > -1)) throw DomainError("ak: x must satisfy x > -1");
  const std::size_t k = v.depth();
  const unsigned vk = v.back();
  if (p == 1 && !(1 + x + vk > 1)) throw DivergenceError("ak: p = 1 requires (1 + x) + v_k > 1");

  long cutoff;
  if (ctx.cutoff) {
    cutoff = *ctx.cutoff;
  } else if (p == 1) {
    cutoff = kDefaultSlowCutoff;
  } else {
    const double xd = x.convert_to<double>(), log_p = std::log(p.convert_to<double>());
    auto log_tail = [&](double n) {
      const double rho = std::pow(1 + 1 / (n + 1), static_cast<double>(k)) * (m > 0 ? std::exp(1 / (n + 2 + xd)) : 1) /
                         std::exp(log_p);
      if (rho >= 1) return std::numeric_limits<double>::infinity();
      const double log_beta = std::lgamma(n + 1) + std::lgamma(1 + xd) - std::lgamma(n + 2 + xd);
      const double x_est = std::pow(1 + xd, -static_cast<double>(std::max(m, 1u))) + std::log(n + 2) + 1;
      return (k - 1) * std::log(1 + std::log(n + 1)) + log_beta + m * std::log(x_est + m) - std::lgamma(m + 1.0) -
             vk * std::log(n + 1) - (n + 1) * log_p - std::log(1 - rho);
    };
    cutoff = choose_cutoff(ctx, log_tail);
  }

  // outer[n] = B(n,1+x) P_m(H_n(x)) n^{-v_k} p^{-n} for n ≤ N+1, in one sequential pass.
  std::vector<Real> outer(cutoff + 2, Real(0));
  std::vector<Real> h(m, Real(0));
  Real beta = 0, inv_p_pow = 1, x_majorant = 0;
  const Real inv_p = 1 / p;
  for (long n = 1; n <= cutoff + 1; ++n) {
    const Real shifted = n + x;
    beta = n == 1 ? Real(1 / (1 + x)) : Real(beta * (n - 1) / shifted);
    const Real inv = 1 / shifted;
    Real power = inv;
    for (unsigned j = 0; j < m; ++j) {
      h[j] += power;
      power *= inv;
    }
    if (m > 0) x_majorant += std::max<Real>(inv, detail::inverse_power(shifted, m));
    inv_p_pow *= inv_p;
    outer[n] = beta * bell_modified_top<Real>(h) * detail::inverse_power(Real(n), vk) * inv_p_pow;
  }
  const WeightFn weights = inner_power_weights(v.parts(), outer);

  if (p == 1) {
    const TailModel model = slow_tail_model(1 + x + vk, count_ones(v.parts().first(k - 1)) + m);
    return fitted_nested_sum(k, cutoff, weights, outer, model, ctx, "bell-nested-sum+tail-fit");
  }

  const auto sums = nested_sum(k, cutoff, weights, {}, ctx.parallel);
  // Majorant M(n) = (1+ln n)^{k-1} B(n,1+x) (X_n+m)^m/m! n^{-v_k} p^{-n}, X_n ≥ every H_n^{(j)}(x).
  const Real n1 = cutoff + 1;
  Real rho = pow(1 + 1 / n1, static_cast<int>(k - 1)) / p;
  if (m > 0) rho *= pow(1 + 1 / (m * (n1 + 1 + x)), static_cast<int>(m));
  if (!(rho < 1)) throw DiagnosticError("ak: cutoff too small for a geometric tail bound");
  const Real majorant = pow(1 + log(n1), static_cast<int>(k - 1)) * beta * pow(x_majorant + m, static_cast<int>(m)) /
                        factorial(m) * detail::inverse_power(n1, vk) * inv_p_pow;

  Evaluation out;
  out.value = sums.prefix[k];
  out.bound = majorant / (1 - rho) + roundoff(ctx, k, cutoff, out.value);
  out.bound_kind = BoundKind::rigorous;
  out.method = "bell-nested-sum+geometric-tail";
  out.cutoff_used = cutoff;
  return out;
}

Evaluation eval_ak_rhs(const Composition& alpha, unsigned m, const Real& x, const PrecisionContext& ctx) {
  const std::size_t q = alpha.depth();
  std::vector<Real> coefficients;
  std::vector<Evaluation> parts;
  for (const auto& d : weak_compositions(m, q)) {
    std::vector<unsigned> index(q);
    for (std::size_t j = 0; j < q; ++j) index[j] = alpha[j] + d.parts[j];
    index[q - 1] += 1;
    const Integer c = m_coeff(alpha.parts().first(q - 1), std::span(d.parts).first(q - 1)) *
                      binomial(alpha[q - 1] + d.parts[q - 1], d.parts[q - 1]);
    coefficients.push_back(to_real(c));
    parts.push_back(eval_hurwitz_mzv(Composition(std::move(index)), x, ctx));
  }
  return linear_combination(coefficients, parts, "hurwitz-mzv-combination");
}

Evaluation eval_ak_rhs_expanded(const Composition& alpha, unsigned m, const Real& x, const PrecisionContext& ctx) {
  const std::size_t q = alpha.depth();
  std::vector<Real> coefficients;
  std::vector<Evaluation> parts;
  for (const auto& d : weak_compositions(m, q + 1)) {
    std::vector<unsigned> index(q);
    for (std::size_t j = 0; j < q; ++j) index[j] = alpha[j] + d.parts[j];
    index[q - 1] += d.parts[q] + 1;
    coefficients.push_back(to_real(m_coeff(alpha.parts(), std::span(d.parts).first(q))));
    parts.push_back(eval_hurwitz_mzv(Composition(std::move(index)), x, ctx));
  }
  return linear_combination(coefficients, parts, "hurwitz-mzv-combination-expanded");
}

Evaluation eval_inverse_binomial(const Composition& beta, unsigned m, const Real& p, const PrecisionContext& ctx) {
  ctx.validate();
  if (!(p >= 1)) throw DomainError("inverse binomial: p must satisfy p >= 1");
  const std::size_t r = beta.depth();
  const unsigned last = beta.back() + 1;

  long cutoff;
  if (ctx.cutoff) {
    cutoff = *ctx.cutoff;
  } else if (p == 1) {
    cutoff = kDefaultSlowCutoff;
  } else {
    const double log_p = std::log(p.convert_to<double>());
    auto log_tail = [&](double n) {
      const double rho = std::pow(1 + 1 / (n + 1), static_cast<double>(r)) * (m > 0 ? std::exp(1 / (2 * n + 3)) : 1) /
                         std::exp(log_p);
      if (rho >= 1) return std::numeric_limits<double>::infinity();
      const double o_est = 0.5 * std::log(n + 1) + 2;
      return (r - 1) * std::log(1 + std::log(n + 1)) + 0.5 * std::log(3.15 * (n + 1)) + m * std::log(o_est + m) -
             std::lgamma(m + 1.0) - last * std::log(n + 1) - (n + 1) * log_p - std::log(1 - rho);
    };
    cutoff = choose_cutoff(ctx, log_tail);
  }

  // outer[n] = 4^n/C(2n,n) P_m(O_n) n^{-β_r-1} p^{-n}.
  std::vector<Real> outer(cutoff + 2, Real(0));
  std::vector<Real> odd(m, Real(0));
  Real central = 1, inv_p_pow = 1;
  const Real inv_p = 1 / p;
  for (long n = 1; n <= cutoff + 1; ++n) {
    central = central * (2 * n) / (2 * n - 1);
    const Real inv = Real(1) / (2 * n - 1);
    Real power = inv;
    for (unsigned j = 0; j < m; ++j) {
      odd[j] += power;
      power *= inv;
    }
    inv_p_pow *= inv_p;
    outer[n] = central * bell_modified_top<Real>(odd) * detail::inverse_power(Real(n), last) * inv_p_pow;
  }
  const WeightFn weights = inner_power_weights(beta.parts(), outer);

  if (p == 1) {
    const TailModel model = slow_tail_model(Real(beta.back()) + Real(0.5), count_ones(beta.parts().first(r - 1)) + m);
    return fitted_nested_sum(r, cutoff, weights, outer, model, ctx, "inverse-binomial-nested-sum+tail-fit");
  }

  const auto sums = nested_sum(r, cutoff, weights, {}, ctx.parallel);
  // Majorant (1+ln n)^{r-1} 4^n/C(2n,n) (O_n+m)^m/m! n^{-β_r-1} p^{-n}; O_n^{(j)} ≤ O_n.
  const Real n1 = cutoff + 1;
  Real rho = pow(1 + 1 / n1, static_cast<int>(r - 1)) * (1 + 1 / (2 * n1 + 1)) / p;
  if (m > 0) rho *= pow(1 + 1 / (m * (2 * n1 + 1)), static_cast<int>(m));
  if (!(rho < 1)) throw DiagnosticError("inverse binomial: cutoff too small for a geometric tail bound");
  const Real o1 = m > 0 ? odd[0] : Real(0);
  const Real majorant = pow(1 + log(n1), static_cast<int>(r - 1)) * central * pow(o1 + m, static_cast<int>(m)) /
                        factorial(m) * detail::inverse_power(n1, last) * inv_p_pow;

  Evaluation out;
  out.value = sums.prefix[r];
  out.bound = majorant / (1 - rho) + roundoff(ctx, r, cutoff, out.value);
  out.bound_kind = BoundKind::rigorous;
  out.method = "inverse-binomial-nested-sum+geometric-tail";
  out.cutoff_used = cutoff;
  return out;
}

Evaluation eval_euler_transform(const Real& p, unsigned s, const Real& x, const PrecisionContext& ctx) {
  ctx.validate();
  if (!(p >= 2)) throw DomainError("euler transform: p must satisfy p >= 2");
  if (s < 1) throw DomainError("euler transform: s must be >= 1");
  if (!(x > -1)) throw DomainError("euler transform: x must satisfy x > -1");

  if (p == 2) {
    Real h = 0;
    long next = 1;
    auto term = [&](long n) {
      if (n != next) throw DiagnosticError("euler transform: terms requested out of order");
      ++next;
      h += detail::inverse_power(n + x, s);
      return Real(n % 2 ? h / n : -h / n);
    };
    auto out = accelerate_alternating(term, ctx);
    out.method = "alternating-harmonic+cvz";
    return out;
  }

  // Terms alternate and |t_{n+1}/t_n| ≤ 1/(p-1) < 1, so the first omitted term bounds the tail.
  const Real inv_q = 1 / (p - 1);
  const Real tol = ctx.tolerance();
  const long cap = ctx.cutoff ? *ctx.cutoff : kMaxGeometricCutoff;
  Real h = 0, q_pow = 1;
  CompensatedSum sum;
  long n = 1;
  Real term;
  for (;; ++n) {
    h += detail::inverse_power(n + x, s);
    q_pow *= inv_q;
    term = h * q_pow / n;
    if (n > cap || (!ctx.cutoff && term <= tol)) break;
    sum += n % 2 ? term : Real(-term);
  }

  Evaluation out;
  out.value = sum.value();
  out.bound = term + roundoff(ctx, 1, n - 1, out.value);
  out.bound_kind = BoundKind::rigorous;
  out.method = "alternating-harmonic-direct";
  out.cutoff_used = n - 1;
  return out;
}

Evaluation eval_prop2_series(const Composition& alpha, const Real& x, const Real& z, unsigned terms,
                             const PrecisionContext& ctx) {
  if (!alpha.admissible()) throw DivergenceError("prop2 series: composition " + alpha.str() + " is not admissible");
  if (!(x > -1)) throw DomainError("prop2 series: x must satisfy x > -1");
  if (!(abs(z) < x + 1)) throw DomainError("prop2 series: requires |z| < x + 1");
  if (terms < 1) throw DomainError("prop2 series: at least one term is required");
  const Composition beta = dual(alpha).with_last_shifted(-1);

  CompensatedSum value;
  Real bound = 0, z_pow = 1, last = 0;
  BoundKind kind = BoundKind::exact;
  long cutoff = 0;
  for (unsigned m = 0; m < terms; ++m) {
    const auto c = eval_ak_lhs(beta, Real(1), m, x, ctx);
    value += z_pow * c.value;
    bound += abs(z_pow) * c.bound;
    kind = weakest(kind, c.bound_kind);
    cutoff = std::max(cutoff, c.cutoff_used);
    last = abs(z_pow * c.value);
    z_pow *= z;
  }
  // Coefficients grow like m^{α_1-1} (1+x)^{-m}; estimate the omitted terms geometrically.
  const Real ratio = abs(z) / (1 + x) * pow(Real(terms + 1) / terms, static_cast<int>(alpha[0]));
  Real omitted = ratio < 1 ? Real(2 * last * ratio / (1 - ratio)) : Real(std::numeric_limits<double>::infinity());

  Evaluation out;
  out.value = value.value();
  out.bound = bound + omitted;
  out.bound_kind = weakest(kind, BoundKind::estimated);
  out.method = "z-power-series-of-ak-values";
  out.cutoff_used = cutoff;
  return out;
}

namespace {

template <class Outer>
Rational truncated_sum(const Composition& v, const Rational& p, unsigned n_max, Outer outer) {
  if (!(p >= 1)) throw DomainError("ak truncation: p must satisfy p >= 1");
  const std::size_t k = v.depth();
  // level[j] = Σ_{n_1<…<n_j ≤ n} Π_{i≤j} n_i^{-v_i}, level[0] = 1.
  std::vector<Rational> level(k, Rational(0));
  level[0] = 1;
  Rational total = 0, p_pow = 1;
  for (unsigned n = 1; n <= n_max; ++n) {
    p_pow *= p;
    const Rational nn = n;
    total += level[k - 1] * outer(n) * detail::inverse_power(nn, v.back()) / p_pow;
    for (std::size_t j = k - 1; j >= 1; --j) level[j] += level[j - 1] * detail::inverse_power(nn, v[j - 1]);
  }
  return total;
}

}  // namespace

Rational ak_lhs_truncated_exact(const Composition& v, const Rational& p, unsigned m, const Rational& x, unsigned n_max) {
  const ExactHarmonicTable h(n_max, std::max(m, 1u), x);
  return truncated_sum(v, p, n_max, [&](unsigned n) {
    const auto row = h.row(n, m);
    return beta_factor(n, x) * bell_modified_top<Rational>(row);
  });
}

Rational ak_lhs_truncated_d_operator(const Composition& v, const Rational& p, unsigned m, const Rational& x,
                                     unsigned n_max) {
  return truncated_sum(v, p, n_max, [&](unsigned n) { return d_operator(n, m + 1, x); });
}

}  // namespace akzeta
