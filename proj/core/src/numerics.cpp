#include "akzeta/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "akzeta/harmonic_bell.hpp"
#include "akzeta/powerseries.hpp"

namespace akzeta {

namespace {

constexpr long kMaxCutoff = 10'000'000;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = bernoulli_numbers(160);
  return table;
}

bool is_integer_valued(const Real& s) { return s == floor(s) && s > 0 && s < 4096; }

/// (n + x)^{-s}, by repeated multiplication when s is a small integer.
Real inverse_power_real(const Real& base, const Real& s, bool integer_s, unsigned si) {
  return integer_s ? detail::inverse_power(base, si) : Real(pow(base, -s));
}

Real rising(const Real& a, unsigned k) {
  Real out = 1;
  for (unsigned i = 0; i < k; ++i) out *= a + i;
  return out;
}

}  // namespace

void PrecisionContext::validate() const {
  if (digits < 15) throw DomainError("precision must be at least 15 decimal digits");
  if (cutoff && *cutoff < 10) throw DomainError("cutoff must be at least 10");
  if (target && !(*target > 0)) throw DomainError("target tolerance must be positive");
}

Real PrecisionContext::tolerance() const {
  if (target) return Real(*target);
  return pow(Real(10), -static_cast<int>(digits));
}

Real PrecisionContext::epsilon() const { return pow(Real(10), 1 - static_cast<int>(digits)); }

ScopedPrecision::ScopedPrecision(unsigned digits) : previous_(Real::default_precision()) {
  Real::default_precision(digits);
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(previous_); }

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::exact: return "exact";
    case BoundKind::rigorous: return "rigorous";
    case BoundKind::estimated: return "estimated";
  }
  return "unknown";
}

BoundKind weakest(BoundKind a, BoundKind b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

Evaluation linear_combination(std::span<const Real> coefficients, std::span<const Evaluation> parts,
                              std::string method) {
  if (coefficients.size() != parts.size()) throw DomainError("linear_combination: length mismatch");
  Evaluation out{Real(0), Real(0), BoundKind::exact, std::move(method), 0};
  CompensatedSum value;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    value += coefficients[i] * parts[i].value;
    out.bound += abs(coefficients[i]) * parts[i].bound;
    out.bound_kind = weakest(out.bound_kind, parts[i].bound_kind);
    out.cutoff_used = std::max(out.cutoff_used, parts[i].cutoff_used);
  }
  out.value = value.value();
  return out;
}

void CompensatedSum::add(const Real& x) {
  Real t = sum_ + x;
  if (abs(sum_) >= abs(x)) carry_ += (sum_ - t) + x;
  else carry_ += (x - t) + sum_;
  sum_ = std::move(t);
}

std::vector<Real> euler_maclaurin_weights(unsigned count) {
  const auto& b = bernoulli_table();
  if (2 * count >= b.size()) throw DomainError("euler_maclaurin_weights: order too large");
  std::vector<Real> out;
  out.reserve(count);
  Rational factorial = 1;
  for (unsigned k = 1, j = 1; k <= count; ++k) {
    for (; j <= 2 * k; ++j) factorial *= j;
    out.push_back(to_real(b[2 * k] / factorial));
  }
  return out;
}

Real beta_factor(unsigned long n, const Real& x) {
  if (n < 1) throw DomainError("beta_factor: n must be >= 1");
  if (!(x > -1)) throw DomainError("beta_factor: x must satisfy x > -1");
  Real b = 1 / (1 + x);
  for (unsigned long j = 1; j < n; ++j) b = b * j / (j + 1 + x);
  return b;
}

Rational beta_factor(unsigned long n, const Rational& x) {
  if (n < 1) throw DomainError("beta_factor: n must be >= 1");
  if (!(x > -1)) throw DomainError("beta_factor: x must satisfy x > -1");
  Rational b = Rational(1) / (1 + x);
  for (unsigned long j = 1; j < n; ++j) b = b * j / (x + (j + 1));
  return b;
}

Real central_binomial_factor(unsigned long n) {
  Real f = 1;
  for (unsigned long j = 1; j <= n; ++j) f = f * (2 * j) / (2 * j - 1);
  return f;
}

Rational central_binomial_factor_exact(unsigned long n) {
  Rational f = 1;
  for (unsigned long j = 1; j <= n; ++j) f = f * (2 * j) / (2 * j - 1);
  return f;
}

Evaluation zeta_em(const Real& s, const Real& x, const PrecisionContext& ctx) {
  if (!(s > 1)) throw DivergenceError("zeta_em: the series diverges for s <= 1");
  if (!(x > -1)) throw DomainError("zeta_em: x must satisfy x > -1");
  constexpr unsigned kCorrections = 4;
  const auto weights = euler_maclaurin_weights(kCorrections + 1);

  long cutoff;
  if (ctx.cutoff) {
    cutoff = *ctx.cutoff;
  } else {
    // Smallest N whose first omitted correction |w_5| (s)_9 Y^{-s-9} meets the tolerance.
    const double sd = s.convert_to<double>();
    const double log_coeff = std::log(std::abs(weights.back().convert_to<double>())) +
                             std::log(rising(s, 2 * kCorrections + 1).convert_to<double>());
    const double log_tol = std::log(ctx.tolerance().convert_to<double>());
    const double y = std::exp((log_coeff - log_tol) / (sd + 2 * kCorrections + 1));
    cutoff = std::clamp(static_cast<long>(std::ceil(y - x.convert_to<double>())) + 1, 10L, kMaxCutoff);
  }

  const bool integer_s = is_integer_valued(s);
  const unsigned si = integer_s ? s.convert_to<unsigned>() : 0;
  CompensatedSum partial;
  for (long n = 1; n <= cutoff; ++n) partial += inverse_power_real(n + x, s, integer_s, si);

  const Real y = cutoff + x;
  Real tail = pow(y, 1 - s) / (s - 1) - pow(y, -s) / 2;
  for (unsigned k = 1; k <= kCorrections; ++k) tail += weights[k - 1] * rising(s, 2 * k - 1) * pow(y, -s - (2 * k - 1));
  Real bound = abs(weights[kCorrections]) * rising(s, 2 * kCorrections + 1) * pow(y, -s - (2 * kCorrections + 1));

  Evaluation out;
  out.value = partial.value() + tail;
  out.bound = bound + 4 * ctx.epsilon() * (abs(out.value) + 1) * (1 + log2(Real(cutoff)));
  out.bound_kind = BoundKind::rigorous;
  out.method = "partial-sum+euler-maclaurin";
  out.cutoff_used = cutoff;
  return out;
}

Evaluation clausen(unsigned order, const Real& theta, const PrecisionContext& ctx) {
  if (order != 2 && order != 3) throw DomainError("clausen: only orders 2 and 3 are supported");
  if (!isfinite(theta)) throw DomainError("clausen: theta must be finite");
  const Real half_sin = abs(sin(theta / 2));
  const Real tol = ctx.tolerance();
  auto tail_bound = [&](long n) {
    Real crude = pow(Real(n), 1 - static_cast<int>(order)) / (order - 1);
    if (half_sin > 0) {
      Real dirichlet = pow(Real(n + 1), -static_cast<int>(order)) / half_sin;
      if (dirichlet < crude) return dirichlet;
    }
    return crude;
  };

  long cutoff;
  if (ctx.cutoff) {
    cutoff = *ctx.cutoff;
  } else {
    cutoff = 16;
    while (cutoff < (1L << 22) && tail_bound(cutoff) > tol) cutoff *= 2;
  }

  const Real c1 = cos(theta), s1 = sin(theta);
  Real c = c1, s = s1;
  CompensatedSum sum;
  for (long n = 1; n <= cutoff; ++n) {
    const Real nn = n;
    if (order == 2) sum += s / (nn * nn);
    else sum += c / (nn * nn * nn);
    Real next_c = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = std::move(next_c);
  }

  Evaluation out;
  out.value = sum.value();
  out.bound = tail_bound(cutoff) + 8 * ctx.epsilon() * Real(cutoff);
  out.bound_kind = BoundKind::rigorous;
  out.method = "direct-series";
  out.cutoff_used = cutoff;
  return out;
}

Evaluation accelerate_alternating(const std::function<Real(long)>& term, const PrecisionContext& ctx) {
  const long n = ctx.cutoff ? *ctx.cutoff : static_cast<long>(std::ceil(1.31 * ctx.digits)) + 8;
  std::vector<Real> a;
  a.reserve(n);
  Real previous;
  for (long k = 1; k <= n; ++k) {
    Real t = term(k);
    if (t == 0) throw DiagnosticError("accelerate_alternating: zero term at n = " + std::to_string(k));
    if (k > 1 && sign(t) == sign(previous))
      throw DiagnosticError("accelerate_alternating: terms do not alternate at n = " + std::to_string(k));
    previous = t;
    a.push_back(k % 2 ? t : Real(-t));
  }

  // Algorithm 1 of Cohen, Rodriguez Villegas and Zagier.
  auto cvz = [&](long order) {
    Real d = pow(3 + sqrt(Real(8)), order);
    d = (d + 1 / d) / 2;
    Real b = -1;
    Real c = -d;
    Real s = 0;
    for (long k = 0; k < order; ++k) {
      c = b - c;
      s += c * a[k];
      b = b * (k + order) * (k - order) / ((k + Real(0.5)) * (k + 1));
    }
    return Real(s / d);
  };

  Evaluation out;
  out.value = cvz(n);
  const long lower = std::max(2L, (3 * n) / 4);
  out.bound = abs(out.value - cvz(lower)) + Real(n) * ctx.epsilon() * (abs(out.value) + 1);
  out.bound_kind = BoundKind::estimated;
  out.method = "cvz-alternating-acceleration";
  out.cutoff_used = n;
  return out;
}

std::vector<long> geometric_samples(long lo, long hi, std::size_t count) {
  if (lo < 1 || hi < lo) throw DomainError("geometric_samples: need 1 <= lo <= hi");
  std::vector<long> out;
  if (count == 0) return out;
  const double ratio = count > 1 ? std::pow(static_cast<double>(hi) / lo, 1.0 / (count - 1)) : 1.0;
  double v = static_cast<double>(lo);
  for (std::size_t i = 0; i < count; ++i, v *= ratio) {
    long n = std::clamp(std::lround(v), lo, hi);
    if (i + 1 == count) n = hi;
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  return out;
}

}  // namespace akzeta
