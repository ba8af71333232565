#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "akzeta/types.hpp"

namespace akzeta {

/// Working precision and truncation policy shared by every evaluation.
struct PrecisionContext {
  unsigned digits = 50;
  /// Forces the series cutoff N of every evaluator (otherwise each method
  /// picks its own from `digits` / `target`).
  std::optional<long> cutoff;
  /// Absolute truncation target for adaptively cut series. Defaults to 10^-digits.
  std::optional<double> target;
  /// Run nested sums block-parallel. Results are bit-identical either way.
  bool parallel = false;

  void validate() const;
  Real tolerance() const;
  /// Unit roundoff of the working precision.
  Real epsilon() const;
};

/// Sets the process-wide default precision for Real for its lifetime.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits);
  explicit ScopedPrecision(const PrecisionContext& ctx) : ScopedPrecision(ctx.digits) {}
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

enum class BoundKind { exact, rigorous, estimated };

std::string_view to_string(BoundKind kind);
/// The weaker of two guarantees (exact < rigorous < estimated).
BoundKind weakest(BoundKind a, BoundKind b);

/// A value together with a bound on |value - true value|.
struct Evaluation {
  Real value;
  Real bound;
  BoundKind bound_kind = BoundKind::rigorous;
  std::string method;
  long cutoff_used = 0;
};

/// Σ c_i · e_i with bounds Σ |c_i| · bound_i.
Evaluation linear_combination(std::span<const Real> coefficients, std::span<const Evaluation> parts,
                              std::string method);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  CompensatedSum() : sum_(0), carry_(0) {}
  void add(const Real& x);
  CompensatedSum& operator+=(const Real& x) {
    add(x);
    return *this;
  }
  Real value() const { return sum_ + carry_; }

 private:
  Real sum_;
  Real carry_;
};

/// Euler–Maclaurin weights B_{2k} / (2k)! for k = 1..count.
std::vector<Real> euler_maclaurin_weights(unsigned count);

/// B(n, 1+x) through B(1,1+x) = 1/(1+x), B(n+1,1+x) = B(n,1+x)·n/(n+1+x).
Real beta_factor(unsigned long n, const Real& x);
Rational beta_factor(unsigned long n, const Rational& x);

/// 4^n / C(2n, n) as Π_{j=1}^{n} 2j/(2j-1).
Real central_binomial_factor(unsigned long n);
Rational central_binomial_factor_exact(unsigned long n);

/// ζ(s; x) = Σ_{n≥1} (n+x)^{-s} for s > 1: partial sum to N plus four
/// Euler–Maclaurin corrections; the first omitted correction is a rigorous
/// bound since y^{-s} is completely monotone.
Evaluation zeta_em(const Real& s, const Real& x, const PrecisionContext& ctx);

/// Cl_2(θ) = Σ sin(nθ)/n², Cl_3(θ) = Σ cos(nθ)/n³ by direct summation. The tail
/// bound is the smaller of Σ_{n>N} n^{-k} ≤ N^{1-k}/(k-1) and the Dirichlet
/// bound (N+1)^{-k}/|sin(θ/2)|. The cutoff is the smallest power of two that
/// meets ctx.tolerance(), capped at 2^24.
Evaluation clausen(unsigned order, const Real& theta, const PrecisionContext& ctx);

/// Cohen–Rodriguez Villegas–Zagier acceleration of Σ_{n≥1} t_n with
/// alternating signs. `term(n)` is called for n = 1, 2, … in order. The bound
/// is estimated from the spread between two acceleration orders.
Evaluation accelerate_alternating(const std::function<Real(long)>& term, const PrecisionContext& ctx);

struct TermSample {
  long n;
  Real value;
};

/// Asymptotic term model a_n ≈ Σ_{k≤corrections} Σ_{j≤log_degree} A_{kj} n^{-γ-k} (ln n)^j.
struct TailModel {
  Real gamma;
  unsigned log_degree = 1;
  unsigned corrections = 0;
};

struct TailFitResult {
  /// Estimate of Σ_{n > cutoff} a_n.
  Real tail;
  /// Estimated error of `tail`, from refits with perturbed models/windows.
  Real bound;
  /// coefficients[k][j] = A_{kj}.
  std::vector<std::vector<Real>> coefficients;
};

/// Least-squares fit of the samples against the model, then Σ_{n>cutoff} of
/// the fitted model (integral plus Euler–Maclaurin end corrections).
/// Throws DiagnosticError when the fit is underdetermined or rank deficient.
TailFitResult tail_fit(std::span<const TermSample> samples, long cutoff, const TailModel& model);

/// Geometric sample points in [lo, hi], strictly increasing and unique.
std::vector<long> geometric_samples(long lo, long hi, std::size_t count);

}  // namespace akzeta
